#ifndef HSK_EXACTCORE_HPP
#define HSK_EXACTCORE_HPP

#include <utility>
#include <vector>

#include "hsk/rational.hpp"

namespace hsk {

// Polynomial with exact rational coefficients, indexed by degree.
// Trailing coefficient is nonzero unless the polynomial is zero.
struct RationalPoly {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational eval(const Rational &t) const;
    void trim();
};

// Shifted factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational &a, unsigned long n);

// Both sides of the terminating Chu-Vandermonde identity
// sum_{m<=n} (-n)_m (a)_m / (m! (c)_m) = (c-a)_n / (c)_n.
// Throws ZeroPochhammerInDenominator when some (c)_m vanishes.
std::pair<Rational, Rational> chu_vandermonde(unsigned long n, const Rational &a,
                                              const Rational &c);

// Coefficient C_d of t^d in T_q for the Koebe closed form, p >= q >= 1,
// 0 <= d <= q-1. Always strictly positive.
Rational koebe_cd(int p, int q, int d);

// T_q(t) = sum_d C_d t^d; degree exactly q-1, T_q(1) = (p+q-1)!/p!.
RationalPoly tq_polynomial(int p, int q);

// The sharp squared multiplier norm N_{alpha,p,q} of S_kappa^{[p,q]} from
// A^2_alpha to A^2_{alpha+2p+2q}, evaluated exactly through Pochhammer
// reductions of the Gamma ratios. Symmetric in (p, q).
Rational sharp_constant(const Rational &alpha, int p, int q);

// Squared multiplier norm of g_0(z) = (1-z^2)^{-(beta-alpha)/2} from
// A^2_alpha to A^2_beta. Requires beta - alpha an even positive integer.
Rational g0_mult_norm_sq(const Rational &alpha, const Rational &beta);

struct ClassicalBounds {
    Rational donaire_sq;  // (2p-1)!(2q-1)! (alpha+2min{p,q}+1)/(alpha+1)
    Rational shimorin_sq; // 36 (alpha+3)/(alpha+1)
    Integer bloch_sq;     // (2p-1)!(2q-1)!
};

ClassicalBounds classical_bounds(const Rational &alpha, int p, int q);

// (2p-1)!(2q-1)! - [(p+q-1)!]^2; positive iff p != q, zero iff p = q.
Rational factorial_gap(int p, int q);

} // namespace hsk

#endif
