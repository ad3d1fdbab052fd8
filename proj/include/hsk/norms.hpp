#ifndef HSK_NORMS_HPP
#define HSK_NORMS_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "hsk/schwarzian.hpp"
#include "hsk/series.hpp"

namespace hsk {

// Bergman coefficient weights w_m = m! Gamma(alpha+2) / Gamma(m+alpha+2),
// computed by the ratio recurrence w_m = w_{m-1} * m / (alpha+m+1).
std::vector<double> bergman_weights(double alpha, int order);
std::vector<Rational> bergman_weights_exact(const Rational &alpha, int order);

// Coefficient-decay certificate |a_n| <= C (n+1)^s rho^n with rho < 1,
// used to bound the tail of a truncated Bergman norm.
struct TailCertificate {
    double C;
    double s;
    double rho;
};

struct BergmanNormResult {
    double partial;                      // always a valid lower bound
    std::optional<double> certified_tail; // upper bound on the dropped tail
};

BergmanNormResult bergman_norm_sq(const UniSeries<Complex> &phi, double alpha,
                                  const std::optional<TailCertificate> &cert = std::nullopt);
Rational bergman_norm_sq_exact(const UniSeries<Rational> &phi, const Rational &alpha);

enum class AsymptoticBranch { subcritical, critical, supercritical };

struct TestFamilyParams {
    double r;      // in (0,1)
    double lambda; // > 0
    int theta_exp; // nonnegative
    double alpha;  // > -1
};

AsymptoticBranch branch_of(const TestFamilyParams &p);

// || (sqrt(r) z)^Theta (1-rz^2)^{-lambda} ||_alpha^2 summed to additive
// accuracy tol with a ratio-test remainder bound.
double test_family_norm_sq(const TestFamilyParams &params, double tol);

// Gamma(alpha+2) Gamma(2 lambda - alpha - 2) / (2^{alpha+1} Gamma(lambda)^2):
// the supercritical constant with norm^2 ~ constant / (1-r^2)^{2lambda-alpha-2}.
double asymptotic_constant(double alpha, double lambda, int theta_exp = 0);

struct SubcriticalCheck {
    bool bounded;
    double empirical_max;
};

SubcriticalCheck subcritical_bounded_check(double alpha, double lambda,
                                           const std::vector<double> &r_grid);

struct GridSpec {
    int radial = 64;
    int angular = 96;
    double r_max = 1.0 - 1e-8;
};

struct GrowthNormEstimate {
    double gamma;
    double lower_estimate; // true lower bound: max over evaluated points
    GridSpec grid;
    std::vector<double> refinement_history;
    bool diverging = false;
};

// sup_z |phi(z)| (1-|z|^2)^gamma estimated from below on a deterministic
// polar grid with two refinement rounds around the argmax.
GrowthNormEstimate growth_norm(const std::function<double(const Complex &)> &abs_phi,
                               double gamma, const GridSpec &grid);

struct BlochCheck {
    double estimate;
    double bound; // sqrt((2p-1)!(2q-1)!)
};

// Growth-norm estimate of S_f^{[p,q]} at gamma = p+q against the Grunsky
// inequality bound. The Koebe entry evaluates its closed form; other
// functions evaluate a truncated series on a radially capped grid.
BlochCheck bloch_bound_check(const FunctionSpec &f, int p, int q, const GridSpec &grid);
// Same check from a precomputed F (avoids rebuilding it per (p,q)).
BlochCheck bloch_bound_check_from_F(const BiSeries<Complex> &F, int p, int q,
                                    const GridSpec &grid);

// Direct two-dimensional quadrature of (alpha+1) iint |phi|^2 (1-|z|^2)^alpha
// dA/pi for polynomial phi; the independent oracle for the coefficient formula.
double disk_norm_sq_quadrature(const UniSeries<Complex> &poly, double alpha);

} // namespace hsk

#endif
