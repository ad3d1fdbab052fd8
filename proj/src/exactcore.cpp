#include "hsk/exactcore.hpp"

#include "hsk/errors.hpp"

namespace hsk {

Rational RationalPoly::eval(const Rational &t) const
{
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

void RationalPoly::trim()
{
    while (coeffs.size() > 1 && coeffs.back() == 0) {
        coeffs.pop_back();
    }
}

Rational pochhammer(const Rational &a, unsigned long n)
{
    Rational prod(1);
    Rational term(a);
    for (unsigned long i = 0; i < n; ++i) {
        prod *= term;
        term += 1;
    }
    return prod;
}

std::pair<Rational, Rational> chu_vandermonde(unsigned long n, const Rational &a,
                                              const Rational &c)
{
    // (c)_m must be nonzero for every m <= n before either side makes sense.
    {
        Rational cm(1);
        Rational f(c);
        for (unsigned long m = 1; m <= n; ++m) {
            cm *= f;
            if (cm == 0) {
                throw ZeroPochhammerInDenominator(
                    "chu_vandermonde: (c)_" + std::to_string(m) + " = 0");
            }
            f += 1;
        }
    }
    Rational lhs(0);
    Rational term(1); // m = 0 term: (-n)_0 (a)_0 / (0! (c)_0)
    Rational neg_n = -Rational(static_cast<long>(n));
    for (unsigned long m = 0; m <= n; ++m) {
        lhs += term;
        Rational mq(static_cast<long>(m));
        term *= (neg_n + mq) * (a + mq) / ((mq + 1) * (c + mq));
    }
    Rational rhs = pochhammer(c - a, n) / pochhammer(c, n);
    return {lhs, rhs};
}

Rational koebe_cd(int p, int q, int d)
{
    if (q < 1 || q > p) {
        throw DomainError("koebe_cd: requires p >= q >= 1");
    }
    if (d < 0 || d >= q) {
        throw DomainError("koebe_cd: requires 0 <= d <= q-1");
    }
    Rational front(factorial(static_cast<unsigned long>(p - 1)),
                   factorial(static_cast<unsigned long>(p - q)));
    front.canonicalize();
    Rational num = pochhammer(Rational(-q), static_cast<unsigned long>(d)) *
                   pochhammer(Rational(1 - q), static_cast<unsigned long>(d));
    Rational den = Rational(factorial(static_cast<unsigned long>(d))) *
                   pochhammer(Rational(p - q + 1), static_cast<unsigned long>(d));
    return front * num / den;
}

RationalPoly tq_polynomial(int p, int q)
{
    if (q < 1 || q > p) {
        throw DomainError("tq_polynomial: requires p >= q >= 1");
    }
    RationalPoly poly;
    poly.coeffs.reserve(static_cast<std::size_t>(q));
    for (int d = 0; d < q; ++d) {
        poly.coeffs.push_back(koebe_cd(p, q, d));
    }
    poly.trim();
    return poly;
}

Rational sharp_constant(const Rational &alpha, int p, int q)
{
    if (alpha <= -1) {
        throw DomainError("sharp_constant: requires alpha > -1");
    }
    if (p < 1 || q < 1) {
        throw DomainError("sharp_constant: requires p, q >= 1");
    }
    const unsigned long s = static_cast<unsigned long>(p + q);
    Integer fact = factorial(s - 1);
    Rational out(fact * fact);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * s);
    out /= two_pow;
    // Gamma(alpha+2+2p+2q)/Gamma(alpha+2) = (alpha+2)_{2p+2q}
    out *= pochhammer(alpha + 2, 2 * s);
    // [Gamma(alpha/2+1)/Gamma(alpha/2+1+p+q)]^2 = 1/[(alpha/2+1)_{p+q}]^2
    Rational half = alpha / 2 + 1;
    Rational ph = pochhammer(half, s);
    out /= ph * ph;
    return out;
}

Rational g0_mult_norm_sq(const Rational &alpha, const Rational &beta)
{
    if (alpha <= -1 || beta <= alpha) {
        throw DomainError("g0_mult_norm_sq: requires beta > alpha > -1");
    }
    Rational gap = beta - alpha;
    if (gap.get_den() != 1 || gap.get_num() % 2 != 0) {
        throw DomainError("g0_mult_norm_sq: beta - alpha must be an even positive integer");
    }
    const unsigned long g = mpz_get_ui(gap.get_num().get_mpz_t());
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, g);
    Rational out(1, two_pow);
    out.canonicalize();
    out *= pochhammer(alpha + 2, g);
    Rational ph = pochhammer(alpha / 2 + 1, g / 2);
    out /= ph * ph;
    return out;
}

ClassicalBounds classical_bounds(const Rational &alpha, int p, int q)
{
    if (alpha <= -1) {
        throw DomainError("classical_bounds: requires alpha > -1");
    }
    if (p < 1 || q < 1) {
        throw DomainError("classical_bounds: requires p, q >= 1");
    }
    ClassicalBounds b;
    b.bloch_sq = factorial(static_cast<unsigned long>(2 * p - 1)) *
                 factorial(static_cast<unsigned long>(2 * q - 1));
    const int m = p < q ? p : q;
    b.donaire_sq = Rational(b.bloch_sq) * (alpha + 2 * m + 1) / (alpha + 1);
    b.shimorin_sq = Rational(36) * (alpha + 3) / (alpha + 1);
    return b;
}

Rational factorial_gap(int p, int q)
{
    if (p < 1 || q < 1) {
        throw DomainError("factorial_gap: requires p, q >= 1");
    }
    Integer a = factorial(static_cast<unsigned long>(2 * p - 1)) *
                factorial(static_cast<unsigned long>(2 * q - 1));
    Integer f = factorial(static_cast<unsigned long>(p + q - 1));
    return Rational(a - f * f);
}

} // namespace hsk
