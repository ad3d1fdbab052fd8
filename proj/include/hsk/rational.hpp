#ifndef HSK_RATIONAL_HPP
#define HSK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hsk {

// Arbitrary-precision rational scalar. GMP keeps values canonical
// (lowest terms, positive denominator); arithmetic never rounds.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den", or a plain decimal like "-1.25".
Rational parse_rational(const std::string &text);

std::string rational_to_string(const Rational &r);

inline double to_double(const Rational &r)
{
    return r.get_d();
}

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

} // namespace hsk

#endif
