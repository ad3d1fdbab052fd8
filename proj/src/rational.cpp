#include "hsk/rational.hpp"

namespace hsk {

Rational parse_rational(const std::string &text)
{
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational r(text, 10); // explicit base: leading zeros must not mean octal
        if (r.get_den() == 0) {
            throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
        }
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r(text, 10);
        r.canonicalize();
        return r;
    }
    // Decimal literal: digits after the dot become a power-of-ten denominator.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto frac_len = text.size() - dot - 1;
    Integer num(digits, 10);
    Integer den(1);
    for (std::size_t i = 0; i < frac_len; ++i) {
        den *= 10;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace hsk
