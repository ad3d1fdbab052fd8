#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsk/errors.hpp"
#include "hsk/series.hpp"

using namespace hsk;

namespace {

UniSeries<Rational> geometric(int order)
{
    UniSeries<Rational> s(order);
    for (int n = 0; n <= order; ++n) {
        s.at(n) = 1;
    }
    return s;
}

} // namespace

TEST_CASE("multiplication against hand expansion")
{
    UniSeries<Rational> a(4); // 1 + z
    a.at(0) = 1;
    a.at(1) = 1;
    auto sq = uni_mul(a, a);
    CHECK(sq.at(0) == 1);
    CHECK(sq.at(1) == 2);
    CHECK(sq.at(2) == 1);
    CHECK(sq.at(3) == 0);
    auto cube = uni_mul(sq, a);
    CHECK(cube.at(3) == 1);
    CHECK(cube.at(2) == 3);
}

TEST_CASE("reciprocal of 1-z is the geometric series")
{
    UniSeries<Rational> a(10);
    a.at(0) = 1;
    a.at(1) = -1;
    auto r = uni_reciprocal(a);
    for (int n = 0; n <= 10; ++n) {
        CHECK(r.at(n) == 1);
    }
    UniSeries<Rational> zero_const(3);
    zero_const.at(1) = 1;
    CHECK_THROWS_AS(uni_reciprocal(zero_const), ZeroConstantTerm);
}

TEST_CASE("log of the geometric series is sum z^n / n")
{
    auto l = uni_log(geometric(12));
    CHECK(l.at(0) == 0);
    for (int n = 1; n <= 12; ++n) {
        CHECK(l.at(n) == make_rational(1, n));
    }
    UniSeries<Rational> bad(3);
    bad.at(0) = 2;
    CHECK_THROWS_AS(uni_log(bad), ConstantTermNotOne);
}

TEST_CASE("derivative and dilation")
{
    auto g = geometric(8);
    auto d = uni_derivative(g); // 1/(1-z)^2 => n+1
    for (int n = 0; n <= 7; ++n) {
        CHECK(d.at(n) == Rational(n + 1));
    }
    auto h = dilate(g, make_rational(1, 2));
    for (int n = 0; n <= 8; ++n) {
        Rational pw(1);
        for (int i = 0; i < n; ++i) {
            pw /= 2;
        }
        CHECK(h.at(n) == pw);
    }
}

TEST_CASE("evaluation uses Horner and matches closed form")
{
    auto g = geometric(20);
    // partial geometric sum at 1/3: (1 - (1/3)^21) / (1 - 1/3)
    Rational x = make_rational(1, 3);
    Rational pw(1);
    for (int i = 0; i < 21; ++i) {
        pw *= x;
    }
    CHECK(uni_eval(g, x) == (Rational(1) - pw) / (Rational(1) - x));
}

TEST_CASE("truncation cannot extend the known order")
{
    auto g = geometric(5);
    CHECK(uni_truncate(g, 3).order == 3);
    CHECK_THROWS_AS(uni_truncate(g, 6), OrderExhausted);
}

TEST_CASE("divided difference of z + z^2")
{
    UniSeries<Rational> f(9);
    f.at(1) = 1;
    f.at(2) = 1;
    auto dd = divided_difference(f, 4); // 1 + z + w
    CHECK(dd.at(0, 0) == 1);
    CHECK(dd.at(1, 0) == 1);
    CHECK(dd.at(0, 1) == 1);
    CHECK(dd.at(1, 1) == 0);
    CHECK(dd.at(2, 2) == 0);
    CHECK(is_symmetric(dd));
}

TEST_CASE("divided difference preconditions")
{
    UniSeries<Rational> not_normalized(9);
    not_normalized.at(0) = 1;
    not_normalized.at(1) = 1;
    CHECK_THROWS_AS(divided_difference(not_normalized, 4), NotNormalized);
    UniSeries<Rational> short_f(5);
    short_f.at(1) = 1;
    CHECK_THROWS_AS(divided_difference(short_f, 4), OrderExhausted);
}

TEST_CASE("bivariate log of 1 - zw")
{
    // log(1 - zw) = -sum_{m>=1} (zw)^m / m : diagonal only.
    BiSeries<Rational> a(8);
    a.at(0, 0) = 1;
    a.at(1, 1) = -1;
    auto l = bi_log(a);
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
            if (i == j && i > 0) {
                CHECK(l.at(i, j) == make_rational(-1, i));
            } else {
                CHECK(l.at(i, j) == 0);
            }
        }
    }
}

TEST_CASE("bivariate product matches separable factorization")
{
    std::mt19937 rng(4711);
    std::uniform_int_distribution<long> coef(-5, 5);
    UniSeries<Rational> u(6), v(6);
    for (int n = 0; n <= 6; ++n) {
        u.at(n) = Rational(coef(rng));
        v.at(n) = Rational(coef(rng));
    }
    // A(z,w) = u(z) v(w) times B(z,w) = v(z) u(w) is symmetric.
    BiSeries<Rational> a(6), b(6);
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            a.at(i, j) = u.at(i) * v.at(j);
            b.at(i, j) = v.at(i) * u.at(j);
        }
    }
    auto prod = bi_mul(a, b);
    CHECK(is_symmetric(prod));
    auto uv = uni_mul(u, v);
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            CHECK(prod.at(i, j) == uv.at(i) * uv.at(j));
        }
    }
}

TEST_CASE("partial derivatives against stepwise differentiation")
{
    std::mt19937 rng(2025);
    BiSeries<Rational> a(10);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            a.at(i, j) = Rational(coef(rng));
        }
    }
    auto d21 = bi_partial(a, 2, 1);
    // oracle: d/dz twice then d/dw once, one step at a time
    for (int i = 0; i + 2 <= 10 && i <= d21.order; ++i) {
        for (int j = 0; j + 1 <= 10 && j <= d21.order; ++j) {
            const Rational expect =
                Rational((i + 1) * (i + 2)) * Rational(j + 1) * a.at(i + 2, j + 1);
            CHECK(d21.at(i, j) == expect);
        }
    }
    CHECK_THROWS_AS(bi_partial(a, 6, 5), OrderExhausted);
}

TEST_CASE("diagonal restriction sums the antidiagonals")
{
    // diagonal(A) is the series of A(z, z): coefficient n is sum_{i+j=n} a_{ij}.
    BiSeries<Rational> a(5);
    for (int i = 0; i <= 5; ++i) {
        for (int j = 0; j <= 5; ++j) {
            a.at(i, j) = Rational(10 * i + j);
        }
    }
    auto d = diagonal(a);
    CHECK(d.order == 5);
    for (int n = 0; n <= 5; ++n) {
        Rational expect(0);
        for (int i = 0; i <= n; ++i) {
            expect += Rational(10 * i + (n - i));
        }
        CHECK(d.at(n) == expect);
    }
}

TEST_CASE("float backend round trip")
{
    UniSeries<std::complex<double>> a(6);
    a.at(0) = {1.0, 0.0};
    a.at(1) = {-0.5, 0.25};
    auto r = uni_reciprocal(a);
    auto prod = uni_mul(a, r);
    CHECK(std::abs(prod.at(0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    for (int n = 1; n <= 6; ++n) {
        CHECK(std::abs(prod.at(n)) < 1e-15);
    }
}
