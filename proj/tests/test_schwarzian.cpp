#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hsk/errors.hpp"
#include "hsk/schwarzian.hpp"

using namespace hsk;

TEST_CASE("catalog coefficients")
{
    auto koebe = catalog_function(CatalogId::koebe);
    for (int n = 1; n <= 10; ++n) {
        CHECK(koebe.coeff_exact(n) == Rational(n));
    }
    auto strip = catalog_function(CatalogId::strip);
    CHECK(strip.coeff_exact(1) == 1);
    CHECK(strip.coeff_exact(2) == 0);
    CHECK(strip.coeff_exact(3) == make_rational(1, 3));
    CHECK(strip.coeff_exact(5) == make_rational(1, 5));
    auto cayley = catalog_function("cayley_halfplane");
    for (int n = 1; n <= 6; ++n) {
        CHECK(cayley.coeff_exact(n) == 1);
    }
    auto parabola = catalog_function(CatalogId::parabola);
    CHECK(parabola.coeff_exact(2) == make_rational(-1, 2));
    CHECK(parabola.coeff_exact(3) == 0);
    CHECK_THROWS_AS(catalog_function("nope"), DomainError);
}

TEST_CASE("rotated koebe uses the float backend with unit-modulus factors")
{
    auto rot = catalog_function(CatalogId::koebe_rotated, 0.7);
    CHECK(rot.float_backend);
    for (int n = 1; n <= 8; ++n) {
        CHECK(std::abs(std::abs(rot.coeff_float(n)) - n) < 1e-12);
    }
}

TEST_CASE("custom function parsing")
{
    auto f = function_from_json(
        R"({"label": "poly", "coefficients": ["1", "-1/2", "0.25"]})");
    CHECK(f.label == "poly");
    CHECK_FALSE(f.float_backend);
    CHECK(f.coeff_exact(2) == make_rational(-1, 2));
    CHECK(f.coeff_exact(3) == make_rational(1, 4));
    CHECK(f.coeff_exact(9) == 0);

    auto g = function_from_json(R"({"label": "flt", "coefficients": [1, 0.125]})");
    CHECK(g.float_backend);

    CHECK_THROWS_AS(function_from_json(R"({"label": "bad", "coefficients": [2, 1]})"),
                    NotNormalized);
    CHECK_THROWS_AS(function_from_json(R"({"label": "bad", "coefficients": []})"),
                    DomainError);
}

TEST_CASE("koebe F is log(1-zw)")
{
    auto F = build_F(catalog_function(CatalogId::koebe), 12);
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; j <= 12; ++j) {
            if (i == j && i > 0) {
                CHECK(F.at(i, j) == make_rational(-1, i));
            } else {
                CHECK(F.at(i, j) == 0);
            }
        }
    }
}

TEST_CASE("koebe grunsky coefficients are -delta/n")
{
    auto g = grunsky(catalog_function(CatalogId::koebe), 20);
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= 20; ++k) {
            CHECK(g.at(n, k) == (n == k ? make_rational(-1, n) : Rational(0)));
        }
    }
}

TEST_CASE("koebe closed form structure and values")
{
    auto cf = koebe_closed_form(3, 2);
    CHECK(cf.prefactor == Integer(-6));
    CHECK(cf.monomial_power == 1);
    CHECK(cf.pole_order == 5);
    REQUIRE(cf.cd.size() == 2);
    CHECK(cf.cd[0] == 2);
    CHECK(cf.cd[1] == 2);
    // -12 z (1 + z^2) / (1-z^2)^5 at z = 1/2: -12*(1/2)*(5/4)/(3/4)^5
    const double expect = -12.0 * 0.5 * 1.25 / std::pow(0.75, 5);
    CHECK(std::abs(cf.evaluate({0.5, 0.0}).real() - expect) < 1e-12);

    // canonical storage swaps to p >= q
    auto swapped = koebe_closed_form(2, 3);
    CHECK(swapped.cd == cf.cd);
    CHECK(swapped.monomial_power == 1);

    auto s11 = koebe_closed_form(1, 1);
    CHECK(std::abs(s11.evaluate({0.5, 0.0}).real() + 16.0 / 9.0) < 1e-14);

    CHECK_THROWS_AS(koebe_closed_form(0, 1), DomainError);
}

TEST_CASE("koebe series from the closed form")
{
    auto s = koebe_closed_form(1, 1).to_series(9);
    // -(1-z^2)^{-2} = -sum (n+1) z^{2n}
    const long expect[] = {-1, 0, -2, 0, -3, 0, -4, 0, -5, 0};
    for (int n = 0; n <= 9; ++n) {
        CHECK(s.at(n) == Rational(expect[n]));
    }
}

TEST_CASE("pipeline matches the closed form for the koebe function")
{
    auto koebe = catalog_function(CatalogId::koebe);
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            auto lhs = higher_schwarzian(koebe, p, q, 24);
            auto rhs = koebe_closed_form(p, q).to_series(24);
            for (int n = 0; n <= 24; ++n) {
                CHECK(lhs.at(n) == rhs.at(n));
            }
        }
    }
}

TEST_CASE("strip S^{1,1} series")
{
    auto s = higher_schwarzian(catalog_function(CatalogId::strip), 1, 1, 8);
    const Rational expect[] = {make_rational(1, 3), Rational(0), make_rational(2, 3),
                               Rational(0),         Rational(1), Rational(0),
                               make_rational(4, 3), Rational(0), make_rational(5, 3)};
    for (int n = 0; n <= 8; ++n) {
        CHECK(s.at(n) == expect[n]);
    }
}

TEST_CASE("moebius functions have vanishing higher schwarzians")
{
    for (const char *name : {"identity", "cayley_halfplane"}) {
        auto f = catalog_function(std::string(name));
        for (int p = 1; p <= 3; ++p) {
            for (int q = 1; q <= 3; ++q) {
                auto s = higher_schwarzian(f, p, q, 16);
                for (int n = 0; n <= 16; ++n) {
                    CHECK(s.at(n) == 0);
                }
            }
        }
    }
}

TEST_CASE("higher schwarzian rejects p or q below one")
{
    auto f = catalog_function(CatalogId::koebe);
    CHECK_THROWS_AS(higher_schwarzian(f, 0, 1, 4), DomainError);
    CHECK_THROWS_AS(higher_schwarzian(f, 1, 0, 4), DomainError);
}

TEST_CASE("classical schwarzian of the koebe function")
{
    auto [nf, sf] = classical_schwarzian(catalog_function(CatalogId::koebe), 8);
    // N_kappa = (4 + 2z)/(1 - z^2) ; S_kappa = -6/(1-z^2)^2
    CHECK(nf.at(0) == 4);
    CHECK(nf.at(1) == 2);
    for (int n = 0; n <= 8; ++n) {
        CHECK(sf.at(n) == (n % 2 == 0 ? Rational(-6 * (n / 2 + 1)) : Rational(0)));
    }
}

TEST_CASE("six times S11 is the schwarzian for every catalog entry")
{
    for (const auto &f : catalog_entries()) {
        if (f.float_backend) {
            auto s11 = higher_schwarzian_float(f, 1, 1, 20);
            auto sf = classical_schwarzian_float(f, 20).second;
            for (int n = 0; n <= 20; ++n) {
                CHECK(std::abs(6.0 * s11.at(n) - sf.at(n)) <
                      1e-9 * (1.0 + std::abs(sf.at(n))));
            }
        } else {
            auto s11 = higher_schwarzian(f, 1, 1, 20);
            auto sf = classical_schwarzian(f, 20).second;
            for (int n = 0; n <= 20; ++n) {
                CHECK(Rational(6) * s11.at(n) == sf.at(n));
            }
        }
    }
}

TEST_CASE("pq function and identity")
{
    // P_1(w) = (1-w)^2 sum_{n>=1} n w^{n-1} = 1.
    auto p1 = pq_function(1, 12);
    CHECK(p1.at(0) == 1);
    for (int n = 1; n <= 12; ++n) {
        CHECK(p1.at(n) == 0);
    }
    for (int q = 1; q <= 4; ++q) {
        CHECK(pq_identity_check(q, 30));
    }
    CHECK_THROWS_AS(pq_function(0, 4), DomainError);
}

TEST_CASE("grunsky inequality on random vectors")
{
    std::mt19937 rng(1861);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto &f : catalog_entries()) {
        auto table = grunsky_float(f, 12);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Complex> x(8);
            for (auto &v : x) {
                v = {u(rng), u(rng)};
            }
            auto [lhs, rhs] = grunsky_quadratic(table, x);
            CHECK(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
        }
    }
    auto table = grunsky_float(catalog_function(CatalogId::koebe), 4);
    std::vector<Complex> too_long(5, Complex{1.0, 0.0});
    too_long.push_back({1.0, 0.0});
    CHECK_THROWS_AS(grunsky_quadratic(table, too_long), SupportExceedsOrder);
}

TEST_CASE("donaire slice bound holds for catalog functions")
{
    for (const auto &f : catalog_entries()) {
        for (const Complex w : {Complex{0.3, 0.0}, Complex{0.1, 0.4}}) {
            auto res = donaire_slice_check(f, 1, 1, w, 40);
            CHECK(res.norm_sq_partial <= res.bound * (1.0 + 1e-9));
        }
    }
    CHECK_THROWS_AS(
        donaire_slice_check(catalog_function(CatalogId::koebe), 1, 1, {2.0, 0.0}, 10),
        DomainError);
}

TEST_CASE("scaled axis magnitude of the closed form")
{
    // |S^{1,1}(r)| (1-r^2)^2 = 1 for every r.
    auto cf = koebe_closed_form(1, 1);
    for (double r : {0.0, 0.3, 0.9, 0.999}) {
        CHECK(std::abs(cf.scaled_magnitude_on_axis(r) - 1.0) < 1e-12);
    }
}
