#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hsk/errors.hpp"
#include "hsk/multiplier.hpp"

using namespace hsk;

TEST_CASE("koebe problem wiring")
{
    auto prob = koebe_problem(Rational(0), 2, 1);
    CHECK(prob.symbol.p == 2);
    CHECK(prob.symbol.q == 1);
    CHECK(prob.beta() == doctest::Approx(6.0));
    CHECK_THROWS_AS(koebe_problem(Rational(-2), 1, 1), DomainError);
}

TEST_CASE("domination upper bound equals the sharp constant")
{
    for (long a : {0L, 1L, 2L}) {
        for (int p = 1; p <= 4; ++p) {
            for (int q = 1; q <= 4; ++q) {
                CHECK(domination_upper_bound(p, q, Rational(a)) ==
                      sharp_constant(Rational(a), p, q));
            }
        }
    }
    CHECK(domination_upper_bound(1, 1, Rational(0)) == make_rational(15, 8));
}

TEST_CASE("pointwise domination on a grid")
{
    GridSpec grid{48, 64, 1.0 - 1e-6};
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= p; ++q) {
            CHECK(pointwise_domination_check(p, q, grid));
        }
    }
}

TEST_CASE("rayleigh bound is deterministic, monotone, and below the target")
{
    auto prob = koebe_problem(Rational(0), 1, 1);
    const double target = std::sqrt(15.0 / 8.0);

    auto a = rayleigh_lower_bound(prob, 250, 250, 0.9);
    auto b = rayleigh_lower_bound(prob, 250, 250, 0.9);
    CHECK(a.value == b.value); // bitwise reproducible
    CHECK(a.value > 1.0);
    CHECK(a.value < target);

    double prev = 0.0;
    for (int N : {50, 150, 400}) {
        auto res = rayleigh_lower_bound(prob, N, 800, 0.9);
        CHECK(res.value >= prev - 1e-12);
        prev = res.value;
    }

    CHECK_THROWS_AS(rayleigh_lower_bound(prob, 10, 10, 1.5), DomainError);
}

TEST_CASE("symbol tail mass shrinks and the search meets its target")
{
    auto prob = koebe_problem(Rational(0), 1, 1);
    const double r = 0.95;
    const double t64 = symbol_tail_mass(prob.symbol, r, 64);
    const double t256 = symbol_tail_mass(prob.symbol, r, 256);
    CHECK(t64 >= t256);
    CHECK(t256 >= 0.0);
    const int k = symbol_truncation_for(prob.symbol, r, 1e-9, 16);
    CHECK(symbol_tail_mass(prob.symbol, r, k) < 1e-9);
}

TEST_CASE("certified lower bound stays below the exact value")
{
    auto prob = koebe_problem(Rational(0), 1, 1);
    const double target = std::sqrt(15.0 / 8.0);
    auto cl = certified_lower_bound(prob, 0.9, 200, 400);
    CHECK(cl.value > 1.0);
    CHECK(cl.value <= target);
    CHECK(cl.slack >= 0.0);
    CHECK(cl.value <= cl.rayleigh.value);
    CHECK_THROWS_AS(certified_lower_bound(prob, 1.0, 10, 10), TailNotSummable);
}

TEST_CASE("test family quotient window and values")
{
    const double target_sq = 15.0 / 8.0;
    for (double r : {0.9, 0.99, 0.999}) {
        const double v = test_family_quotient(1, 1, 0.0, 1.025, r);
        CHECK(v > 0.0);
        CHECK(v <= target_sq * (1.0 + 1e-9));
    }
    CHECK_THROWS_AS(test_family_quotient(1, 1, 0.0, 0.9, 0.9), DomainError);
    CHECK_THROWS_AS(test_family_quotient(1, 1, 0.0, 1.6, 0.9), DomainError);
    CHECK_THROWS_AS(test_family_quotient(1, 1, 0.0, 1.2, 1.2), DomainError);
}

TEST_CASE("sandwich report invariants under a small budget")
{
    auto prob = koebe_problem(Rational(0), 1, 1);
    auto rep = sandwich(prob, 1.0);
    CHECK(rep.target_sq == make_rational(15, 8));
    CHECK(rep.upper == doctest::Approx(std::sqrt(15.0 / 8.0)).epsilon(1e-14));
    CHECK(rep.lower <= rep.upper);
    CHECK(rep.lower > 0.0);
    CHECK(rep.gap >= 0.0);
    CHECK(rep.trace.size() >= 1);
    for (const auto &pt : rep.trace) {
        CHECK(pt.value <= rep.upper * (1.0 + 1e-12));
        CHECK(pt.slack >= 0.0);
    }
}

TEST_CASE("sandwich reaches ninety percent of the target at (0,1,1)")
{
    auto prob = koebe_problem(Rational(0), 1, 1);
    auto rep = sandwich(prob, 60.0);
    CHECK(rep.lower >= 0.90 * rep.target);
    CHECK_FALSE(rep.budget_exhausted);
}
