#include "hsk/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "hsk/exactcore.hpp"
#include "hsk/multiplier.hpp"
#include "hsk/norms.hpp"
#include "hsk/schwarzian.hpp"
#include "hsk/series.hpp"

namespace hsk {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks &cs, const std::string &id, bool ok, const std::string &detail = "")
{
    cs.push_back({id, ok, detail});
}

Rational random_rational(std::mt19937 &rng, long num_range, long den_range)
{
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return make_rational(num(rng), den(rng));
}

UniSeries<Rational> random_series(std::mt19937 &rng, int order, bool unit_constant)
{
    UniSeries<Rational> s(order);
    for (int n = 0; n <= order; ++n) {
        s.at(n) = random_rational(rng, 6, 4);
    }
    if (unit_constant) {
        s.at(0) = 1;
    }
    return s;
}

// Single-step derivative in z: independent route for the bi_partial oracle.
BiSeries<Rational> dz_once(const BiSeries<Rational> &a)
{
    BiSeries<Rational> out(a.order - 1);
    for (int j = 0; j <= out.order; ++j) {
        for (int i = 0; i <= out.order; ++i) {
            out.at(i, j) = Rational(i + 1) * a.at(i + 1, j);
        }
    }
    return out;
}

BiSeries<Rational> dw_once(const BiSeries<Rational> &a)
{
    BiSeries<Rational> out(a.order - 1);
    for (int j = 0; j <= out.order; ++j) {
        for (int i = 0; i <= out.order; ++i) {
            out.at(i, j) = Rational(j + 1) * a.at(i, j + 1);
        }
    }
    return out;
}

bool series_equal(const UniSeries<Rational> &a, const UniSeries<Rational> &b, int order)
{
    for (int n = 0; n <= order; ++n) {
        if (a.at(n) != b.at(n)) {
            return false;
        }
    }
    return true;
}

Checks suite_exact()
{
    Checks cs;
    {
        bool ok = true;
        for (int p = 1; p <= 12 && ok; ++p) {
            for (int q = 1; q <= p && ok; ++q) {
                Rational expect(factorial(static_cast<unsigned long>(p + q - 1)),
                                factorial(static_cast<unsigned long>(p)));
                expect.canonicalize();
                ok = tq_polynomial(p, q).eval(Rational(1)) == expect &&
                     tq_polynomial(p, q).degree() == q - 1;
            }
        }
        add(cs, "exact.tq_at_one", ok, "T_q(1) = (p+q-1)!/p! for q <= p <= 12");
    }
    {
        bool ok = true;
        for (int p = 1; p <= 12 && ok; ++p) {
            for (int q = 1; q <= p && ok; ++q) {
                for (int d = 0; d < q && ok; ++d) {
                    ok = koebe_cd(p, q, d) > 0;
                }
            }
        }
        add(cs, "exact.cd_positive", ok);
    }
    {
        std::mt19937 rng(20240817);
        bool ok = true;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            std::uniform_int_distribution<unsigned long> nn(0, 30);
            const unsigned long n = nn(rng);
            Rational a = random_rational(rng, 10, 6);
            Rational c = random_rational(rng, 0, 1) + make_rational(1, 7) +
                         Rational(std::uniform_int_distribution<long>(0, 9)(rng));
            auto [lhs, rhs] = chu_vandermonde(n, a, c);
            ok = lhs == rhs;
        }
        add(cs, "exact.chu_vandermonde", ok, "50 randomized instances, n <= 30");
    }
    {
        bool ok = true;
        const Rational alphas[] = {Rational(0), make_rational(1, 2), Rational(2)};
        for (const auto &al : alphas) {
            for (int p = 1; p <= 4; ++p) {
                for (int q = 1; q <= 4; ++q) {
                    ok = ok && sharp_constant(al, p, q) == sharp_constant(al, q, p);
                }
            }
        }
        add(cs, "exact.sharp_symmetry", ok);
    }
    {
        bool ok = true;
        for (long a = 0; a <= 4; ++a) {
            for (int p = 1; p <= 4; ++p) {
                for (int q = 1; q <= 4; ++q) {
                    Integer f = factorial(static_cast<unsigned long>(p + q - 1));
                    ok = ok && sharp_constant(Rational(a), p, q) ==
                                   Rational(f * f) *
                                       g0_mult_norm_sq(Rational(a), Rational(a + 2 * (p + q)));
                }
            }
        }
        add(cs, "exact.sharp_vs_g0", ok);
    }
    {
        bool ok = true;
        for (int p = 1; p <= 10; ++p) {
            for (int q = 1; q <= 10; ++q) {
                const Rational gap = factorial_gap(p, q);
                ok = ok && (p == q ? gap == 0 : gap > 0);
            }
        }
        add(cs, "exact.factorial_gap_sign", ok);
    }
    {
        bool ok = true;
        const Rational alphas[] = {Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
        for (const auto &al : alphas) {
            auto b = classical_bounds(al, 1, 1);
            ok = ok && b.donaire_sq * 36 == b.shimorin_sq;
        }
        add(cs, "exact.donaire_vs_shimorin", ok);
    }
    return cs;
}

Checks suite_series()
{
    Checks cs;
    std::mt19937 rng(7141);
    {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            auto a = random_series(rng, 10, false);
            auto b = random_series(rng, 10, false);
            auto c = random_series(rng, 10, false);
            ok = series_equal(uni_mul(a, b), uni_mul(b, a), 10) &&
                 series_equal(uni_mul(uni_mul(a, b), c), uni_mul(a, uni_mul(b, c)), 10);
        }
        add(cs, "series.mul_commutative_associative", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            auto a = random_series(rng, 12, true);
            auto b = random_series(rng, 12, true);
            ok = series_equal(uni_log(uni_mul(a, b)), uni_add(uni_log(a), uni_log(b)), 12);
        }
        add(cs, "series.log_of_product", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            auto a = random_series(rng, 12, false);
            if (a.at(0) == 0) {
                a.at(0) = 1;
            }
            auto prod = uni_mul(a, uni_reciprocal(a));
            ok = prod.at(0) == 1;
            for (int n = 1; n <= 12 && ok; ++n) {
                ok = prod.at(n) == 0;
            }
        }
        add(cs, "series.reciprocal_identity", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            BiSeries<Rational> a(8);
            for (int i = 0; i <= 8; ++i) {
                for (int j = 0; j <= i; ++j) {
                    auto v = random_rational(rng, 4, 3);
                    a.at(i, j) = v;
                    a.at(j, i) = v;
                }
            }
            a.at(0, 0) = 1;
            a.symmetric = true;
            ok = is_symmetric(bi_log(a));
        }
        add(cs, "series.bi_log_symmetry", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            BiSeries<Rational> a(12);
            for (int i = 0; i <= 12; ++i) {
                for (int j = 0; j <= 12; ++j) {
                    a.at(i, j) = random_rational(rng, 5, 3);
                }
            }
            std::uniform_int_distribution<int> pq(0, 3);
            const int p = pq(rng);
            const int q = pq(rng);
            auto direct = diagonal(bi_partial(a, p, q));
            BiSeries<Rational> step = a;
            for (int t = 0; t < p; ++t) {
                step = dz_once(step);
            }
            for (int t = 0; t < q; ++t) {
                step = dw_once(step);
            }
            auto oracle = diagonal(step);
            ok = series_equal(direct, oracle, std::min(direct.order, oracle.order));
        }
        add(cs, "series.partial_diagonal_oracle", ok,
            "stepwise differentiation oracle, random N <= 12");
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            UniSeries<Rational> f(17);
            f.at(1) = 1;
            for (int n = 2; n <= 17; ++n) {
                f.at(n) = random_rational(rng, 4, 3);
            }
            auto dd = divided_difference(f, 8);
            ok = is_symmetric(dd) && dd.at(0, 0) == 1;
        }
        add(cs, "series.divided_difference_shape", ok);
    }
    return cs;
}

Checks suite_schwarzian(int order_override)
{
    Checks cs;
    const int big = order_override > 0 ? order_override : 60;
    {
        // Closed form vs the F-pipeline, exact, all p, q <= 4.
        auto koebe = catalog_function(CatalogId::koebe);
        auto F = build_F(koebe, big + 8);
        bool ok = true;
        std::string fail;
        for (int p = 1; p <= 4 && ok; ++p) {
            for (int q = 1; q <= p && ok; ++q) {
                auto pipeline = uni_truncate(diagonal(bi_partial(F, p, q)), big);
                auto closed = koebe_closed_form(p, q).to_series(big);
                ok = series_equal(pipeline, closed, big);
                if (!ok) {
                    fail = "p=" + std::to_string(p) + " q=" + std::to_string(q);
                }
            }
        }
        add(cs, "schwarzian.closed_form_vs_pipeline", ok, fail);
    }
    {
        bool ok = true;
        auto strip = catalog_function(CatalogId::strip);
        for (int p = 1; p <= 3 && ok; ++p) {
            for (int q = 1; q < p && ok; ++q) {
                ok = series_equal(higher_schwarzian(strip, p, q, 20),
                                  higher_schwarzian(strip, q, p, 20), 20);
            }
        }
        add(cs, "schwarzian.pq_symmetry", ok);
    }
    {
        bool ok = true;
        for (const char *name : {"cayley_halfplane", "identity"}) {
            auto f = catalog_function(std::string(name));
            for (int p = 1; p <= 3 && ok; ++p) {
                for (int q = 1; q <= p && ok; ++q) {
                    auto s = higher_schwarzian(f, p, q, 30);
                    for (int n = 0; n <= 30 && ok; ++n) {
                        ok = s.at(n) == 0;
                    }
                }
            }
        }
        add(cs, "schwarzian.moebius_vanishing", ok);
    }
    {
        bool ok = true;
        for (const auto &f : catalog_entries()) {
            if (f.float_backend) {
                auto t = grunsky_float(f, 16);
                for (int n = 1; n <= 16 && ok; ++n) {
                    for (int k = 1; k <= 16 && ok; ++k) {
                        ok = std::abs(t.at(n, k) - t.at(k, n)) < 1e-12;
                    }
                }
            } else {
                auto t = grunsky(f, 16);
                for (int n = 1; n <= 16 && ok; ++n) {
                    for (int k = 1; k <= 16 && ok; ++k) {
                        ok = t.at(n, k) == t.at(k, n);
                    }
                }
            }
        }
        add(cs, "schwarzian.grunsky_symmetry", ok);
    }
    {
        bool ok = true;
        auto F = build_F(catalog_function(CatalogId::koebe), 20);
        for (int i = 0; i <= 20 && ok; ++i) {
            ok = F.at(i, 0) == 0 && F.at(0, i) == 0;
        }
        add(cs, "schwarzian.F_zero_boundary", ok);
    }
    {
        bool ok = true;
        for (int q = 1; q <= 5 && ok; ++q) {
            ok = pq_identity_check(q, 50);
        }
        add(cs, "schwarzian.pq_identity", ok);
    }
    {
        bool ok = true;
        for (const auto &f : catalog_entries()) {
            if (f.float_backend) {
                auto s11 = higher_schwarzian_float(f, 1, 1, 40);
                auto sf = classical_schwarzian_float(f, 40).second;
                for (int n = 0; n <= 40 && ok; ++n) {
                    ok = std::abs(6.0 * s11.at(n) - sf.at(n)) < 1e-7 * (1.0 + std::abs(sf.at(n)));
                }
            } else {
                auto s11 = higher_schwarzian(f, 1, 1, 40);
                auto sf = classical_schwarzian(f, 40).second;
                for (int n = 0; n <= 40 && ok; ++n) {
                    ok = Rational(6) * s11.at(n) == sf.at(n);
                }
            }
        }
        add(cs, "schwarzian.six_s11_equals_schwarzian", ok, "order 40, all catalog entries");
    }
    return cs;
}

Checks suite_norms()
{
    Checks cs;
    {
        bool ok = true;
        for (double alpha : {-0.5, 0.0, 1.0, 4.0}) {
            auto w = bergman_weights(alpha, 200);
            ok = ok && w[0] == 1.0;
            for (int m = 0; m < 200 && ok; ++m) {
                ok = w[static_cast<std::size_t>(m + 1)] < w[static_cast<std::size_t>(m)];
            }
        }
        add(cs, "norms.weight_monotone", ok);
    }
    {
        // Partial sums monotone in N.
        UniSeries<Complex> phi(40);
        for (int n = 0; n <= 40; ++n) {
            phi.at(n) = Complex(1.0 / (n + 1.0), 0.1 * n);
        }
        bool ok = true;
        double prev = -1.0;
        for (int N = 0; N <= 40; ++N) {
            const double v = bergman_norm_sq(uni_truncate(phi, N), 1.0).partial;
            ok = ok && v >= prev;
            prev = v;
        }
        add(cs, "norms.partial_monotone", ok);
    }
    {
        bool ok = true;
        for (double r : {0.1, 0.5, 0.9}) {
            const double v = test_family_norm_sq({r, 1.0, 0, 0.0}, 1e-12);
            ok = ok && std::abs(v - std::atanh(r) / r) < 1e-10;
        }
        add(cs, "norms.artanh_closed_form", ok);
    }
    {
        bool ok = true;
        const double cases[][2] = {{0.0, 1.3}, {0.0, 1.5}, {1.0, 2.0}};
        for (const auto &c : cases) {
            const double cst = asymptotic_constant(c[0], c[1]);
            double prev_gap = std::numeric_limits<double>::infinity();
            double last = 0.0;
            for (double r : {0.9, 0.99, 0.999}) {
                const double ratio = test_family_norm_sq({r, c[1], 0, c[0]}, 1e-10) *
                                     std::pow(1.0 - r * r, 2.0 * c[1] - c[0] - 2.0) / cst;
                ok = ok && std::abs(ratio - 1.0) <= prev_gap;
                prev_gap = std::abs(ratio - 1.0);
                last = ratio;
            }
            ok = ok && std::abs(last - 1.0) < 0.05;
        }
        add(cs, "norms.supercritical_ratio", ok);
    }
    {
        bool ok = true;
        GridSpec grid;
        for (int p = 1; p <= 4 && ok; ++p) {
            for (int q = 1; q <= p && ok; ++q) {
                auto cf = koebe_closed_form(p, q);
                auto est = growth_norm(
                    [&cf](const Complex &z) { return std::abs(cf.evaluate(z)); },
                    static_cast<double>(p + q), grid);
                const double target = factorial(static_cast<unsigned long>(p + q - 1)).get_d();
                ok = est.lower_estimate >= (1.0 - 1e-3) * target &&
                     est.lower_estimate <= target * (1.0 + 1e-12);
            }
        }
        add(cs, "norms.koebe_growth_norm", ok);
    }
    {
        std::mt19937 rng(555);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            UniSeries<Complex> poly(10);
            for (int n = 0; n <= 10; ++n) {
                poly.at(n) = Complex(u(rng), u(rng));
            }
            for (double alpha : {0.0, 1.0, 4.0}) {
                ok = ok && std::abs(bergman_norm_sq(poly, alpha).partial -
                                    disk_norm_sq_quadrature(poly, alpha)) < 1e-8;
            }
        }
        add(cs, "norms.quadrature_cross_check", ok, "20 random degree-10 polynomials");
    }
    return cs;
}

Checks suite_multiplier()
{
    Checks cs;
    {
        // Constant symbol: quotient exactly 1 at every N (argmax at index 0).
        KoebeClosedForm one;
        one.p = 1;
        one.q = 1;
        one.prefactor = -1;
        one.monomial_power = 0;
        one.pole_order = 0;
        one.cd = {Rational(1)};
        MultiplierProblem prob{one, Rational(0), 1, 1};
        bool ok = true;
        for (int N : {0, 5, 50}) {
            auto res = rayleigh_lower_bound(prob, N, 4, 1.0, 20000);
            ok = ok && std::abs(res.value - 1.0) < 1e-9;
        }
        add(cs, "multiplier.constant_symbol_unit", ok);
    }
    {
        bool ok = true;
        for (int p = 1; p <= 2; ++p) {
            for (int q = 1; q <= p; ++q) {
                auto prob = koebe_problem(Rational(0), p, q);
                auto cl = certified_lower_bound(prob, 0.9, 200, 400, 20000);
                const double target =
                    std::sqrt(sharp_constant(Rational(0), p, q).get_d());
                ok = ok && cl.value <= target + 1e-9;
            }
        }
        add(cs, "multiplier.lower_below_target", ok);
    }
    {
        auto prob = koebe_problem(Rational(0), 1, 1);
        double prev = 0.0;
        bool ok = true;
        for (int N : {50, 150, 400}) {
            auto res = rayleigh_lower_bound(prob, N, 800, 0.9, 20000);
            ok = ok && res.value >= prev - 1e-12;
            prev = res.value;
        }
        add(cs, "multiplier.monotone_in_degree", ok);
    }
    {
        bool ok = true;
        const Rational alphas[] = {Rational(0), Rational(1), Rational(2)};
        for (const auto &al : alphas) {
            for (int p = 1; p <= 4; ++p) {
                for (int q = 1; q <= 4; ++q) {
                    ok = ok && domination_upper_bound(p, q, al) == sharp_constant(al, p, q);
                }
            }
        }
        add(cs, "multiplier.domination_equals_sharp", ok);
    }
    {
        bool ok = true;
        const Rational alphas[] = {Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
        for (const auto &al : alphas) {
            const Rational lhs = Rational(36) * sharp_constant(al, 1, 1);
            const Rational rhs = Rational(36) * (al + 3) * (al + 5) / ((al + 2) * (al + 4));
            ok = ok && lhs == rhs;
        }
        add(cs, "multiplier.shimorin_koebe_display", ok);
    }
    {
        bool ok = true;
        GridSpec grid{48, 64, 1.0 - 1e-6};
        for (int p = 1; p <= 3 && ok; ++p) {
            for (int q = 1; q <= p && ok; ++q) {
                ok = pointwise_domination_check(p, q, grid);
            }
        }
        add(cs, "multiplier.pointwise_domination", ok);
    }
    {
        bool ok = true;
        double prev = 0.0;
        for (double r : {0.9, 0.99, 0.999}) {
            const double v = test_family_quotient(1, 1, 0.0, 1.025, r);
            ok = ok && v >= prev - 1e-3;
            prev = v;
        }
        add(cs, "multiplier.test_family_monotone", ok);
    }
    return cs;
}

} // namespace

std::vector<std::string> verify_suite_names()
{
    return {"exact", "series", "schwarzian", "norms", "multiplier"};
}

VerifyReport run_verify_suite(const std::string &name, int order_override)
{
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.suite = name;
    if (name == "exact") {
        rep.checks = suite_exact();
    } else if (name == "series") {
        rep.checks = suite_series();
    } else if (name == "schwarzian") {
        rep.checks = suite_schwarzian(order_override);
    } else if (name == "norms") {
        rep.checks = suite_norms();
    } else if (name == "multiplier") {
        rep.checks = suite_multiplier();
    } else {
        throw DomainError("run_verify_suite: unknown suite '" + name + "'");
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace hsk
