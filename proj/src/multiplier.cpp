#include "hsk/multiplier.hpp"

#include <chrono>
#include <cmath>

#include "hsk/errors.hpp"

namespace hsk {

namespace {

constexpr double pi = 3.14159265358979323846;

double pairwise_sum(const double *a, std::size_t n)
{
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += a[i];
        }
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

double pairwise_dot(const std::vector<double> &a, const std::vector<double> &b)
{
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        prod[i] = a[i] * b[i];
    }
    return pairwise_sum(prod.data(), prod.size());
}

// Dilated symbol coefficients g_k r^k for k <= K. The closed form has
// nonnegative coefficients g_{p-q+2(d+n)} = p! C_d binom(n+P-1, P-1),
// P = p+q, so everything is accumulated with bounded positive terms.
std::vector<double> dilated_symbol_coeffs(const KoebeClosedForm &s, double r, int trunc)
{
    const int P = s.pole_order;
    std::vector<double> out(static_cast<std::size_t>(trunc) + 1, 0.0);
    const double r2 = r * r;
    const double pf = std::abs(s.prefactor.get_d()) * std::pow(r, s.monomial_power);
    const int nmax = (trunc - s.monomial_power) / 2;
    if (nmax < 0) {
        return out;
    }
    // u_n = binom(n+P-1, P-1) r^{2n}
    std::vector<double> u(static_cast<std::size_t>(nmax) + 1);
    u[0] = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        u[static_cast<std::size_t>(n)] =
            u[static_cast<std::size_t>(n - 1)] * r2 * (n - 1 + P) / n;
    }
    for (int d = 0; d < static_cast<int>(s.cd.size()); ++d) {
        const double cd = s.cd[static_cast<std::size_t>(d)].get_d() * std::pow(r2, d);
        for (int n = 0; d + n <= nmax; ++n) {
            out[static_cast<std::size_t>(s.monomial_power + 2 * (d + n))] +=
                pf * cd * u[static_cast<std::size_t>(n)];
        }
    }
    return out;
}

} // namespace

MultiplierProblem koebe_problem(const Rational &alpha, int p, int q)
{
    if (alpha <= -1) {
        throw DomainError("koebe_problem: requires alpha > -1");
    }
    MultiplierProblem prob;
    prob.symbol = koebe_closed_form(p, q);
    prob.alpha = alpha;
    prob.p = prob.symbol.p;
    prob.q = prob.symbol.q;
    return prob;
}

double symbol_tail_mass(const KoebeClosedForm &symbol, double r, int truncation)
{
    // Total mass sum_k g_k r^k = |S(r)| on the axis (all coefficients >= 0).
    const double total = symbol.scaled_magnitude_on_axis(r) /
                         std::pow(1.0 - r * r, symbol.pole_order);
    auto coeffs = dilated_symbol_coeffs(symbol, r, truncation);
    const double partial = pairwise_sum(coeffs.data(), coeffs.size());
    return std::max(0.0, total - partial);
}

int symbol_truncation_for(const KoebeClosedForm &symbol, double r, double target,
                          int at_least)
{
    int k = std::max(at_least, 16);
    while (symbol_tail_mass(symbol, r, k) >= target) {
        k *= 2;
        if (k > (1 << 22)) {
            throw TailNotSummable("symbol_truncation_for: tail target unreachable");
        }
    }
    return k;
}

RayleighResult rayleigh_lower_bound(const MultiplierProblem &problem, int degree,
                                    int symbol_truncation, double r,
                                    long max_iterations, double deadline_seconds)
{
    if (r <= 0.0 || r > 1.0) {
        throw DomainError("rayleigh_lower_bound: requires r in (0, 1]");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const int N = degree;
    const int K = symbol_truncation;
    const double alpha = problem.alpha.get_d();
    const double beta = problem.beta();

    auto g = dilated_symbol_coeffs(problem.symbol, r, K);
    std::vector<std::pair<int, double>> nz;
    for (int k = 0; k <= K; ++k) {
        if (g[static_cast<std::size_t>(k)] != 0.0) {
            nz.emplace_back(k, g[static_cast<std::size_t>(k)]);
        }
    }
    auto wa = bergman_weights(alpha, N);
    auto wb = bergman_weights(beta, N + K);
    std::vector<double> sa(wa.size());
    for (std::size_t i = 0; i < wa.size(); ++i) {
        sa[i] = std::sqrt(wa[i]);
    }

    // Deterministic seed: test-family coefficients at lambda = alpha/2+1.05
    // on the even indices, a small floor elsewhere.
    std::vector<double> y(static_cast<std::size_t>(N) + 1, 1e-6);
    {
        const double lam = alpha / 2.0 + 1.05;
        double c = 1.0;
        for (int m = 0; 2 * m <= N; ++m) {
            y[static_cast<std::size_t>(2 * m)] += c * sa[static_cast<std::size_t>(2 * m)];
            c *= r * (m + lam) / (m + 1.0);
        }
    }
    {
        const double inv = 1.0 / std::sqrt(pairwise_dot(y, y));
        for (auto &v : y) {
            v *= inv;
        }
    }

    std::vector<double> x(y.size()), u(static_cast<std::size_t>(N + K) + 1),
        out(y.size());
    RayleighResult res{0.0, 1.0, 0, false};
    double lambda_prev = 0.0;
    for (long it = 0; it < max_iterations; ++it) {
        for (std::size_t n = 0; n < y.size(); ++n) {
            x[n] = y[n] / sa[n];
        }
        std::fill(u.begin(), u.end(), 0.0);
        for (const auto &[k, gv] : nz) {
            for (int n = 0; n <= N; ++n) {
                u[static_cast<std::size_t>(n + k)] += gv * x[static_cast<std::size_t>(n)];
            }
        }
        for (std::size_t m = 0; m < u.size(); ++m) {
            u[m] *= wb[m];
        }
        for (int n = 0; n <= N; ++n) {
            out[static_cast<std::size_t>(n)] = 0.0;
        }
        for (const auto &[k, gv] : nz) {
            for (int n = 0; n <= N; ++n) {
                out[static_cast<std::size_t>(n)] += gv * u[static_cast<std::size_t>(n + k)];
            }
        }
        for (std::size_t n = 0; n < out.size(); ++n) {
            out[n] /= sa[n];
        }
        const double lambda = pairwise_dot(y, out); // ||y|| = 1, S is PSD
        res.iterations = it + 1;
        if (lambda > res.value) {
            res.value = lambda;
        }
        // residual ||S y - lambda y|| / lambda
        {
            std::vector<double> diff(out.size());
            for (std::size_t n = 0; n < out.size(); ++n) {
                diff[n] = out[n] - lambda * y[n];
            }
            res.residual = std::sqrt(std::max(0.0, pairwise_dot(diff, diff))) /
                           std::max(lambda, 1e-300);
        }
        const double norm = std::sqrt(pairwise_dot(out, out));
        if (norm == 0.0) {
            break;
        }
        for (std::size_t n = 0; n < out.size(); ++n) {
            y[n] = out[n] / norm;
        }
        if (it > 0 && std::abs(lambda - lambda_prev) <= 1e-12 * lambda) {
            res.converged = true;
            break;
        }
        lambda_prev = lambda;
        if (deadline_seconds > 0.0 && (it & 15) == 15) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (elapsed > deadline_seconds) {
                break;
            }
        }
    }
    res.value = std::sqrt(std::max(0.0, res.value));
    return res;
}

CertifiedLower certified_lower_bound(const MultiplierProblem &problem, double r, int degree,
                                     int symbol_truncation, long max_iterations,
                                     double deadline_seconds)
{
    if (r >= 1.0) {
        throw TailNotSummable("certified_lower_bound: requires r < 1");
    }
    CertifiedLower out{};
    out.rayleigh = rayleigh_lower_bound(problem, degree, symbol_truncation, r,
                                        max_iterations, deadline_seconds);
    out.slack = symbol_tail_mass(problem.symbol, r, symbol_truncation);
    out.value = std::max(0.0, out.rayleigh.value - out.slack);
    return out;
}

double test_family_quotient(int p, int q, double alpha, double lambda, double r,
                            double tol)
{
    if (!(alpha + 2.0 < 2.0 * lambda && 2.0 * lambda < alpha + 3.0)) {
        throw DomainError("test_family_quotient: requires alpha+2 < 2 lambda < alpha+3");
    }
    if (r <= 0.0 || r >= 1.0) {
        throw DomainError("test_family_quotient: requires r in (0,1)");
    }
    auto cf = koebe_closed_form(p, q);
    const std::vector<double> cd = [&] {
        std::vector<double> v;
        for (const auto &c : cf.cd) {
            v.push_back(c.get_d());
        }
        return v;
    }();
    const int P = cf.pole_order;
    const double mu = P + lambda;
    const double beta = alpha + 2.0 * P;
    const double pf = std::abs(cf.prefactor.get_d()) * std::pow(r, cf.monomial_power / 2.0);

    // Numerator coefficient at z^{p-q+2n}: pf sum_d C_d r^d * b_{n-d} r^{n-d},
    // b_m = Gamma(m+mu)/(m! Gamma(mu)).
    std::vector<double> v; // v_m = b_m r^m
    v.push_back(1.0);
    double weight = 1.0; // Bergman weight at index p-q+2n, beta
    for (int e = 1; e <= cf.monomial_power; ++e) {
        weight *= e / (beta + e + 1.0);
    }
    double num = 0.0;
    for (long n = 0;; ++n) {
        while (static_cast<long>(v.size()) <= n) {
            const long m = static_cast<long>(v.size());
            v.push_back(v.back() * r * (m - 1 + mu) / m);
        }
        double c = 0.0;
        for (int d = 0; d < static_cast<int>(cd.size()) && d <= n; ++d) {
            c += cd[static_cast<std::size_t>(d)] * std::pow(r, d) *
                 v[static_cast<std::size_t>(n - d)];
        }
        c *= pf;
        const double term = weight * c * c;
        num += term;
        // Advance the weight two index steps.
        const int e = cf.monomial_power + 2 * static_cast<int>(n);
        weight *= (e + 1.0) / (beta + e + 2.0) * (e + 2.0) / (beta + e + 3.0);
        // Successive coefficient ratios are at most r (m+mu)/(m+1) at the
        // smallest surviving m = n+1-(q_len-1); the weight ratio is < 1.
        const long m0 = n + 1 - (static_cast<long>(cd.size()) - 1);
        if (m0 > 0) {
            const double rb = r * (m0 + mu) / (m0 + 1.0);
            const double rho = rb * rb;
            if (rho < 1.0 && term * rho / (1.0 - rho) < tol) {
                break;
            }
        }
        if (n > 100000000L) {
            throw ToleranceUnachievable("test_family_quotient: numerator did not converge");
        }
    }
    const double den = test_family_norm_sq({r, lambda, 0, alpha}, tol) + tol;
    return num / den;
}

Rational domination_upper_bound(int p, int q, const Rational &alpha)
{
    if (p < 1 || q < 1) {
        throw DomainError("domination_upper_bound: requires p, q >= 1");
    }
    Integer f = factorial(static_cast<unsigned long>(p + q - 1));
    return Rational(f * f) * g0_mult_norm_sq(alpha, alpha + 2 * (p + q));
}

bool pointwise_domination_check(int p, int q, const GridSpec &grid)
{
    auto cf = koebe_closed_form(p, q);
    const double limit = factorial(static_cast<unsigned long>(p + q - 1)).get_d() + 1e-12;
    for (int i = 1; i <= grid.radial; ++i) {
        const double r = grid.r_max * i / grid.radial;
        for (int j = 0; j < grid.angular; ++j) {
            const double t = 2.0 * pi * j / grid.angular;
            const Complex z(r * std::cos(t), r * std::sin(t));
            const double lhs = std::abs(cf.evaluate(z)) *
                               std::pow(std::abs(1.0 - z * z), p + q);
            if (lhs > limit) {
                return false;
            }
        }
    }
    return true;
}

BoundReport sandwich(const MultiplierProblem &problem, double budget_seconds)
{
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    BoundReport rep;
    rep.target_sq = sharp_constant(problem.alpha, problem.p, problem.q);
    rep.target = std::sqrt(rep.target_sq.get_d());
    rep.upper = std::sqrt(domination_upper_bound(problem.p, problem.q, problem.alpha).get_d());

    const double alpha = problem.alpha.get_d();
    struct RN {
        double r;
        int n;
        double slack_target;
    };
    const RN schedule[] = {{0.9, 250, 1e-6}, {0.99, 1000, 1e-6},
                           {0.995, 2000, 1e-6}, {0.999, 4000, 1e-3}};
    for (const auto &pt : schedule) {
        if (elapsed() > budget_seconds) {
            rep.budget_exhausted = true;
            break;
        }
        const int K = symbol_truncation_for(problem.symbol, pt.r, pt.slack_target, pt.n);
        const double remaining = budget_seconds - elapsed();
        const auto t1 = std::chrono::steady_clock::now();
        auto cl = certified_lower_bound(problem, pt.r, pt.n, K, 100000, remaining);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        rep.trace.push_back({pt.r, pt.n, K, 0.0, cl.value, cl.slack, secs,
                             cl.rayleigh.converged});
        rep.lower = std::max(rep.lower, cl.value);
        if (!cl.rayleigh.converged && remaining < secs * 1.5) {
            rep.budget_exhausted = true;
        }
    }
    const double lambdas[] = {alpha / 2.0 + 1.025, alpha / 2.0 + 1.2};
    const double rs[] = {0.99, 0.9999};
    for (double lam : lambdas) {
        for (double r : rs) {
            if (elapsed() > budget_seconds) {
                rep.budget_exhausted = true;
                break;
            }
            const auto t1 = std::chrono::steady_clock::now();
            const double quot = test_family_quotient(problem.p, problem.q, alpha, lam, r);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
            rep.trace.push_back({r, 0, 0, lam, std::sqrt(quot), 0.0, secs, true});
            rep.lower = std::max(rep.lower, std::sqrt(quot));
        }
    }
    rep.gap = rep.upper > 0.0 ? (rep.upper - rep.lower) / rep.upper : 0.0;
    return rep;
}

} // namespace hsk
