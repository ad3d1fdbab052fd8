#include "hsk/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsk/errors.hpp"

namespace hsk {

namespace {

constexpr double pi = 3.14159265358979323846;

} // namespace

std::vector<double> bergman_weights(double alpha, int order)
{
    if (alpha <= -1.0) {
        throw DomainError("bergman_weights: requires alpha > -1");
    }
    std::vector<double> w(static_cast<std::size_t>(order) + 1);
    w[0] = 1.0;
    for (int m = 1; m <= order; ++m) {
        w[static_cast<std::size_t>(m)] =
            w[static_cast<std::size_t>(m - 1)] * m / (alpha + m + 1);
    }
    return w;
}

std::vector<Rational> bergman_weights_exact(const Rational &alpha, int order)
{
    if (alpha <= -1) {
        throw DomainError("bergman_weights_exact: requires alpha > -1");
    }
    std::vector<Rational> w(static_cast<std::size_t>(order) + 1);
    w[0] = 1;
    for (int m = 1; m <= order; ++m) {
        w[static_cast<std::size_t>(m)] =
            w[static_cast<std::size_t>(m - 1)] * Rational(m) / (alpha + m + 1);
    }
    return w;
}

BergmanNormResult bergman_norm_sq(const UniSeries<Complex> &phi, double alpha,
                                  const std::optional<TailCertificate> &cert)
{
    auto w = bergman_weights(alpha, phi.order);
    double partial = 0.0;
    for (int n = 0; n <= phi.order; ++n) {
        partial += w[static_cast<std::size_t>(n)] * std::norm(phi.at(n));
    }
    BergmanNormResult out{partial, std::nullopt};
    if (cert) {
        if (cert->rho >= 1.0 || cert->rho < 0.0) {
            throw TailNotSummable("bergman_norm_sq: certificate needs rho in [0,1)");
        }
        // Tail terms w_n C^2 (n+1)^{2s} rho^{2n} <= C^2 (n+1)^{2s} rho^{2n}
        // (weights are at most 1); successive ratios are at most
        // ((N+2)/(N+1))^{2s} rho^2 for n > N.
        const int N = phi.order;
        const double first = cert->C * cert->C *
                             std::pow(static_cast<double>(N + 2), 2.0 * cert->s) *
                             std::pow(cert->rho, 2.0 * (N + 1));
        const double ratio = std::pow(static_cast<double>(N + 2) / (N + 1), 2.0 * cert->s) *
                             cert->rho * cert->rho;
        if (ratio >= 1.0) {
            throw TailNotSummable("bergman_norm_sq: certificate majorant does not contract");
        }
        out.certified_tail = first / (1.0 - ratio);
    }
    return out;
}

Rational bergman_norm_sq_exact(const UniSeries<Rational> &phi, const Rational &alpha)
{
    auto w = bergman_weights_exact(alpha, phi.order);
    Rational out(0);
    for (int n = 0; n <= phi.order; ++n) {
        out += w[static_cast<std::size_t>(n)] * phi.at(n) * phi.at(n);
    }
    return out;
}

AsymptoticBranch branch_of(const TestFamilyParams &p)
{
    if (2.0 * p.lambda < p.alpha + 2.0) {
        return AsymptoticBranch::subcritical;
    }
    if (2.0 * p.lambda > p.alpha + 2.0) {
        return AsymptoticBranch::supercritical;
    }
    return AsymptoticBranch::critical;
}

double test_family_norm_sq(const TestFamilyParams &params, double tol)
{
    if (params.r >= 1.0 || params.r <= 0.0) {
        throw ToleranceUnachievable("test_family_norm_sq: requires r in (0,1)");
    }
    if (params.alpha <= -1.0 || params.lambda <= 0.0 || params.theta_exp < 0 || tol <= 0.0) {
        throw DomainError("test_family_norm_sq: invalid parameters");
    }
    const double r2 = params.r * params.r;
    const double th = params.theta_exp;
    const double al = params.alpha;
    const double la = params.lambda;
    // n = 0 term: r^Theta Gamma(alpha+2) Theta! / Gamma(Theta+alpha+2).
    double term = std::pow(params.r, th) *
                  std::exp(std::lgamma(al + 2.0) + std::lgamma(th + 1.0) -
                           std::lgamma(th + al + 2.0));
    double sum = 0.0;
    for (long n = 0;; ++n) {
        sum += term;
        const double m = static_cast<double>(n);
        const double ratio = (2 * m + th + 1.0) * (2 * m + th + 2.0) /
                             ((2 * m + th + al + 2.0) * (2 * m + th + al + 3.0)) *
                             ((m + la) / (m + 1.0)) * ((m + la) / (m + 1.0)) * r2;
        term *= ratio;
        // All later ratios are below r^2 max(1, ((n+1+lambda)/(n+2))^2).
        const double lam_factor = std::max(1.0, (m + 1.0 + la) / (m + 2.0));
        const double rho_hat = r2 * lam_factor * lam_factor;
        if (rho_hat < 1.0 && term / (1.0 - rho_hat) < tol) {
            break;
        }
        if (n > 100000000L) {
            throw ToleranceUnachievable("test_family_norm_sq: series did not meet tolerance");
        }
    }
    return sum;
}

double asymptotic_constant(double alpha, double lambda, int /*theta_exp*/)
{
    if (2.0 * lambda <= alpha + 2.0) {
        throw DomainError("asymptotic_constant: requires 2 lambda > alpha + 2");
    }
    return std::exp(std::lgamma(alpha + 2.0) + std::lgamma(2.0 * lambda - alpha - 2.0) -
                    (alpha + 1.0) * std::log(2.0) - 2.0 * std::lgamma(lambda));
}

SubcriticalCheck subcritical_bounded_check(double alpha, double lambda,
                                           const std::vector<double> &r_grid)
{
    TestFamilyParams p{0.5, lambda, 0, alpha};
    if (branch_of(p) != AsymptoticBranch::subcritical) {
        throw DomainError("subcritical_bounded_check: requires 0 < 2 lambda < alpha + 2");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double r : r_grid) {
        p.r = r;
        const double v = test_family_norm_sq(p, 1e-10);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {hi / lo < 10.0, hi};
}

namespace {

struct GridMax {
    double value = 0.0;
    double r = 0.0;
    double theta = 0.0;
};

GridMax scan(const std::function<double(const Complex &)> &abs_phi, double gamma,
             double r_lo, double r_hi, double t_lo, double t_hi, int nr, int nt)
{
    GridMax best;
    for (int i = 0; i <= nr; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / nr;
        if (r < 0.0 || r >= 1.0) {
            continue;
        }
        const double growth = std::pow(1.0 - r * r, gamma);
        for (int j = 0; j < nt; ++j) {
            const double t = t_lo + (t_hi - t_lo) * j / nt;
            const double v = abs_phi(Complex(r * std::cos(t), r * std::sin(t))) * growth;
            if (v > best.value) {
                best = {v, r, t};
            }
        }
    }
    return best;
}

} // namespace

GrowthNormEstimate growth_norm(const std::function<double(const Complex &)> &abs_phi,
                               double gamma, const GridSpec &grid)
{
    GrowthNormEstimate out;
    out.gamma = gamma;
    out.grid = grid;
    GridMax best = scan(abs_phi, gamma, 0.0, grid.r_max, 0.0, 2.0 * pi,
                        grid.radial, grid.angular);
    out.refinement_history.push_back(best.value);
    double dr = grid.r_max / grid.radial;
    double dt = 2.0 * pi / grid.angular;
    for (int round = 0; round < 2; ++round) {
        const double r_lo = std::max(0.0, best.r - dr);
        const double r_hi = std::min(grid.r_max, best.r + dr);
        GridMax refined = scan(abs_phi, gamma, r_lo, r_hi, best.theta - dt,
                               best.theta + dt, 10, 10);
        if (refined.value > best.value) {
            best = refined;
        }
        out.refinement_history.push_back(best.value);
        dr = (r_hi - r_lo) / 10;
        dt = 2.0 * dt / 10;
    }
    out.lower_estimate = best.value;
    const double prev = out.refinement_history[out.refinement_history.size() - 2];
    out.diverging = prev > 0.0 && best.value / prev > 1.05;
    return out;
}

namespace {

BlochCheck bloch_from_abs(const std::function<double(const Complex &)> &abs_phi,
                          int p, int q, const GridSpec &grid)
{
    BlochCheck out{};
    out.estimate = growth_norm(abs_phi, static_cast<double>(p + q), grid).lower_estimate;
    Integer b = factorial(static_cast<unsigned long>(2 * p - 1)) *
                factorial(static_cast<unsigned long>(2 * q - 1));
    out.bound = std::sqrt(b.get_d());
    return out;
}

} // namespace

BlochCheck bloch_bound_check_from_F(const BiSeries<Complex> &F, int p, int q,
                                    const GridSpec &grid)
{
    auto s = uni_truncate(diagonal(bi_partial(F, p, q)), F.order - p - q);
    GridSpec capped = grid;
    capped.r_max = std::min(grid.r_max, 0.7);
    return bloch_from_abs(
        [&s](const Complex &z) { return std::abs(uni_eval(s, z)); }, p, q, capped);
}

BlochCheck bloch_bound_check(const FunctionSpec &f, int p, int q, const GridSpec &grid)
{
    if (f.id == CatalogId::koebe ||
        (f.id == CatalogId::koebe_rotated && f.theta == 0.0)) {
        auto cf = koebe_closed_form(p, q);
        return bloch_from_abs(
            [&cf](const Complex &z) { return std::abs(cf.evaluate(z)); }, p, q, grid);
    }
    const int order = 160 + p + q;
    return bloch_bound_check_from_F(build_F_float(f, order), p, q, grid);
}

namespace {

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration.
void gauss_legendre_01(int n, std::vector<double> &x, std::vector<double> &w)
{
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) {
                break;
            }
        }
        x[static_cast<std::size_t>(i)] = 0.5 * (1.0 + t);
        w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp) * 2.0 * 0.5;
    }
}

} // namespace

double disk_norm_sq_quadrature(const UniSeries<Complex> &poly, double alpha)
{
    if (alpha <= -1.0) {
        throw DomainError("disk_norm_sq_quadrature: requires alpha > -1");
    }
    std::vector<double> u, w;
    gauss_legendre_01(64, u, w);
    const int nt = 2 * poly.order + 1;
    double total = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double r = std::sqrt(u[k]);
        double mean = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double t = 2.0 * pi * j / nt;
            mean += std::norm(uni_eval(poly, Complex(r * std::cos(t), r * std::sin(t))));
        }
        mean /= nt;
        total += w[k] * std::pow(1.0 - u[k], alpha) * mean;
    }
    return (alpha + 1.0) * total;
}

} // namespace hsk
