#include "hsk/schwarzian.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "hsk/errors.hpp"

namespace hsk {

namespace {

constexpr double pi = 3.14159265358979323846;

template <class T, class CoeffFn>
UniSeries<T> taylor_from(int order, CoeffFn coeff)
{
    UniSeries<T> f(order);
    for (int n = 1; n <= order; ++n) {
        f.at(n) = coeff(n);
    }
    return f;
}

} // namespace

Rational FunctionSpec::coeff_exact(int n) const
{
    if (float_backend) {
        throw DomainError("FunctionSpec: '" + label + "' has no exact coefficients");
    }
    switch (id) {
    case CatalogId::koebe:
        return Rational(n);
    case CatalogId::identity:
        return Rational(n == 1 ? 1 : 0);
    case CatalogId::cayley_halfplane:
        return Rational(1);
    case CatalogId::strip:
        return n % 2 == 1 ? make_rational(1, n) : Rational(0);
    case CatalogId::parabola:
        if (n == 1) {
            return Rational(1);
        }
        return n == 2 ? make_rational(-1, 2) : Rational(0);
    case CatalogId::koebe_rotated:
        // theta in {0, pi} keeps the coefficients n * (+-1)^{n-1} rational.
        if (theta == 0.0) {
            return Rational(n);
        }
        return Rational(n % 2 == 1 ? n : -n);
    case CatalogId::custom:
        if (n <= static_cast<int>(custom_exact.size())) {
            return custom_exact[static_cast<std::size_t>(n - 1)];
        }
        return Rational(0);
    }
    throw DomainError("FunctionSpec: unknown catalog id");
}

Complex FunctionSpec::coeff_float(int n) const
{
    if (id == CatalogId::koebe_rotated && theta != 0.0) {
        return static_cast<double>(n) * std::exp(Complex(0.0, theta * (n - 1)));
    }
    if (id == CatalogId::custom && float_backend) {
        if (n <= static_cast<int>(custom_float.size())) {
            return custom_float[static_cast<std::size_t>(n - 1)];
        }
        return Complex{};
    }
    return as_complex(coeff_exact(n));
}

UniSeries<Rational> FunctionSpec::taylor_exact(int order) const
{
    return taylor_from<Rational>(order, [this](int n) { return coeff_exact(n); });
}

UniSeries<Complex> FunctionSpec::taylor_float(int order) const
{
    return taylor_from<Complex>(order, [this](int n) { return coeff_float(n); });
}

FunctionSpec catalog_function(CatalogId id, double theta)
{
    FunctionSpec f;
    f.id = id;
    f.theta = theta;
    switch (id) {
    case CatalogId::koebe: f.label = "koebe"; break;
    case CatalogId::identity: f.label = "identity"; break;
    case CatalogId::cayley_halfplane: f.label = "cayley_halfplane"; break;
    case CatalogId::strip: f.label = "strip"; break;
    case CatalogId::parabola: f.label = "parabola"; break;
    case CatalogId::koebe_rotated:
        f.label = "koebe_rotated";
        f.float_backend = theta != 0.0 && theta != pi;
        break;
    case CatalogId::custom:
        throw DomainError("catalog_function: custom is not a catalog id");
    }
    return f;
}

FunctionSpec catalog_function(const std::string &name)
{
    if (name == "koebe") return catalog_function(CatalogId::koebe);
    if (name == "identity") return catalog_function(CatalogId::identity);
    if (name == "cayley_halfplane") return catalog_function(CatalogId::cayley_halfplane);
    if (name == "strip") return catalog_function(CatalogId::strip);
    if (name == "parabola") return catalog_function(CatalogId::parabola);
    if (name == "koebe_rotated") return catalog_function(CatalogId::koebe_rotated, pi / 3);
    throw DomainError("catalog_function: unknown function '" + name + "'");
}

std::vector<FunctionSpec> catalog_entries()
{
    return {catalog_function(CatalogId::koebe),
            catalog_function(CatalogId::identity),
            catalog_function(CatalogId::cayley_halfplane),
            catalog_function(CatalogId::strip),
            catalog_function(CatalogId::parabola),
            catalog_function(CatalogId::koebe_rotated, pi / 3)};
}

FunctionSpec function_from_json(const std::string &json_text)
{
    nlohmann::json doc = nlohmann::json::parse(json_text);
    FunctionSpec f;
    f.id = CatalogId::custom;
    f.label = doc.value("label", "custom");
    const auto &coeffs = doc.at("coefficients");
    if (!coeffs.is_array() || coeffs.empty()) {
        throw DomainError("function_from_json: 'coefficients' must be a nonempty array");
    }
    bool any_float = false;
    for (const auto &c : coeffs) {
        if (c.is_number_float()) {
            any_float = true;
        } else if (!c.is_string() && !c.is_number_integer()) {
            throw DomainError("function_from_json: coefficients must be numbers or 'num/den' strings");
        }
    }
    f.float_backend = any_float;
    for (const auto &c : coeffs) {
        if (any_float) {
            if (c.is_string()) {
                f.custom_float.push_back(as_complex(parse_rational(c.get<std::string>())));
            } else {
                f.custom_float.emplace_back(c.get<double>(), 0.0);
            }
        } else {
            if (c.is_string()) {
                f.custom_exact.push_back(parse_rational(c.get<std::string>()));
            } else {
                f.custom_exact.push_back(Rational(c.get<long>()));
            }
        }
    }
    const bool a1_ok = any_float ? f.custom_float[0] == Complex(1.0)
                                 : f.custom_exact[0] == 1;
    if (!a1_ok) {
        throw NotNormalized("function_from_json: a_1 must equal 1");
    }
    return f;
}

Complex KoebeClosedForm::evaluate(const Complex &z) const
{
    Complex t = z * z;
    Complex poly{};
    for (auto it = cd.rbegin(); it != cd.rend(); ++it) {
        poly = poly * t + as_complex(*it);
    }
    Complex mono = std::pow(z, monomial_power);
    Complex pole = std::pow(1.0 - t, pole_order);
    return prefactor.get_d() * mono * poly / pole;
}

UniSeries<Rational> KoebeClosedForm::to_series(int order) const
{
    UniSeries<Rational> out(order);
    // (1-z^2)^{-(p+q)} has coefficient binom(n+p+q-1, p+q-1) at z^{2n}.
    for (int d = 0; d < static_cast<int>(cd.size()); ++d) {
        for (int n = 0;; ++n) {
            const int e = monomial_power + 2 * d + 2 * n;
            if (e > order) {
                break;
            }
            if (pole_order == 0 && n > 0) {
                break;
            }
            Rational binom = pole_order == 0
                                 ? Rational(1)
                                 : Rational(binomial(static_cast<unsigned long>(n + pole_order - 1),
                                                     static_cast<unsigned long>(pole_order - 1)));
            out.at(e) += Rational(prefactor) * cd[static_cast<std::size_t>(d)] * binom;
        }
    }
    return out;
}

double KoebeClosedForm::scaled_magnitude_on_axis(double r) const
{
    double t = r * r;
    double poly = 0.0;
    for (auto it = cd.rbegin(); it != cd.rend(); ++it) {
        poly = poly * t + it->get_d();
    }
    return std::abs(prefactor.get_d()) * std::pow(r, monomial_power) * poly;
}

KoebeClosedForm koebe_closed_form(int p, int q)
{
    if (p < 1 || q < 1) {
        throw DomainError("koebe_closed_form: requires p, q >= 1");
    }
    KoebeClosedForm cf;
    cf.p = std::max(p, q);
    cf.q = std::min(p, q);
    cf.prefactor = -factorial(static_cast<unsigned long>(cf.p));
    cf.monomial_power = cf.p - cf.q;
    cf.pole_order = cf.p + cf.q;
    cf.cd = tq_polynomial(cf.p, cf.q).coeffs;
    return cf;
}

BiSeries<Rational> build_F(const FunctionSpec &f, int order)
{
    return build_F_core(f.taylor_exact(2 * order + 1), order);
}

BiSeries<Complex> build_F_float(const FunctionSpec &f, int order)
{
    return build_F_core(f.taylor_float(2 * order + 1), order);
}

namespace {

template <class T>
GrunskyTable<T> grunsky_core(const BiSeries<T> &F)
{
    GrunskyTable<T> table;
    table.order = F.order;
    table.gamma.assign(static_cast<std::size_t>(F.order) + 1,
                       std::vector<T>(static_cast<std::size_t>(F.order) + 1, T{}));
    for (int n = 1; n <= F.order; ++n) {
        for (int k = 1; k <= F.order; ++k) {
            table.gamma[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = F.at(k, n);
        }
    }
    return table;
}

template <class T>
UniSeries<T> higher_schwarzian_core(const UniSeries<T> &f, int p, int q, int order)
{
    if (p < 1 || q < 1) {
        throw DomainError("higher_schwarzian: requires p, q >= 1");
    }
    auto F = build_F_core(f, order + p + q);
    auto G = bi_partial(F, p, q);
    return uni_truncate(diagonal(G), order);
}

template <class T>
std::pair<UniSeries<T>, UniSeries<T>> classical_schwarzian_core(const UniSeries<T> &f,
                                                                int order)
{
    auto fp = uni_derivative(f);   // order M+2
    auto fpp = uni_derivative(fp); // order M+1
    auto nf = uni_mul(fpp, uni_reciprocal(uni_truncate(fp, order + 1))); // order M+1
    auto sf = uni_sub(uni_derivative(nf),
                      uni_scale(uni_mul(nf, nf),
                                T(ScalarTraits<T>::from_long(1) /
                                  ScalarTraits<T>::from_long(2))));
    return {uni_truncate(nf, order), uni_truncate(sf, order)};
}

} // namespace

GrunskyTable<Rational> grunsky(const FunctionSpec &f, int order)
{
    return grunsky_core(build_F(f, order));
}

GrunskyTable<Complex> grunsky_float(const FunctionSpec &f, int order)
{
    return grunsky_core(build_F_float(f, order));
}

UniSeries<Rational> higher_schwarzian(const FunctionSpec &f, int p, int q, int order)
{
    return higher_schwarzian_core(f.taylor_exact(2 * (order + p + q) + 1), p, q, order);
}

UniSeries<Complex> higher_schwarzian_float(const FunctionSpec &f, int p, int q, int order)
{
    return higher_schwarzian_core(f.taylor_float(2 * (order + p + q) + 1), p, q, order);
}

std::pair<UniSeries<Rational>, UniSeries<Rational>>
classical_schwarzian(const FunctionSpec &f, int order)
{
    return classical_schwarzian_core(f.taylor_exact(order + 3), order);
}

std::pair<UniSeries<Complex>, UniSeries<Complex>>
classical_schwarzian_float(const FunctionSpec &f, int order)
{
    return classical_schwarzian_core(f.taylor_float(order + 3), order);
}

UniSeries<Rational> pq_function(int q, int order)
{
    if (q < 1) {
        throw DomainError("pq_function: requires q >= 1");
    }
    UniSeries<Rational> tail(order);
    for (int m = 0; m <= order; ++m) {
        const long n = q + m;
        Integer ff(1); // n(n-1)...(n-q+1)
        for (long t = 0; t < q; ++t) {
            ff *= n - t;
        }
        Rational c(ff * ff, n);
        c.canonicalize();
        tail.at(m) = c;
    }
    UniSeries<Rational> front(order); // (1-w)^{2q}
    for (int b = 0; b <= std::min(order, 2 * q); ++b) {
        Rational c(binomial(static_cast<unsigned long>(2 * q), static_cast<unsigned long>(b)));
        front.at(b) = b % 2 == 0 ? c : -c;
    }
    return uni_mul(front, tail);
}

bool pq_identity_check(int q, int order)
{
    auto pq = pq_function(q, order / 2);
    UniSeries<Rational> lhs(order); // P_q(w^2)
    for (int k = 0; k <= pq.order; ++k) {
        if (2 * k <= order) {
            lhs.at(2 * k) = pq.at(k);
        }
    }
    auto s = koebe_closed_form(q, q).to_series(order);
    UniSeries<Rational> front(order); // -(1-w^2)^{2q}
    for (int b = 0; 2 * b <= std::min(order, 4 * q); ++b) {
        Rational c(binomial(static_cast<unsigned long>(2 * q), static_cast<unsigned long>(b)));
        front.at(2 * b) = b % 2 == 0 ? -c : c;
    }
    auto rhs = uni_mul(front, s);
    for (int n = 0; n <= order; ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            return false;
        }
    }
    return true;
}

SliceCheck donaire_slice_check(const FunctionSpec &f, int p, int q, const Complex &w,
                               int order)
{
    if (std::abs(w) >= 1.0) {
        throw DomainError("donaire_slice_check: requires |w| < 1");
    }
    auto F = build_F_float(f, order);
    auto G = bi_partial(F, p, q);
    SliceCheck out{};
    double weight = 1.0; // m! Gamma(2p+2) / Gamma(m+2p+2)
    for (int i = 0; i <= G.order; ++i) {
        Complex gi{};
        Complex wp{1.0};
        for (int j = 0; j <= G.order; ++j) {
            gi += G.at(i, j) * wp;
            wp *= w;
        }
        out.norm_sq_partial += weight * std::norm(gi);
        weight *= static_cast<double>(i + 1) / (i + 2 * p + 2);
    }
    Integer bl = factorial(static_cast<unsigned long>(2 * p - 1)) *
                 factorial(static_cast<unsigned long>(2 * q - 1));
    out.bound = bl.get_d() / std::pow(1.0 - std::norm(w), 2 * q);
    return out;
}

} // namespace hsk
