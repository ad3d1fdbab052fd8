#ifndef HSK_SCHWARZIAN_HPP
#define HSK_SCHWARZIAN_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hsk/exactcore.hpp"
#include "hsk/series.hpp"

namespace hsk {

using Complex = std::complex<double>;

enum class CatalogId {
    koebe,
    identity,
    cayley_halfplane, // z/(1-z)
    strip,            // (1/2) log((1+z)/(1-z))
    parabola,         // z - z^2/2
    koebe_rotated,    // z/(1 - e^{i theta} z)^2, float backend
    custom,
};

// A normalized function (a_1 = 1, a_0 = 0). Catalog entries generate
// coefficients to any order; custom coefficient lists are treated as
// polynomials beyond the supplied data and are NOT checked for
// univalence -- the paper's inequalities are theorems only for class S,
// so reports distinguish catalog from unverified input.
struct FunctionSpec {
    CatalogId id = CatalogId::custom;
    std::string label;
    double theta = 0.0; // koebe_rotated only
    std::vector<Rational> custom_exact;  // a_1, a_2, ... when exact
    std::vector<Complex> custom_float;   // a_1, a_2, ... when float
    bool float_backend = false;

    bool is_catalog() const { return id != CatalogId::custom; }

    Rational coeff_exact(int n) const;   // a_n, n >= 1
    Complex coeff_float(int n) const;

    // Taylor series of f itself (c_0 = 0, c_1 = 1) to the given order.
    UniSeries<Rational> taylor_exact(int order) const;
    UniSeries<Complex> taylor_float(int order) const;
};

FunctionSpec catalog_function(CatalogId id, double theta = 0.0);
FunctionSpec catalog_function(const std::string &name);
// All exact-backend catalog entries plus one rotated Koebe sample.
std::vector<FunctionSpec> catalog_entries();
// Parse the {"label": ..., "coefficients": [...]} JSON document.
FunctionSpec function_from_json(const std::string &json_text);

template <class T>
struct GrunskyTable {
    int order = 0;
    std::vector<std::vector<T>> gamma; // gamma[n][k], 1-based, size (N+1)^2

    const T &at(int n, int k) const
    {
        return gamma[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

// Closed form S_kappa^{[p,q]}(z) = prefactor * z^{p-q} (1-z^2)^{-(p+q)}
// * sum_d C_d z^{2d}, stored canonically with p >= q.
struct KoebeClosedForm {
    int p = 1;
    int q = 1;
    Integer prefactor;       // -p!
    int monomial_power = 0;  // p - q
    int pole_order = 2;      // p + q
    std::vector<Rational> cd;

    Complex evaluate(const Complex &z) const;
    UniSeries<Rational> to_series(int order) const;
    // |S(z)| at radius r along the positive real axis times (1-r^2)^{p+q}.
    double scaled_magnitude_on_axis(double r) const;
};

KoebeClosedForm koebe_closed_form(int p, int q);

// F(z,w) = log[ (f(z)-f(w))/(z-w) * z/f(z) * w/f(w) ] as a truncated
// bivariate series; f must be supplied to order 2N+1.
template <class T>
BiSeries<T> build_F_core(const UniSeries<T> &f, int order)
{
    auto dd = divided_difference(f, order);
    UniSeries<T> over_z(order); // f(t)/t
    for (int k = 0; k <= order; ++k) {
        over_z.at(k) = f.at(k + 1);
    }
    auto u = uni_reciprocal(over_z);
    auto prod = bi_mul_uni_w(bi_mul_uni_z(dd, u), u);
    auto out = bi_log(prod);
    out.symmetric = true;
    return out;
}

BiSeries<Rational> build_F(const FunctionSpec &f, int order);
BiSeries<Complex> build_F_float(const FunctionSpec &f, int order);

GrunskyTable<Rational> grunsky(const FunctionSpec &f, int order);
GrunskyTable<Complex> grunsky_float(const FunctionSpec &f, int order);

// S_f^{[p,q]} to order M. Builds F at order M + p + q so the diagonal
// is fully determined through order M.
UniSeries<Rational> higher_schwarzian(const FunctionSpec &f, int p, int q, int order);
UniSeries<Complex> higher_schwarzian_float(const FunctionSpec &f, int p, int q, int order);

// Pre-Schwarzian N_f = f''/f' and Schwarzian S_f = N_f' - N_f^2/2.
std::pair<UniSeries<Rational>, UniSeries<Rational>>
classical_schwarzian(const FunctionSpec &f, int order);
std::pair<UniSeries<Complex>, UniSeries<Complex>>
classical_schwarzian_float(const FunctionSpec &f, int order);

// P_q(w) = (1-w)^{2q} sum_{n>=q} [n(n-1)...(n-q+1)]^2 / n * w^{n-q}.
UniSeries<Rational> pq_function(int q, int order);
// Checks P_q(w^2) = -(1-w^2)^{2q} S_kappa^{[q,q]}(w) coefficientwise.
bool pq_identity_check(int q, int order);

inline Complex as_complex(const Rational &r) { return {r.get_d(), 0.0}; }
inline Complex as_complex(const Complex &c) { return c; }

// Grunsky quadratic form: lhs = |sum gamma_{n,k} x_k x_n|^2 against
// rhs = (sum |x_k|^2/k)(sum |x_n|^2/n); x is indexed from 1.
template <class T>
std::pair<double, double> grunsky_quadratic(const GrunskyTable<T> &table,
                                            const std::vector<Complex> &x)
{
    const int len = static_cast<int>(x.size());
    if (len > table.order) {
        throw SupportExceedsOrder("grunsky_quadratic: vector support exceeds table order");
    }
    Complex bilinear{};
    double weighted = 0.0;
    for (int n = 1; n <= len; ++n) {
        const Complex xn = x[static_cast<std::size_t>(n - 1)];
        weighted += std::norm(xn) / n;
        for (int k = 1; k <= len; ++k) {
            bilinear += as_complex(table.at(n, k)) * x[static_cast<std::size_t>(k - 1)] * xn;
        }
    }
    return {std::norm(bilinear), weighted * weighted};
}

struct SliceCheck {
    double norm_sq_partial;
    double bound;
};

// Donaire slice bound: truncated ||G_f^{[p,q]}(., w)||_{2p}^2 against
// (2p-1)!(2q-1)!/(1-|w|^2)^{2q}.
SliceCheck donaire_slice_check(const FunctionSpec &f, int p, int q,
                               const Complex &w, int order);

} // namespace hsk

#endif
