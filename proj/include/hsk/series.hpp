#ifndef HSK_SERIES_HPP
#define HSK_SERIES_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "hsk/errors.hpp"
#include "hsk/rational.hpp"

namespace hsk {

// Scalar backends: Rational (exact) and std::complex<double> (float).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational from_integer(const Integer &z) { return Rational(z); }
    static Rational from_long(long n) { return Rational(n); }
    static bool is_zero(const Rational &x) { return x == 0; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> from_integer(const Integer &z) { return {z.get_d(), 0.0}; }
    static std::complex<double> from_long(long n) { return {static_cast<double>(n), 0.0}; }
    static bool is_zero(const std::complex<double> &x) { return x == std::complex<double>(0.0); }
};

// Truncated Taylor series sum_{n<=N} c_n t^n. Immutable by convention:
// every operation returns a fresh value. Binary operations truncate to
// the smaller operand order; growth is never silent.
template <class T>
struct UniSeries {
    int order = 0;
    std::vector<T> c; // size order+1

    UniSeries() : c(1, T{}) {}
    explicit UniSeries(int n) : order(n), c(static_cast<std::size_t>(n) + 1, T{}) {}

    const T &at(int n) const { return c[static_cast<std::size_t>(n)]; }
    T &at(int n) { return c[static_cast<std::size_t>(n)]; }
};

// Truncated bivariate series sum_{i,j<=N} c_{i,j} z^i w^j, stored as
// columns in w: col[j][i] is the coefficient of z^i w^j.
template <class T>
struct BiSeries {
    int order = 0;
    std::vector<std::vector<T>> col;
    bool symmetric = false;

    BiSeries() : col(1, std::vector<T>(1, T{})) {}
    explicit BiSeries(int n)
        : order(n),
          col(static_cast<std::size_t>(n) + 1,
              std::vector<T>(static_cast<std::size_t>(n) + 1, T{}))
    {
    }

    const T &at(int i, int j) const { return col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; }
    T &at(int i, int j) { return col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; }
};

namespace detail {

template <class T>
bool all_zero(const std::vector<T> &v)
{
    for (const auto &x : v) {
        if (!ScalarTraits<T>::is_zero(x)) {
            return false;
        }
    }
    return true;
}

// c += a * b truncated to c.size() coefficients.
template <class T>
void conv_acc(std::vector<T> &c, const std::vector<T> &a, const std::vector<T> &b)
{
    const int n = static_cast<int>(c.size());
    const int na = std::min<int>(static_cast<int>(a.size()), n);
    for (int i = 0; i < na; ++i) {
        if (ScalarTraits<T>::is_zero(a[static_cast<std::size_t>(i)])) {
            continue;
        }
        const int nb = std::min<int>(static_cast<int>(b.size()), n - i);
        for (int j = 0; j < nb; ++j) {
            c[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
}

} // namespace detail

template <class T>
UniSeries<T> uni_add(const UniSeries<T> &a, const UniSeries<T> &b)
{
    UniSeries<T> out(std::min(a.order, b.order));
    for (int n = 0; n <= out.order; ++n) {
        out.at(n) = a.at(n) + b.at(n);
    }
    return out;
}

template <class T>
UniSeries<T> uni_sub(const UniSeries<T> &a, const UniSeries<T> &b)
{
    UniSeries<T> out(std::min(a.order, b.order));
    for (int n = 0; n <= out.order; ++n) {
        out.at(n) = a.at(n) - b.at(n);
    }
    return out;
}

template <class T>
UniSeries<T> uni_mul(const UniSeries<T> &a, const UniSeries<T> &b)
{
    UniSeries<T> out(std::min(a.order, b.order));
    detail::conv_acc(out.c, a.c, b.c);
    return out;
}

template <class T>
UniSeries<T> uni_scale(const UniSeries<T> &a, const T &s)
{
    UniSeries<T> out(a.order);
    for (int n = 0; n <= a.order; ++n) {
        out.at(n) = a.at(n) * s;
    }
    return out;
}

// Multiplicative inverse to order N; needs c_0 != 0.
template <class T>
UniSeries<T> uni_reciprocal(const UniSeries<T> &a)
{
    if (ScalarTraits<T>::is_zero(a.at(0))) {
        throw ZeroConstantTerm("uni_reciprocal: constant term is zero");
    }
    UniSeries<T> out(a.order);
    const T inv0 = ScalarTraits<T>::from_long(1) / a.at(0);
    out.at(0) = inv0;
    for (int n = 1; n <= a.order; ++n) {
        T acc{};
        for (int k = 1; k <= n; ++k) {
            acc += a.at(k) * out.at(n - k);
        }
        out.at(n) = -inv0 * acc;
    }
    return out;
}

// log(a) to order N via the a b' = a' recurrence; needs c_0 = 1.
template <class T>
UniSeries<T> uni_log(const UniSeries<T> &a)
{
    if (a.at(0) != ScalarTraits<T>::from_long(1)) {
        throw ConstantTermNotOne("uni_log: constant term must be exactly 1");
    }
    UniSeries<T> out(a.order);
    for (int n = 1; n <= a.order; ++n) {
        T acc = ScalarTraits<T>::from_long(n) * a.at(n);
        for (int k = 1; k < n; ++k) {
            acc -= a.at(k) * ScalarTraits<T>::from_long(n - k) * out.at(n - k);
        }
        out.at(n) = acc / ScalarTraits<T>::from_long(n);
    }
    return out;
}

template <class T>
UniSeries<T> uni_derivative(const UniSeries<T> &a)
{
    if (a.order == 0) {
        return UniSeries<T>(0);
    }
    UniSeries<T> out(a.order - 1);
    for (int n = 0; n < a.order; ++n) {
        out.at(n) = ScalarTraits<T>::from_long(n + 1) * a.at(n + 1);
    }
    return out;
}

// c_n -> c_n * factor^n.
template <class T>
UniSeries<T> dilate(const UniSeries<T> &a, const T &factor)
{
    UniSeries<T> out(a.order);
    T pw = ScalarTraits<T>::from_long(1);
    for (int n = 0; n <= a.order; ++n) {
        out.at(n) = a.at(n) * pw;
        pw = pw * factor;
    }
    return out;
}

template <class T>
UniSeries<T> uni_truncate(const UniSeries<T> &a, int order)
{
    if (order > a.order) {
        throw OrderExhausted("uni_truncate: cannot extend order");
    }
    UniSeries<T> out(order);
    std::copy(a.c.begin(), a.c.begin() + order + 1, out.c.begin());
    return out;
}

template <class T>
T uni_eval(const UniSeries<T> &a, const T &z)
{
    T acc{};
    for (int n = a.order; n >= 0; --n) {
        acc = acc * z + a.at(n);
    }
    return acc;
}

template <class T>
BiSeries<T> bi_add(const BiSeries<T> &a, const BiSeries<T> &b)
{
    BiSeries<T> out(std::min(a.order, b.order));
    for (int j = 0; j <= out.order; ++j) {
        for (int i = 0; i <= out.order; ++i) {
            out.at(i, j) = a.at(i, j) + b.at(i, j);
        }
    }
    out.symmetric = a.symmetric && b.symmetric;
    return out;
}

// Cauchy product truncated to indices <= min order, organized as a
// polynomial multiplication in w with z-convolution coefficients.
template <class T>
BiSeries<T> bi_mul(const BiSeries<T> &a, const BiSeries<T> &b)
{
    BiSeries<T> out(std::min(a.order, b.order));
    const int n = out.order;
    std::vector<bool> az(static_cast<std::size_t>(a.order) + 1);
    std::vector<bool> bz(static_cast<std::size_t>(b.order) + 1);
    for (int j = 0; j <= a.order; ++j) {
        az[static_cast<std::size_t>(j)] = detail::all_zero(a.col[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j <= b.order; ++j) {
        bz[static_cast<std::size_t>(j)] = detail::all_zero(b.col[static_cast<std::size_t>(j)]);
    }
    for (int u = 0; u <= n; ++u) {
        if (az[static_cast<std::size_t>(u)]) {
            continue;
        }
        for (int v = 0; u + v <= n; ++v) {
            if (bz[static_cast<std::size_t>(v)]) {
                continue;
            }
            detail::conv_acc(out.col[static_cast<std::size_t>(u + v)],
                             a.col[static_cast<std::size_t>(u)],
                             b.col[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

// Multiply by a univariate series in the z variable (columnwise).
template <class T>
BiSeries<T> bi_mul_uni_z(const BiSeries<T> &a, const UniSeries<T> &u)
{
    BiSeries<T> out(a.order);
    for (int j = 0; j <= a.order; ++j) {
        detail::conv_acc(out.col[static_cast<std::size_t>(j)],
                         u.c, a.col[static_cast<std::size_t>(j)]);
    }
    return out;
}

// Multiply by a univariate series in the w variable.
template <class T>
BiSeries<T> bi_mul_uni_w(const BiSeries<T> &a, const UniSeries<T> &u)
{
    BiSeries<T> out(a.order);
    for (int k = 0; k <= std::min(u.order, a.order); ++k) {
        if (ScalarTraits<T>::is_zero(u.at(k))) {
            continue;
        }
        for (int j = 0; k + j <= a.order; ++j) {
            auto &dst = out.col[static_cast<std::size_t>(k + j)];
            const auto &src = a.col[static_cast<std::size_t>(j)];
            for (int i = 0; i <= a.order; ++i) {
                dst[static_cast<std::size_t>(i)] += u.at(k) * src[static_cast<std::size_t>(i)];
            }
        }
    }
    return out;
}

// log(A) for A with constant term exactly 1. The w-direction is handled
// by integrating d/dw log A = (dA/dw) / A; the j = 0 column is the
// univariate log of A(z, 0).
template <class T>
BiSeries<T> bi_log(const BiSeries<T> &a)
{
    if (a.at(0, 0) != ScalarTraits<T>::from_long(1)) {
        throw ConstantTermNotOne("bi_log: constant term must be exactly 1");
    }
    const int n = a.order;
    const std::size_t sz = static_cast<std::size_t>(n) + 1;

    // Reciprocal R of A, column by column in w.
    std::vector<std::vector<T>> recip(sz, std::vector<T>(sz, T{}));
    {
        UniSeries<T> d0(n);
        d0.c = a.col[0];
        recip[0] = uni_reciprocal(d0).c;
    }
    std::vector<bool> acolz(sz);
    for (int j = 0; j <= n; ++j) {
        acolz[static_cast<std::size_t>(j)] = detail::all_zero(a.col[static_cast<std::size_t>(j)]);
    }
    std::vector<T> tmp(sz);
    for (int j = 1; j <= n; ++j) {
        std::fill(tmp.begin(), tmp.end(), T{});
        for (int i = 1; i <= j; ++i) {
            if (acolz[static_cast<std::size_t>(i)]) {
                continue;
            }
            detail::conv_acc(tmp, a.col[static_cast<std::size_t>(i)],
                             recip[static_cast<std::size_t>(j - i)]);
        }
        auto &rj = recip[static_cast<std::size_t>(j)];
        if (!detail::all_zero(tmp)) {
            std::vector<T> neg(sz);
            for (std::size_t i = 0; i < sz; ++i) {
                neg[i] = -tmp[i];
            }
            detail::conv_acc(rj, recip[0], neg);
        }
    }

    BiSeries<T> out(n);
    {
        UniSeries<T> d0(n);
        d0.c = a.col[0];
        out.col[0] = uni_log(d0).c;
    }
    // Column j-1 of dA/dw is j * (column j of A); integrate back.
    for (int j = 1; j <= n; ++j) {
        std::fill(tmp.begin(), tmp.end(), T{});
        for (int u = 1; u <= j; ++u) {
            if (acolz[static_cast<std::size_t>(u)]) {
                continue;
            }
            std::vector<T> du(sz);
            for (std::size_t i = 0; i < sz; ++i) {
                du[i] = ScalarTraits<T>::from_long(u) * a.col[static_cast<std::size_t>(u)][i];
            }
            detail::conv_acc(tmp, du, recip[static_cast<std::size_t>(j - u)]);
        }
        auto &lj = out.col[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < sz; ++i) {
            lj[i] = tmp[i] / ScalarTraits<T>::from_long(j);
        }
    }
    out.symmetric = a.symmetric;
    return out;
}

// The divided-difference kernel sum_{n>=1} a_n sum_{i+j=n-1} z^i w^j of a
// normalized f (c_0 = 0, c_1 = 1). Needs f known to order 2N+1 to fill an
// order-N square.
template <class T>
BiSeries<T> divided_difference(const UniSeries<T> &f, int out_order)
{
    if (!ScalarTraits<T>::is_zero(f.at(0)) || f.at(1) != ScalarTraits<T>::from_long(1)) {
        throw NotNormalized("divided_difference: requires f(0)=0, f'(0)=1");
    }
    if (f.order < 2 * out_order + 1) {
        throw OrderExhausted("divided_difference: f must be known to order 2N+1");
    }
    BiSeries<T> out(out_order);
    for (int i = 0; i <= out_order; ++i) {
        for (int j = 0; j <= out_order; ++j) {
            out.at(i, j) = f.at(i + j + 1);
        }
    }
    out.symmetric = true;
    return out;
}

// Mixed partial d^{p+q} / dz^p dw^q; the order drops to N - max(p, q).
template <class T>
BiSeries<T> bi_partial(const BiSeries<T> &a, int p, int q)
{
    if (p < 0 || q < 0 || p + q > a.order) {
        throw OrderExhausted("bi_partial: p + q exceeds series order");
    }
    const int m = a.order - std::max(p, q);
    BiSeries<T> out(m);
    std::vector<T> zf(static_cast<std::size_t>(m) + 1);
    std::vector<T> wf(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Integer f(1);
        for (int t = 1; t <= p; ++t) {
            f *= i + t;
        }
        zf[static_cast<std::size_t>(i)] = ScalarTraits<T>::from_integer(f);
        f = 1;
        for (int t = 1; t <= q; ++t) {
            f *= i + t;
        }
        wf[static_cast<std::size_t>(i)] = ScalarTraits<T>::from_integer(f);
    }
    for (int j = 0; j <= m; ++j) {
        for (int i = 0; i <= m; ++i) {
            out.at(i, j) = a.at(i + p, j + q) * zf[static_cast<std::size_t>(i)] *
                           wf[static_cast<std::size_t>(j)];
        }
    }
    out.symmetric = a.symmetric && p == q;
    return out;
}

// Restriction to w = z: c_m = sum_{i+j=m} c_{i,j}, trustworthy to order N.
template <class T>
UniSeries<T> diagonal(const BiSeries<T> &a)
{
    UniSeries<T> out(a.order);
    for (int m = 0; m <= a.order; ++m) {
        T acc{};
        for (int i = 0; i <= m; ++i) {
            acc += a.at(i, m - i);
        }
        out.at(m) = acc;
    }
    return out;
}

template <class T>
bool is_symmetric(const BiSeries<T> &a)
{
    for (int j = 0; j <= a.order; ++j) {
        for (int i = 0; i < j; ++i) {
            if (a.at(i, j) != a.at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace hsk

#endif
