#pragma once

// Truncated derivative-sequence ("jet") arithmetic over a scalar field T.
//
// A jet of order N at t0 stores the derivative values
//     d[k] = D^k f(t0),  k = 0..N
// (not Taylor coefficients).  Products follow the Leibniz binomial rule, D is
// a pure left shift, and an operation that consumes k derivative levels of an
// order-N jet yields a jet of order N-k.  Operations fail loudly instead of
// fabricating coefficients beyond the valid order.

#include "rational.hpp"

#include <utility>
#include <vector>

namespace jetcalc {

template <typename T>
class jet {
public:
    jet(T base_point, std::vector<T> derivs)
        : base_(std::move(base_point)), d_(std::move(derivs)) {
        if (d_.empty()) throw order_error("jet needs at least the order-0 value");
    }

    // Jet of the constant function c.
    static jet constant(T base_point, T value, int order) {
        check_order(order);
        std::vector<T> d(static_cast<std::size_t>(order) + 1, T(0));
        d[0] = std::move(value);
        return jet(std::move(base_point), std::move(d));
    }

    // Jet of the identity t |-> t at base_point: (t0, 1, 0, ..., 0).
    static jet variable(T base_point, int order) {
        check_order(order);
        std::vector<T> d(static_cast<std::size_t>(order) + 1, T(0));
        d[0] = base_point;
        if (order >= 1) d[1] = T(1);
        return jet(std::move(base_point), std::move(d));
    }

    int order() const { return static_cast<int>(d_.size()) - 1; }
    const T& base_point() const { return base_; }
    const std::vector<T>& derivs() const { return d_; }

    const T& operator[](int k) const {
        if (k < 0 || k > order())
            throw order_error("derivative index " + std::to_string(k) +
                              " outside jet of order " + std::to_string(order()));
        return d_[static_cast<std::size_t>(k)];
    }

    const T& value() const { return d_[0]; }

private:
    static void check_order(int order) {
        if (order < 0) throw order_error("negative jet order");
    }

    T base_;
    std::vector<T> d_;
};

namespace detail {

template <typename T>
void require_compatible(const jet<T>& a, const jet<T>& b) {
    if (!(a.base_point() == b.base_point()))
        throw mismatch_error("jets have different base points");
}

}  // namespace detail

template <typename T>
jet<T> jet_add(const jet<T>& a, const jet<T>& b) {
    detail::require_compatible(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<T> d(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(k)] = a[k] + b[k];
    return jet<T>(a.base_point(), std::move(d));
}

template <typename T>
jet<T> jet_sub(const jet<T>& a, const jet<T>& b) {
    detail::require_compatible(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<T> d(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(k)] = a[k] - b[k];
    return jet<T>(a.base_point(), std::move(d));
}

template <typename T>
jet<T> jet_neg(const jet<T>& a) {
    std::vector<T> d(a.derivs());
    for (auto& x : d) x = -x;
    return jet<T>(a.base_point(), std::move(d));
}

template <typename T>
jet<T> jet_scale(const T& c, const jet<T>& a) {
    std::vector<T> d(a.derivs());
    for (auto& x : d) x = c * x;
    return jet<T>(a.base_point(), std::move(d));
}

// Leibniz rule: d[n] = sum_k C(n,k) a[k] b[n-k].
template <typename T>
jet<T> jet_mul(const jet<T>& a, const jet<T>& b) {
    detail::require_compatible(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<T> d(static_cast<std::size_t>(n) + 1, T(0));
    for (int m = 0; m <= n; ++m) {
        T acc(0);
        for (int k = 0; k <= m; ++k)
            acc += scalar_traits<T>::binom(static_cast<unsigned long>(m),
                                           static_cast<unsigned long>(k)) *
                   a[k] * b[m - k];
        d[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return jet<T>(a.base_point(), std::move(d));
}

// D^k as a left shift; consumes k derivative levels.
template <typename T>
jet<T> jet_derive(const jet<T>& a, int k) {
    if (k < 0) throw order_error("negative derivation order");
    if (k > a.order())
        throw order_error("cannot take D^" + std::to_string(k) + " of an order-" +
                          std::to_string(a.order()) + " jet");
    std::vector<T> d(a.derivs().begin() + k, a.derivs().end());
    return jet<T>(a.base_point(), std::move(d));
}

// Right shift, with the antiderivative's value at the base point supplied.
template <typename T>
jet<T> jet_antiderive(const jet<T>& a, T value_at_base) {
    std::vector<T> d;
    d.reserve(a.derivs().size() + 1);
    d.push_back(std::move(value_at_base));
    d.insert(d.end(), a.derivs().begin(), a.derivs().end());
    return jet<T>(a.base_point(), std::move(d));
}

template <typename T>
jet<T> jet_truncate(const jet<T>& a, int order) {
    if (order < 0 || order > a.order())
        throw order_error("cannot truncate an order-" + std::to_string(a.order()) +
                          " jet to order " + std::to_string(order));
    std::vector<T> d(a.derivs().begin(), a.derivs().begin() + order + 1);
    return jet<T>(a.base_point(), std::move(d));
}

// Reciprocal via the Leibniz recurrence for (a*r) = 1.  min_abs is the
// caller's invertibility tolerance on the float backend; the default 0 keeps
// the exact-zero rule.
template <typename T>
jet<T> jet_reciprocal(const jet<T>& a, double min_abs = 0.0) {
    if constexpr (scalar_traits<T>::exact) {
        if (a.value() == T(0)) throw division_error("reciprocal of a jet with zero value");
    } else {
        if (std::abs(scalar_traits<T>::to_double(a.value())) <= min_abs)
            throw division_error("reciprocal of a jet with (near-)zero value");
    }
    int n = a.order();
    std::vector<T> r(static_cast<std::size_t>(n) + 1, T(0));
    r[0] = T(1) / a.value();
    for (int m = 1; m <= n; ++m) {
        T acc(0);
        for (int k = 1; k <= m; ++k)
            acc += scalar_traits<T>::binom(static_cast<unsigned long>(m),
                                           static_cast<unsigned long>(k)) *
                   a[k] * r[static_cast<std::size_t>(m - k)];
        r[static_cast<std::size_t>(m)] = -acc / a.value();
    }
    return jet<T>(a.base_point(), std::move(r));
}

// Integer power; negative exponents go through the reciprocal first so there
// is a single division point.
template <typename T>
jet<T> jet_powi(const jet<T>& a, long m, double min_abs = 0.0) {
    if (m < 0) return jet_powi(jet_reciprocal(a, min_abs), -m);
    jet<T> acc = jet<T>::constant(a.base_point(), T(1), a.order());
    for (long i = 0; i < m; ++i) acc = jet_mul(acc, a);
    return acc;
}

template <typename T>
jet<T> jet_div(const jet<T>& a, const jet<T>& b, double min_abs = 0.0) {
    return jet_mul(a, jet_reciprocal(b, min_abs));
}

template <typename T>
bool jet_equal(const jet<T>& a, const jet<T>& b) {
    if (!(a.base_point() == b.base_point()) || a.order() != b.order()) return false;
    for (int k = 0; k <= a.order(); ++k)
        if (!(a[k] == b[k])) return false;
    return true;
}

template <typename T>
jet<T> operator+(const jet<T>& a, const jet<T>& b) { return jet_add(a, b); }
template <typename T>
jet<T> operator-(const jet<T>& a, const jet<T>& b) { return jet_sub(a, b); }
template <typename T>
jet<T> operator-(const jet<T>& a) { return jet_neg(a); }
template <typename T>
jet<T> operator*(const jet<T>& a, const jet<T>& b) { return jet_mul(a, b); }
template <typename T>
jet<T> operator*(const T& c, const jet<T>& a) { return jet_scale(c, a); }

}  // namespace jetcalc
