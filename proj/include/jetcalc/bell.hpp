#pragma once

// Partial exponential Bell polynomials and jet composition.
//
// B_{p,i}(x_1, ..., x_{p-i+1}) = (1/i!) sum over the compositions
// F(p,i) = { (a_1,...,a_i) in (N*)^i : a_1+...+a_i = p } of
// p!/(a_1! ... a_i!) x_{a_1} ... x_{a_i};  |F(p,i)| = C(p-1, i-1).
//
// bell_partial evaluates that sum literally.  Jet composition needs whole
// rows of B_{p,i} values, which the recurrence
//     B_{p,i} = sum_j C(p-1, j-1) x_j B_{p-j, i-1}
// produces in O(order^3); the chain-rule composition below is the
// structurally independent second route used to cross-check it.

#include "jet.hpp"

#include <functional>
#include <vector>

namespace jetcalc {

// All (a_1,...,a_parts) in N^parts (or N*^parts when positive=true) summing
// to total, visited in lexicographic order.
inline void for_each_composition(int total, int parts, bool positive,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (parts <= 0) {
        if (total == 0 && parts == 0) {
            std::vector<int> empty;
            fn(empty);
        }
        return;
    }
    std::vector<int> alpha(static_cast<std::size_t>(parts), 0);
    int lo = positive ? 1 : 0;
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == parts - 1) {
            if (left < lo) return;
            alpha[static_cast<std::size_t>(idx)] = left;
            fn(alpha);
            return;
        }
        for (int v = lo; v <= left - lo * (parts - 1 - idx); ++v) {
            alpha[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, left - v);
        }
    };
    if (total >= lo * parts) rec(0, total);
}

// Literal evaluation over F(p,i); args = (x_1, x_2, ...), needs p-i+1 entries.
template <typename T>
T bell_partial(int p, int i, const std::vector<T>& args) {
    if (p < 1 || i < 1 || i > p)
        throw error("bell_partial needs 1 <= i <= p, got p=" + std::to_string(p) +
                    " i=" + std::to_string(i));
    if (static_cast<int>(args.size()) < p - i + 1)
        throw error("bell_partial(p=" + std::to_string(p) + ", i=" + std::to_string(i) +
                    ") needs " + std::to_string(p - i + 1) + " arguments");
    T p_fact = scalar_traits<T>::factorial(static_cast<unsigned long>(p));
    T sum(0);
    long count = 0;
    for_each_composition(p, i, true, [&](const std::vector<int>& alpha) {
        T term = p_fact;
        for (int a : alpha) {
            term = term / scalar_traits<T>::factorial(static_cast<unsigned long>(a));
            term = term * args[static_cast<std::size_t>(a - 1)];
        }
        sum += term;
        ++count;
    });
    if (!(binom_rat(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(i - 1)) ==
          rat(count)))
        throw error("composition enumeration lost terms");  // cardinality C(p-1,i-1)
    return sum / scalar_traits<T>::factorial(static_cast<unsigned long>(i));
}

// table[p][i] = B_{p,i}(x_1,...) for 0 <= i <= p <= order, via the recurrence.
template <typename T>
std::vector<std::vector<T>> bell_table(int order, const std::vector<T>& args) {
    if (static_cast<int>(args.size()) < order)
        throw error("bell_table needs x_1..x_" + std::to_string(order));
    std::vector<std::vector<T>> b(static_cast<std::size_t>(order) + 1);
    for (int p = 0; p <= order; ++p)
        b[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(p) + 1, T(0));
    b[0][0] = T(1);
    for (int p = 1; p <= order; ++p)
        for (int i = 1; i <= p; ++i) {
            T acc(0);
            for (int j = 1; j <= p - i + 1; ++j)
                acc += scalar_traits<T>::binom(static_cast<unsigned long>(p - 1),
                                               static_cast<unsigned long>(j - 1)) *
                       args[static_cast<std::size_t>(j - 1)] *
                       b[static_cast<std::size_t>(p - j)][static_cast<std::size_t>(i - 1)];
            b[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] = std::move(acc);
        }
    return b;
}

namespace detail {

template <typename T>
void require_composable(const jet<T>& outer, const jet<T>& inner) {
    if (!(outer.base_point() == inner.value()))
        throw mismatch_error("outer jet must be based at the inner jet's value");
    if (outer.order() != inner.order())
        throw order_error("composition needs equal orders");
}

}  // namespace detail

// Faa di Bruno: D^p(phi o g) = sum_i phi^(i)(g(t0)) B_{p,i}(Dg, ..., D^{p-i+1}g).
template <typename T>
jet<T> jet_compose(const jet<T>& outer, const jet<T>& inner) {
    detail::require_composable(outer, inner);
    int n = outer.order();
    std::vector<T> higher(inner.derivs().begin() + 1, inner.derivs().end());
    auto bell = bell_table(n, higher);
    std::vector<T> d(static_cast<std::size_t>(n) + 1, T(0));
    d[0] = outer.value();
    for (int p = 1; p <= n; ++p) {
        T acc(0);
        for (int i = 1; i <= p; ++i)
            acc += outer[i] * bell[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(p)] = std::move(acc);
    }
    return jet<T>(inner.base_point(), std::move(d));
}

// Independent route: (phi o g)' = (phi' o g) g', recursing on the order.
template <typename T>
jet<T> jet_compose_chain(const jet<T>& outer, const jet<T>& inner) {
    detail::require_composable(outer, inner);
    int n = outer.order();
    if (n == 0) return jet<T>::constant(inner.base_point(), outer.value(), 0);
    jet<T> h_prime = jet_mul(
        jet_compose_chain(jet_derive(outer, 1), jet_truncate(inner, n - 1)),
        jet_derive(inner, 1));
    std::vector<T> d;
    d.reserve(static_cast<std::size_t>(n) + 1);
    d.push_back(outer.value());
    d.insert(d.end(), h_prime.derivs().begin(), h_prime.derivs().end());
    return jet<T>(inner.base_point(), std::move(d));
}

}  // namespace jetcalc
