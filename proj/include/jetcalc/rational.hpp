#pragma once

// Scalar backends for the jet library.
//
// Two field backends share one generic interface:
//   - rat:    exact arbitrary-precision rationals (GMP mpq), the default for
//             identity verification,
//   - double: binary64, for the analytic/numeric layer.
//
// Comparisons on the float backend always take a caller-supplied tolerance;
// nothing in this file invents one.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace jetcalc {

using rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation asked for more derivative levels than a jet carries.
struct order_error : error {
    using error::error;
};

// Base-point or backend mismatch between operands.
struct mismatch_error : error {
    using error::error;
};

// Division by a scalar or jet with vanishing constant term.
struct division_error : error {
    using error::error;
};

// Value outside the domain of a function (log of nonpositive, etc.).
struct eval_error : error {
    using error::error;
};

inline rat make_rat(long num, long den = 1) {
    if (den == 0) throw division_error("rational with zero denominator");
    rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q" and plain decimals ("-0.25" -> -1/4, exactly).
inline rat parse_rat(const std::string& text) {
    if (text.empty()) throw error("empty rational literal");
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        rat q;
        if (q.set_str(text, 10) != 0)
            throw error("bad rational literal: '" + text + "'");
        if (q.get_den() == 0) throw division_error("rational with zero denominator");
        q.canonicalize();
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw error("bad decimal literal: '" + text + "'");
    rat num;
    if (num.set_str(digits, 10) != 0 || num.get_den() != 1)
        throw error("bad decimal literal: '" + text + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    rat q(num.get_num(), den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const rat& q) { return q.get_str(); }

inline std::string to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// x^m with the 0^0 = 1 convention used throughout.
inline rat pow_rat(const rat& x, long m) {
    if (m == 0) return rat(1);
    if (m < 0) {
        if (x == 0) throw division_error("negative power of zero");
        return pow_rat(rat(1) / x, -m);
    }
    rat acc(1);
    for (long i = 0; i < m; ++i) acc *= x;
    return acc;
}

inline rat binom_rat(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return rat(b);
}

inline rat factorial_rat(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rat(f);
}

// Generic hooks the templated jet code needs from a scalar type.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<rat> {
    static constexpr bool exact = true;
    static const char* backend_name() { return "exact"; }
    static rat from_rat(const rat& q) { return q; }
    static rat from_int(long n) { return rat(n); }
    static rat binom(unsigned long n, unsigned long k) { return binom_rat(n, k); }
    static rat factorial(unsigned long n) { return factorial_rat(n); }
    static bool is_zero(const rat& x) { return x == 0; }
    static std::string render(const rat& x) { return to_string(x); }
    static double to_double(const rat& x) { return x.get_d(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static const char* backend_name() { return "float"; }
    static double from_rat(const rat& q) { return q.get_d(); }
    static double from_int(long n) { return static_cast<double>(n); }
    static double binom(unsigned long n, unsigned long k) { return binom_rat(n, k).get_d(); }
    static double factorial(unsigned long n) { return factorial_rat(n).get_d(); }
    static bool is_zero(double x) { return x == 0.0; }
    static std::string render(double x) { return to_string(x); }
    static double to_double(double x) { return x; }
};

}  // namespace jetcalc
