#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dt/errors.hpp"
#include "dt/rational.hpp"

namespace dt {

/// Truncated formal power series in one variable q with exact rational
/// coefficients. A value of order N stores the coefficients of q^0..q^N.
///
/// Arithmetic never extends the truncation order: every binary operation
/// truncates to the minimum of the operand orders. Values are immutable
/// after construction and all operations are pure.
class Series {
public:
    /// Zero series of the given order.
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}

    Series(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        check_order(order);
        if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
            throw Error("coefficient count does not match order+1");
    }

    static Series zero(int order) { return Series(order); }

    static Series one(int order) { return constant(1, order); }

    static Series constant(const Rational& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * q^k, truncated to the given order (vanishes when k > order).
    static Series monomial(const Rational& c, int k, int order) {
        Series s(order);
        if (k < 0) throw OutOfRange("negative exponent in monomial");
        if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Exact coefficient of q^m; throws OutOfRange unless 0 <= m <= order.
    const Rational& coefficient(int m) const {
        if (m < 0 || m > order()) throw OutOfRange("coefficient index outside truncation order");
        return coeffs_[static_cast<std::size_t>(m)];
    }

    bool operator==(const Series& rhs) const = default;

    Series operator+(const Series& rhs) const {
        const int n = std::min(order(), rhs.order());
        Series out(n);
        for (int i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
        return out;
    }

    Series operator-(const Series& rhs) const {
        const int n = std::min(order(), rhs.order());
        Series out(n);
        for (int i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
        return out;
    }

    Series operator-() const {
        Series out(order());
        for (int i = 0; i <= order(); ++i) out.coeffs_[i] = -coeffs_[i];
        return out;
    }

    /// Cauchy product, truncated to the minimum operand order.
    Series operator*(const Series& rhs) const {
        const int n = std::min(order(), rhs.order());
        Series out(n);
        for (int i = 0; i <= n; ++i) {
            if (coeffs_[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return out;
    }

    Series operator*(const Rational& c) const {
        Series out(order());
        for (int i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] * c;
        return out;
    }

    friend Series operator*(const Rational& c, const Series& f) { return f * c; }

    /// Multiplicative inverse to truncation order; requires f(0) != 0.
    Series inverse() const {
        if (coeffs_[0] == 0) throw ZeroConstantTerm();
        const int n = order();
        Series out(n);
        out.coeffs_[0] = 1 / coeffs_[0];
        for (int m = 1; m <= n; ++m) {
            Rational acc = 0;
            for (int k = 1; k <= m; ++k) acc += coeffs_[k] * out.coeffs_[m - k];
            out.coeffs_[m] = -acc / coeffs_[0];
        }
        return out;
    }

    /// f^e by binary exponentiation; negative exponents route through
    /// inverse() so integral inputs stay integral.
    Series pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Series acc = one(order());
        Series base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k != 0) {
            if (k & 1UL) acc = acc * base;
            base = base * base;
            k >>= 1UL;
        }
        return acc;
    }

    /// Formal exponential; requires f(0) = 0. Uses the derivative
    /// recurrence m*g_m = sum_{k=1..m} k f_k g_{m-k}.
    Series exp() const {
        if (coeffs_[0] != 0) throw BadConstantTerm("exp requires constant term 0");
        const int n = order();
        Series out(n);
        out.coeffs_[0] = 1;
        for (int m = 1; m <= n; ++m) {
            Rational acc = 0;
            for (int k = 1; k <= m; ++k) acc += Rational(k) * coeffs_[k] * out.coeffs_[m - k];
            out.coeffs_[m] = acc / m;
        }
        return out;
    }

    /// Formal logarithm; requires f(0) = 1.
    Series log() const {
        if (coeffs_[0] != 1) throw BadConstantTerm("log requires constant term 1");
        const int n = order();
        Series out(n);
        for (int m = 1; m <= n; ++m) {
            Rational acc = 0;
            for (int k = 1; k < m; ++k) acc += Rational(k) * out.coeffs_[k] * coeffs_[m - k];
            out.coeffs_[m] = coeffs_[m] - acc / m;
        }
        return out;
    }

    /// q -> q^k substitution: g_m = f_{m/k} when k | m, else 0. The
    /// truncation order is preserved.
    Series substitute_power(int k) const {
        if (k < 1) throw OutOfRange("substitution exponent must be >= 1");
        const int n = order();
        Series out(n);
        for (int i = 0; i * k <= n && i <= n; ++i) out.coeffs_[static_cast<std::size_t>(i) * k] = coeffs_[i];
        return out;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

private:
    static int check_order(int order) {
        if (order < 0) throw OutOfRange("series order must be nonnegative");
        return order;
    }

    std::vector<Rational> coeffs_;
};

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series mul(const Series& a, const Series& b) { return a * b; }
inline Series inv(const Series& f) { return f.inverse(); }
inline Series int_pow(const Series& f, long e) { return f.pow(e); }
inline Series exp_series(const Series& f) { return f.exp(); }
inline Series log_series(const Series& f) { return f.log(); }
inline Series substitute_power(const Series& f, int k) { return f.substitute_power(k); }
inline const Rational& coefficient(const Series& f, int m) { return f.coefficient(m); }

/// prod_{k=1..N} (1 - q^k)^{-c_k} truncated at the given order. Entries of
/// c beyond the order (or a shorter c) are ignored / treated as zero.
inline Series euler_product(const std::vector<long>& c, int order) {
    Series acc = Series::one(order);
    for (int k = 1; k <= order; ++k) {
        const long ck = (static_cast<std::size_t>(k) <= c.size()) ? c[static_cast<std::size_t>(k) - 1] : 0;
        if (ck == 0) continue;
        Series base = Series::one(order) - Series::monomial(1, k, order);
        acc = acc * base.pow(-ck);
    }
    return acc;
}

/// exp(sum_{m>=1} f(q^m)/m), the plethystic exponential; requires f(0) = 0.
inline Series plethystic_exp(const Series& f) {
    if (f.coefficient(0) != 0) throw BadConstantTerm("plethystic exponential requires constant term 0");
    const int n = f.order();
    Series arg(n);
    for (int m = 1; m <= n; ++m) arg = arg + f.substitute_power(m) * Rational(1, m);
    return arg.exp();
}

} // namespace dt
