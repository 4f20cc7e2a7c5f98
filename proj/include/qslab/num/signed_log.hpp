#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qslab::num {

/// A real number stored as sign and natural log of magnitude.
///
/// Quantities like exp(-exp(n^2)) underflow binary floating point long
/// before the geometry that produces them stops being meaningful, so all
/// code paths that can meet such magnitudes carry them as SignedLog and
/// only convert to plain doubles at the reporting boundary.
struct SignedLog {
    int sign = 0;  // -1, 0, +1; when 0 the ln field is ignored
    double ln = -std::numeric_limits<double>::infinity();

    constexpr SignedLog() = default;
    constexpr SignedLog(int s, double l) : sign(s), ln(l) {}

    static SignedLog zero() { return {}; }

    static SignedLog of(double v) {
        if (v == 0.0) return {};
        if (std::isnan(v)) throw std::invalid_argument("SignedLog::of(nan)");
        return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
    }

    /// exp(l) with positive sign, without ever forming exp(l).
    static SignedLog from_log(double l) { return {1, l}; }
    static SignedLog from_log(int sign, double l) {
        return sign == 0 ? SignedLog{} : SignedLog{sign, l};
    }

    bool is_zero() const { return sign == 0; }

    /// Plain double value; underflows/overflows honestly.
    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(ln);
    }

    SignedLog abs() const { return sign == 0 ? SignedLog{} : SignedLog{1, ln}; }

    SignedLog operator-() const { return {-sign, ln}; }

    friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.ln + b.ln};
    }

    friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
        if (b.sign == 0) throw std::domain_error("SignedLog division by zero");
        if (a.sign == 0) return {};
        return {a.sign * b.sign, a.ln - b.ln};
    }

    SignedLog pow_int(int m) const {
        if (m == 0) return {1, 0.0};
        if (sign == 0) return {};
        int s = (sign < 0 && (m % 2 != 0)) ? -1 : 1;
        return {s, ln * m};
    }

    /// Signed log-space addition: log(|e^a ± e^b|) via log1p, stable for
    /// wildly different magnitudes.
    friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const SignedLog& hi = (a.ln >= b.ln) ? a : b;
        const SignedLog& lo = (a.ln >= b.ln) ? b : a;
        double d = lo.ln - hi.ln;  // <= 0
        if (hi.sign == lo.sign) return {hi.sign, hi.ln + std::log1p(std::exp(d))};
        if (d == 0.0) return {};  // exact cancellation
        double t = -std::expm1(d);  // 1 - e^d in (0, 1]
        return {hi.sign, hi.ln + std::log(t)};
    }

    friend SignedLog operator-(const SignedLog& a, const SignedLog& b) { return a + (-b); }

    // Ordering of the represented real values.
    friend bool operator<(const SignedLog& a, const SignedLog& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        return a.sign > 0 ? a.ln < b.ln : a.ln > b.ln;
    }
    friend bool operator>(const SignedLog& a, const SignedLog& b) { return b < a; }
    friend bool operator<=(const SignedLog& a, const SignedLog& b) { return !(b < a); }
    friend bool operator>=(const SignedLog& a, const SignedLog& b) { return !(a < b); }
};

/// max by value, first argument wins ties (deterministic reductions).
inline const SignedLog& sl_max(const SignedLog& a, const SignedLog& b) {
    return (b > a) ? b : a;
}

}  // namespace qslab::num
