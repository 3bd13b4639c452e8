#pragma once

#include <cmath>
#include <limits>

namespace casimir {

// Signed magnitude stored in log space.  Used wherever sums or products would
// overflow the double range (scattering amplitudes grow like exp(2*xi_tilde*s)).
struct LogScaled {
    double log_mag = -std::numeric_limits<double>::infinity();
    int sign = 0;  // -1, 0, +1

    static LogScaled zero() { return {}; }

    static LogScaled from_value(double v) {
        if (v == 0.0 || std::isnan(v)) return {};
        return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
    }

    static LogScaled from_log(double lm, int s) {
        if (s == 0) return {};
        return {lm, s > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }

    // May overflow/underflow to +-inf / 0; caller checks log_mag if that matters.
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }

    LogScaled operator-() const { return {log_mag, -sign}; }

    friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.log_mag + b.log_mag, a.sign * b.sign};
    }

    friend LogScaled operator*(const LogScaled& a, double v) {
        return a * LogScaled::from_value(v);
    }

    friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0) return {};
        return {a.log_mag - b.log_mag, a.sign * b.sign};
    }

    // log-sum-exp with signs
    friend LogScaled operator+(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogScaled& big = a.log_mag >= b.log_mag ? a : b;
        const LogScaled& sml = a.log_mag >= b.log_mag ? b : a;
        double r = std::exp(sml.log_mag - big.log_mag);  // in [0,1]
        double comb = big.sign == sml.sign ? 1.0 + r : 1.0 - r;
        if (comb == 0.0) return {};
        return {big.log_mag + std::log(comb), big.sign};
    }

    friend LogScaled operator-(const LogScaled& a, const LogScaled& b) {
        return a + (-b);
    }

    LogScaled& operator+=(const LogScaled& b) { return *this = *this + b; }
    LogScaled& operator*=(const LogScaled& b) { return *this = *this * b; }
};

}  // namespace casimir
