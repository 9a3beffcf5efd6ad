#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "patchlab/constants.hpp"

namespace patchlab {

/// sin(x)/x with the removable singularity handled: below |x| = 1e-8 the
/// truncated series 1 - x^2/6 is returned (indistinguishable from 1 in double).
inline double sinc(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("sinc: argument must be finite");
    }
    if (std::abs(x) < 1e-8) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

inline double deg_to_rad(double deg) { return deg * constants::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / constants::pi; }

/// 20*log10(|value|), clamped at floor_db. Zero maps to the floor.
inline double amplitude_db(double value, double floor_db) {
    const double mag = std::abs(value);
    if (mag <= 0.0) {
        return floor_db;
    }
    const double db = 20.0 * std::log10(mag);
    return db < floor_db ? floor_db : db;
}

/// Round to the nearest multiple of step (used for ground-plane sizing).
inline double round_to_step(double value, double step) {
    if (step <= 0.0) {
        throw std::invalid_argument("round_to_step: step must be positive");
    }
    return std::round(value / step) * step;
}

/// Composite Simpson rule over [a, b] with n intervals (n even, >= 2).
/// Works for any value type supporting + and scalar *.
template <typename F>
auto simpson(F&& f, double a, double b, int n) -> decltype(f(a)) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("simpson: interval count must be even and >= 2");
    }
    const double h = (b - a) / n;
    auto sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        sum = sum + w * f(a + i * h);
    }
    return (h / 3.0) * sum;
}

/// Nearest even interval count for a target step over a range; never below 2.
inline int even_intervals(double range, double step) {
    if (step <= 0.0 || range <= 0.0) {
        throw std::invalid_argument("even_intervals: range and step must be positive");
    }
    int n = static_cast<int>(std::lround(range / step));
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    return n;
}

/// Golden-section search for the minimum of f on [a, b]. Terminates when the
/// bracket is narrower than tol and returns the bracket midpoint. Assumes f is
/// unimodal on [a, b]; for monotone f it converges to the better endpoint.
template <typename F>
double golden_section_minimize(F&& f, double a, double b, double tol) {
    if (!(a <= b)) {
        throw std::invalid_argument("golden_section_minimize: invalid bracket");
    }
    if (tol <= 0.0) {
        throw std::invalid_argument("golden_section_minimize: tol must be positive");
    }
    constexpr double inv_phi = 0.6180339887498949;  // 1/phi
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace patchlab
