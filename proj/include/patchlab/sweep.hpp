#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "patchlab/design.hpp"
#include "patchlab/types.hpp"

namespace patchlab {

/// Calibrated quality factors above this are rejected as a degenerate band.
inline constexpr double kQualityFactorCap = 1e6;

/// Lumped parallel-resonant surrogate. This is a stand-in for the patch input
/// impedance near resonance, calibrated so its VSWR <= 2 band matches a target
/// fractional bandwidth; it makes no claim to reproduce full-wave magnitudes.
struct ResonatorModel {
    double f0;       ///< Hz
    double q_total;  ///< loaded quality factor
    double r_res;    ///< resonant resistance (ohm)
    double z0;       ///< reference impedance (ohm)
};

struct SweepPoint {
    double f;       ///< Hz
    double s11_db;  ///< <= 0, equals -return_loss_db
    double vswr;    ///< >= 1
};

enum class BandCriterion { vswr2, s11_minus10db };

struct BandReport {
    double f_low;      ///< Hz
    double f_high;     ///< Hz
    double bandwidth;  ///< f_high - f_low (Hz)
    double fractional; ///< bandwidth / f0
    BandCriterion criterion;
};

/// Fits the surrogate Q so that the matched-case VSWR <= 2 fractional band
/// equals fractional_bw: Q = (s-1)/(B*sqrt(s)) at s = 2. The same Q is kept
/// for mildly mismatched r_res (documented approximation).
inline ResonatorModel calibrate_model(double f0, double fractional_bw, double r_res,
                                      double z0) {
    if (!(f0 > 0.0) || !(r_res > 0.0) || !(z0 > 0.0)) {
        throw std::invalid_argument("calibrate_model: f0 and resistances must be positive");
    }
    if (!(fractional_bw > 0.0 && fractional_bw < 0.5)) {
        throw std::invalid_argument("calibrate_model: fractional bandwidth out of (0, 0.5)");
    }
    const double q = 1.0 / (fractional_bw * std::sqrt(2.0));
    if (q > kQualityFactorCap) {
        throw std::domain_error("calibrate_model: bandwidth too small, Q exceeds cap");
    }
    return ResonatorModel{f0, q, r_res, z0};
}

/// Input impedance of the parallel-resonant surrogate at frequency f.
inline std::complex<double> impedance_at(const ResonatorModel& model, double f) {
    if (!(f > 0.0)) {
        throw std::invalid_argument("impedance_at: frequency must be positive");
    }
    const double detune = f / model.f0 - model.f0 / f;
    return model.r_res / std::complex<double>(1.0, model.q_total * detune);
}

/// Uniformly spaced S11/VSWR sweep over [f_start, f_stop].
inline std::vector<SweepPoint> frequency_sweep(const ResonatorModel& model, double f_start,
                                               double f_stop, int n_points) {
    if (!(f_start > 0.0) || !(f_start < f_stop)) {
        throw std::invalid_argument("frequency_sweep: need 0 < f_start < f_stop");
    }
    if (n_points < 2) {
        throw std::invalid_argument("frequency_sweep: need at least 2 points");
    }
    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(n_points));
    const double df = (f_stop - f_start) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = (i == n_points - 1) ? f_stop : f_start + i * df;
        const MatchMetrics m = match_metrics(impedance_at(model, f), model.z0);
        points.push_back(SweepPoint{f, -m.return_loss_db, m.vswr});
    }
    return points;
}

namespace detail {

inline bool criterion_met(const ResonatorModel& model, double f, BandCriterion criterion) {
    const MatchMetrics m = match_metrics(impedance_at(model, f), model.z0);
    if (criterion == BandCriterion::vswr2) {
        return m.vswr <= 2.0;
    }
    return -m.return_loss_db <= -10.0;
}

}  // namespace detail

/// Band-edge extraction by bisection on each side of resonance, to 1e-6
/// relative frequency. The lower edge rounds down and the upper edge rounds
/// up (band reported slightly outward).
inline BandReport extract_band(const ResonatorModel& model, BandCriterion criterion) {
    if (!detail::criterion_met(model, model.f0, criterion)) {
        throw std::domain_error("extract_band: criterion not satisfied at resonance");
    }
    const double tol = 1e-6 * model.f0;

    // Outer frequencies where the criterion fails; |Z| -> 0 away from f0, so
    // repeated halving/doubling terminates.
    double below = model.f0 / 2.0;
    while (detail::criterion_met(model, below, criterion)) below /= 2.0;
    double above = model.f0 * 2.0;
    while (detail::criterion_met(model, above, criterion)) above *= 2.0;

    double lo = below, hi = model.f0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (detail::criterion_met(model, mid, criterion)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double f_low = lo;

    lo = model.f0;
    hi = above;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (detail::criterion_met(model, mid, criterion)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double f_high = hi;

    const double bandwidth = f_high - f_low;
    return BandReport{f_low, f_high, bandwidth, bandwidth / model.f0, criterion};
}

}  // namespace patchlab
