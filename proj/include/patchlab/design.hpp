#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "patchlab/constants.hpp"
#include "patchlab/numeric.hpp"
#include "patchlab/types.hpp"

namespace patchlab {

/// Ground-plane side is quantized to this step (0.1 mm).
inline constexpr double kGroundRoundingStep = 1e-4;

/// Return loss reported for a numerically perfect match (dB sentinel).
inline constexpr double kReturnLossCapDb = 99.99;

/// Transmission-line synthesis output for one operating point.
struct DesignResult {
    PatchGeometry geometry;
    double eps_eff;
    Substrate substrate;
    double f0;                    ///< Hz
    double ground_side;           ///< m, square ground plane side
    double fractional_bandwidth;  ///< VSWR <= 2 fractional bandwidth
};

/// Reflection/match figures for one complex load against a reference line.
struct MatchMetrics {
    std::complex<double> gamma;
    double vswr;            ///< (1+|gamma|)/(1-|gamma|); +inf when |gamma| >= 1
    double return_loss_db;  ///< -20*log10|gamma|, positive dB, capped
};

/// Quasi-static effective permittivity of a microstrip patch of width w.
/// The wide-line form is applied for all w/h; result lies in [1, eps_r].
inline double effective_permittivity(const Substrate& substrate, double w) {
    if (!(w > 0.0)) {
        throw std::invalid_argument("effective_permittivity: width must be positive");
    }
    const double er = substrate.eps_r;
    return (er + 1.0) / 2.0 +
           (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * substrate.h / w);
}

/// Fringing length extension delta_L of one radiating edge.
inline double length_extension(double eps_eff, const Substrate& substrate, double w) {
    if (!(w > 0.0)) {
        throw std::invalid_argument("length_extension: width must be positive");
    }
    if (!(eps_eff > 0.258)) {
        throw std::domain_error("length_extension: eps_eff must exceed 0.258");
    }
    const double w_over_h = w / substrate.h;
    return 0.412 * substrate.h * (eps_eff + 0.3) * (w_over_h + 0.264) /
           ((eps_eff - 0.258) * (w_over_h + 0.8));
}

/// Patch width for efficient radiation at f0.
inline double patch_width(double f0, double eps_r) {
    if (!(f0 > 0.0)) {
        throw std::invalid_argument("patch_width: frequency must be positive");
    }
    if (!(eps_r >= 1.0)) {
        throw std::invalid_argument("patch_width: eps_r must be >= 1");
    }
    return constants::c0 / (2.0 * f0 * std::sqrt((eps_r + 1.0) / 2.0));
}

/// Effective (resonant) patch length for f0 at a given eps_eff.
inline double effective_length(double f0, double eps_eff) {
    if (!(f0 > 0.0)) {
        throw std::invalid_argument("effective_length: frequency must be positive");
    }
    if (!(eps_eff >= 1.0)) {
        throw std::invalid_argument("effective_length: eps_eff must be >= 1");
    }
    return constants::c0 / (2.0 * f0 * std::sqrt(eps_eff));
}

/// VSWR <= 2 fractional bandwidth of the patch. Valid for electrically thin
/// substrates only (h/lambda0 < 0.1).
inline double fractional_bandwidth(const Substrate& substrate, double f0) {
    const double lambda0 = make_operating_point(f0).lambda0;
    if (!(substrate.h / lambda0 < 0.1)) {
        throw std::domain_error(
            "fractional_bandwidth: requires h/lambda0 < 0.1 (thin substrate)");
    }
    const double er = substrate.eps_r;
    return 3.77 * ((er - 1.0) / (er * er)) * (substrate.h / lambda0);
}

/// Full closed-form synthesis for a target resonance. Direct computation:
/// the width formula does not involve the length, so no iteration is needed.
inline DesignResult synthesize(double f0, const Substrate& substrate) {
    const double w = patch_width(f0, substrate.eps_r);
    const double eps_eff = effective_permittivity(substrate, w);
    const double delta_l = length_extension(eps_eff, substrate, w);
    const double l_eff = effective_length(f0, eps_eff);
    const double l = l_eff - 2.0 * delta_l;
    if (!(l > 0.0)) {
        throw std::domain_error("synthesize: fringing exceeds the resonant length");
    }
    PatchGeometry geometry(l, w, 0.0, delta_l, l_eff);
    const double ground_side = round_to_step(2.0 * w, kGroundRoundingStep);
    return DesignResult{geometry, eps_eff, substrate, f0, ground_side,
                        fractional_bandwidth(substrate, f0)};
}

/// Cavity resonance of the TM(m,n) mode. The length term runs over the
/// effective length so that analysis exactly inverts synthesis.
inline double resonant_frequency(const PatchGeometry& geometry, const Substrate& substrate,
                                 const ModeIndex& mode) {
    const double eps_eff = effective_permittivity(substrate, geometry.w);
    const double lt = mode.m / geometry.l_eff;
    const double wt = mode.n / geometry.w;
    return constants::c0 / (2.0 * std::sqrt(eps_eff)) * std::hypot(lt, wt);
}

/// Reflection coefficient, VSWR and return loss of load z against line z0.
inline MatchMetrics match_metrics(std::complex<double> z, double z0) {
    const std::complex<double> denom = z + z0;
    if (std::abs(denom) == 0.0) {
        throw std::invalid_argument("match_metrics: Z + Z0 must be nonzero");
    }
    const std::complex<double> gamma = (z - z0) / denom;
    const double mag = std::abs(gamma);
    double vswr;
    double rl;
    if (mag >= 1.0) {
        vswr = std::numeric_limits<double>::infinity();
        rl = 0.0;
    } else {
        vswr = (1.0 + mag) / (1.0 - mag);
        rl = mag > 0.0 ? std::min(-20.0 * std::log10(mag), kReturnLossCapDb)
                       : kReturnLossCapDb;
    }
    return MatchMetrics{gamma, vswr, rl};
}

struct QuarterWaveMatch {
    double z_t;     ///< transformer impedance sqrt(z0 * r_in) (ohm)
    double length;  ///< quarter guided wavelength (m)
};

/// Quarter-wave transformer matching a resistive load r_in to a feed z0.
inline QuarterWaveMatch quarter_wave_match(double r_in, double z0, double f0,
                                           double eps_eff) {
    if (!(r_in > 0.0) || !(z0 > 0.0)) {
        throw std::invalid_argument("quarter_wave_match: resistances must be positive");
    }
    if (!(eps_eff >= 1.0)) {
        throw std::invalid_argument("quarter_wave_match: eps_eff must be >= 1");
    }
    const double lambda0 = make_operating_point(f0).lambda0;
    return QuarterWaveMatch{std::sqrt(z0 * r_in), lambda0 / (4.0 * std::sqrt(eps_eff))};
}

}  // namespace patchlab
