#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "patchlab/constants.hpp"

namespace patchlab {

/// Dielectric substrate description. Strict SI units (meters).
struct Substrate {
    double eps_r;                     ///< relative permittivity, >= 1
    double h;                         ///< substrate height (m), > 0
    std::optional<double> tan_delta;  ///< loss tangent, >= 0 when present

    Substrate(double eps_r_, double h_, std::optional<double> tan_delta_ = std::nullopt)
        : eps_r(eps_r_), h(h_), tan_delta(tan_delta_) {
        if (!(eps_r >= 1.0)) {
            throw std::invalid_argument("Substrate: eps_r must be >= 1");
        }
        if (!(h > 0.0)) {
            throw std::invalid_argument("Substrate: height must be positive");
        }
        if (tan_delta && !(*tan_delta >= 0.0)) {
            throw std::invalid_argument("Substrate: loss tangent must be non-negative");
        }
    }
};

/// Physical and effective rectangular-patch dimensions (meters).
/// The constructor enforces l_eff = l + 2*delta_l to 1e-12 relative.
struct PatchGeometry {
    double l;        ///< physical patch length (m)
    double w;        ///< patch width (m)
    double t;        ///< conductor thickness (m), >= 0
    double delta_l;  ///< fringing extension (m)
    double l_eff;    ///< effective length l + 2*delta_l (m)

    PatchGeometry(double l_, double w_, double t_, double delta_l_, double l_eff_)
        : l(l_), w(w_), t(t_), delta_l(delta_l_), l_eff(l_eff_) {
        if (!(l > 0.0) || !(w > 0.0) || !(delta_l > 0.0) || !(l_eff > 0.0)) {
            throw std::invalid_argument("PatchGeometry: lengths must be positive");
        }
        if (!(t >= 0.0)) {
            throw std::invalid_argument("PatchGeometry: conductor thickness must be >= 0");
        }
        const double expected = l + 2.0 * delta_l;
        if (std::abs(l_eff - expected) > 1e-12 * expected) {
            throw std::invalid_argument("PatchGeometry: l_eff must equal l + 2*delta_l");
        }
    }

    static PatchGeometry make(double l, double w, double t, double delta_l) {
        return PatchGeometry(l, w, t, delta_l, l + 2.0 * delta_l);
    }
};

/// Frequency with its derived free-space wavelength and wavenumber.
struct OperatingPoint {
    double f0;       ///< frequency (Hz)
    double lambda0;  ///< free-space wavelength (m)
    double k0;       ///< free-space wavenumber 2*pi/lambda0 (rad/m)
};

inline OperatingPoint make_operating_point(double f0) {
    if (!(f0 > 0.0)) {
        throw std::invalid_argument("make_operating_point: frequency must be positive");
    }
    const double lambda0 = constants::c0 / f0;
    return OperatingPoint{f0, lambda0, constants::two_pi / lambda0};
}

/// Spherical far-field observation point.
struct FieldPoint {
    double r;      ///< distance (m), > 0
    double theta;  ///< polar angle (rad), in [0, pi]
    double phi;    ///< azimuth (rad), in [0, 2*pi)

    FieldPoint(double r_, double theta_, double phi_) : r(r_), theta(theta_), phi(phi_) {
        if (!(r > 0.0)) {
            throw std::invalid_argument("FieldPoint: distance must be positive");
        }
        if (!(theta >= 0.0 && theta <= constants::pi)) {
            throw std::invalid_argument("FieldPoint: theta must lie in [0, pi]");
        }
        if (!(phi >= 0.0 && phi < constants::two_pi)) {
            throw std::invalid_argument("FieldPoint: phi must lie in [0, 2*pi)");
        }
    }
};

/// Aperture excitation: slot field phasor and the slot voltage it implies.
struct Excitation {
    double e0;   ///< aperture E-field phasor magnitude (V/m)
    double v0;   ///< slot voltage h*e0 (V)
    double eta;  ///< intrinsic impedance (ohm), > 0

    Excitation(double e0_, double v0_, double eta_) : e0(e0_), v0(v0_), eta(eta_) {
        if (!(eta > 0.0)) {
            throw std::invalid_argument("Excitation: intrinsic impedance must be positive");
        }
    }
};

/// Builds the excitation whose slot voltage matches the substrate height.
inline Excitation make_excitation(const Substrate& substrate, double e0,
                                  double eta = constants::eta0) {
    return Excitation(e0, substrate.h * e0, eta);
}

/// Cavity mode indices; (0, 0) is not a resonant mode.
struct ModeIndex {
    int m;  ///< length-direction index, >= 0
    int n;  ///< width-direction index, >= 0

    ModeIndex(int m_, int n_) : m(m_), n(n_) {
        if (m < 0 || n < 0) {
            throw std::invalid_argument("ModeIndex: indices must be non-negative");
        }
        if (m == 0 && n == 0) {
            throw std::invalid_argument("ModeIndex: (0, 0) is not a mode");
        }
    }
};

}  // namespace patchlab
