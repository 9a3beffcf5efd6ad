#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "patchlab/constants.hpp"
#include "patchlab/numeric.hpp"
#include "patchlab/types.hpp"

namespace patchlab {

/// dB floor applied to normalized pattern samples.
inline constexpr double kPatternDbFloor = -60.0;

/// Closed form is meaningful from this many wavelengths out.
inline constexpr double kFarFieldMinWavelengths = 100.0;

/// Default node count per axis for the aperture quadrature.
inline constexpr int kQuadratureNodes = 201;

/// One normalized pattern sample on a cut or grid.
struct PatternSample {
    double theta;     ///< rad
    double phi;       ///< rad
    double value;     ///< normalized field magnitude, in [0, 1]
    double value_db;  ///< 20*log10(value) floored at kPatternDbFloor
};

/// Complex far-field components at one observation point.
struct FieldSample {
    std::complex<double> e_theta;  ///< V/m
    std::complex<double> e_phi;    ///< V/m
};

/// The three phase arguments of the aperture model. The slot aperture is the
/// substrate height by the patch width, so X pairs the height with
/// sin(theta)cos(phi), Y the width with sin(theta)sin(phi), and Z the
/// effective length with cos(theta).
struct PatternArgs {
    double x;
    double y;
    double z;
};

enum class PotentialMethod { closed_form, quadrature };
enum class CutPlane { e_plane, h_plane };

struct DirectivityResult {
    double linear;
    double dbi;
};

inline PatternArgs pattern_args_at(double theta, double phi, const PatchGeometry& geometry,
                                   const Substrate& substrate, double k0) {
    const double st = std::sin(theta);
    return PatternArgs{
        0.5 * k0 * substrate.h * st * std::cos(phi),
        0.5 * k0 * geometry.w * st * std::sin(phi),
        0.5 * k0 * geometry.l_eff * std::cos(theta),
    };
}

inline PatternArgs pattern_args(const FieldPoint& point, const PatchGeometry& geometry,
                                const Substrate& substrate, double k0) {
    return pattern_args_at(point.theta, point.phi, geometry, substrate, k0);
}

namespace detail {

inline void require_far_field(const FieldPoint& point, double k0) {
    const double lambda0 = constants::two_pi / k0;
    if (point.r < kFarFieldMinWavelengths * lambda0) {
        throw std::domain_error("far-field point required: r >= 100 wavelengths");
    }
}

}  // namespace detail

/// Electric vector potential F_y of the uniform aperture, either the closed
/// form or a 2-D composite Simpson evaluation of the radiation integral with
/// the linearized source-to-observer distance in both phase and amplitude.
/// The aperture radiates into free space, so the ambient permittivity is eps0.
inline std::complex<double> vector_potential(const FieldPoint& point,
                                             const PatchGeometry& geometry,
                                             const Substrate& substrate,
                                             const Excitation& excitation, double k0,
                                             PotentialMethod method,
                                             int nodes = kQuadratureNodes) {
    using namespace std::complex_literals;
    detail::require_far_field(point, k0);
    const double h = substrate.h;
    const double w = geometry.w;
    const double e0 = excitation.e0;

    if (method == PotentialMethod::closed_form) {
        const PatternArgs args = pattern_args(point, geometry, substrate, k0);
        const double amplitude = -constants::eps0 * e0 * w * h / (constants::two_pi * point.r);
        return amplitude * std::exp(-1i * (k0 * point.r)) * sinc(args.x) * sinc(args.y);
    }

    if (nodes < 3) {
        throw std::invalid_argument("vector_potential: quadrature needs >= 3 nodes per axis");
    }
    const int n = (nodes - 1) % 2 == 0 ? nodes - 1 : nodes;  // even interval count
    const double ux = std::sin(point.theta) * std::cos(point.phi);
    const double uy = std::sin(point.theta) * std::sin(point.phi);
    const double m_y = -2.0 * e0;
    auto inner = [&](double xp) {
        return simpson(
            [&](double yp) {
                const double r_pq = point.r - xp * ux - yp * uy;
                return m_y / r_pq * std::exp(-1i * (k0 * r_pq));
            },
            -w / 2.0, w / 2.0, n);
    };
    const std::complex<double> integral = simpson(inner, -h / 2.0, h / 2.0, n);
    return constants::eps0 / (4.0 * constants::pi) * integral;
}

/// Far field of one radiating slot (E_r is identically zero and omitted).
inline FieldSample single_slot_field(const FieldPoint& point, const PatchGeometry& geometry,
                                     const Substrate& substrate, const Excitation& excitation,
                                     double k0) {
    using namespace std::complex_literals;
    detail::require_far_field(point, k0);
    const PatternArgs args = pattern_args(point, geometry, substrate, k0);
    const std::complex<double> common = 1i * k0 * geometry.w * excitation.v0 /
                                        (constants::two_pi * point.r) *
                                        std::exp(-1i * (k0 * point.r)) * sinc(args.x) *
                                        sinc(args.y);
    const std::complex<double> e_phi =
        common * std::cos(point.theta) * std::sin(point.phi);
    const std::complex<double> e_theta = -common * std::cos(point.phi);
    return FieldSample{e_theta, e_phi};
}

/// Two-slot array factor: the radiating edges are effectively one resonant
/// length apart and excited in phase.
inline double array_factor(double theta, double l_eff, double k0) {
    return 2.0 * std::cos(0.5 * k0 * l_eff * std::cos(theta));
}

/// Total radiated field of the two-slot patch, written out in full. It equals
/// single_slot_field times array_factor componentwise; both routes are kept
/// and cross-checked in the test suite.
inline FieldSample total_field(const FieldPoint& point, const PatchGeometry& geometry,
                               const Substrate& substrate, const Excitation& excitation,
                               double k0) {
    using namespace std::complex_literals;
    detail::require_far_field(point, k0);
    const PatternArgs args = pattern_args(point, geometry, substrate, k0);
    const std::complex<double> common =
        1i * k0 * geometry.w * excitation.v0 / (constants::pi * point.r) *
        std::exp(-1i * (k0 * point.r)) * sinc(args.x) * sinc(args.y) * std::cos(args.z);
    const std::complex<double> e_phi = common * std::cos(point.theta) * std::sin(point.phi);
    const std::complex<double> e_theta = -common * std::cos(point.phi);
    return FieldSample{e_theta, e_phi};
}

/// Normalizable field-pattern magnitude |f(theta, phi)|.
inline double field_pattern(double theta, double phi, const PatchGeometry& geometry,
                            const Substrate& substrate, double k0) {
    const PatternArgs args = pattern_args_at(theta, phi, geometry, substrate, k0);
    const double sp = std::sin(phi);
    const double st = std::sin(theta);
    const double polarization = std::sqrt(std::max(0.0, 1.0 - sp * sp * st * st));
    return std::abs(polarization * sinc(args.x) * sinc(args.y) * std::cos(args.z));
}

namespace detail {

inline PatternSample make_sample(double theta, double phi, double value, double peak) {
    const double normalized = peak > 0.0 ? std::min(value / peak, 1.0) : 0.0;
    return PatternSample{theta, phi, normalized, amplitude_db(normalized, kPatternDbFloor)};
}

}  // namespace detail

/// Principal-plane cut, normalized to its own peak. E-plane: phi = 0,
/// theta in [0, 180 deg]. H-plane: theta = 90 deg, phi in
/// [0, 90 deg] + [270 deg, 360 deg]. The step must divide each segment.
inline std::vector<PatternSample> principal_cut(CutPlane plane, const PatchGeometry& geometry,
                                                const Substrate& substrate, double k0,
                                                double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("principal_cut: step must be positive");
    }
    struct RawSample {
        double theta;
        double phi;
        double value;
    };
    std::vector<RawSample> raw;
    auto segment_count = [&](double range) {
        const double n = range / step;
        const double rounded = std::round(n);
        if (std::abs(n - rounded) > 1e-9 * std::max(1.0, n) || rounded < 1.0) {
            throw std::invalid_argument("principal_cut: step must divide the cut range");
        }
        return static_cast<int>(rounded);
    };
    if (plane == CutPlane::e_plane) {
        const int n = segment_count(constants::pi);
        raw.reserve(n + 1);
        for (int i = 0; i <= n; ++i) {
            const double theta = std::min(i * step, constants::pi);
            raw.push_back({theta, 0.0, field_pattern(theta, 0.0, geometry, substrate, k0)});
        }
    } else {
        const double quarter = constants::pi / 2.0;
        const int n = segment_count(quarter);
        raw.reserve(2 * (n + 1));
        const double theta = constants::pi / 2.0;
        for (int i = 0; i <= n; ++i) {
            const double phi = i * step;
            raw.push_back({theta, phi, field_pattern(theta, phi, geometry, substrate, k0)});
        }
        for (int i = 0; i <= n; ++i) {
            const double phi = 1.5 * constants::pi + i * step;
            raw.push_back({theta, phi, field_pattern(theta, phi, geometry, substrate, k0)});
        }
    }
    double peak = 0.0;
    for (const RawSample& s : raw) peak = std::max(peak, s.value);
    std::vector<PatternSample> out;
    out.reserve(raw.size());
    for (const RawSample& s : raw) {
        out.push_back(detail::make_sample(s.theta, s.phi, s.value, peak));
    }
    return out;
}

/// Directivity of an arbitrary field-magnitude pattern over the upper
/// hemisphere: D = 4*pi*max(U)/P_rad with U = pattern^2, integrated with the
/// sin(theta) Jacobian by composite Simpson on both axes.
template <typename PatternFn>
DirectivityResult directivity_of(PatternFn&& pattern, double grid_step) {
    if (!(grid_step > 0.0) || grid_step > deg_to_rad(1.0) + 1e-12) {
        throw std::invalid_argument("directivity: grid step must be in (0, 1 deg]");
    }
    const int n_theta = even_intervals(constants::pi / 2.0, grid_step);
    const int n_phi = even_intervals(constants::two_pi, grid_step);
    const double d_theta = constants::pi / 2.0 / n_theta;
    const double d_phi = constants::two_pi / n_phi;

    double u_max = 0.0;
    std::vector<double> phi_integral(n_theta + 1);
    for (int i = 0; i <= n_theta; ++i) {
        const double theta = i * d_theta;
        double acc = 0.0;
        for (int j = 0; j <= n_phi; ++j) {
            const double f = pattern(theta, j * d_phi);
            const double u = f * f;
            u_max = std::max(u_max, u);
            const double w = (j == 0 || j == n_phi) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            acc += w * u;
        }
        phi_integral[i] = d_phi / 3.0 * acc * std::sin(theta);
    }
    double p_rad = 0.0;
    for (int i = 0; i <= n_theta; ++i) {
        const double w = (i == 0 || i == n_theta) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        p_rad += w * phi_integral[i];
    }
    p_rad *= d_theta / 3.0;
    if (!(p_rad > 0.0)) {
        throw std::domain_error("directivity: radiated power integrates to zero");
    }
    const double d = 4.0 * constants::pi * u_max / p_rad;
    return DirectivityResult{d, 10.0 * std::log10(d)};
}

/// Directivity of the patch pattern itself.
inline DirectivityResult directivity(const PatchGeometry& geometry, const Substrate& substrate,
                                     double k0, double grid_step) {
    return directivity_of(
        [&](double theta, double phi) {
            return field_pattern(theta, phi, geometry, substrate, k0);
        },
        grid_step);
}

}  // namespace patchlab
