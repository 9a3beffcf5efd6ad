#pragma once

namespace patchlab::constants {

/// Speed of light in vacuum, exact SI value (m/s).
inline constexpr double c0 = 299792458.0;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Vacuum permittivity (F/m), CODATA 2018.
inline constexpr double eps0 = 8.8541878128e-12;

/// Vacuum permeability (H/m), CODATA 2018.
inline constexpr double mu0 = 1.25663706212e-6;

/// Intrinsic impedance of free space, sqrt(mu0/eps0) (ohm).
inline constexpr double eta0 = 376.730313668;

}  // namespace patchlab::constants
