// Physical constants and unit helpers. Internal computations use SI;
// public geometry APIs take nanometers, photon timestamps are integer
// picoseconds.

#pragma once

#include <cstdint>

namespace npa {

namespace phys {
inline constexpr double c0 = 299792458.0;           // m/s
inline constexpr double eps0 = 8.8541878128e-12;    // F/m
inline constexpr double mu0 = 1.25663706212e-6;     // H/m
inline constexpr double eta0 = 376.730313668;       // ohm
inline constexpr double pi = 3.14159265358979323846;
}  // namespace phys

inline constexpr double nm = 1e-9;   // meters per nanometer
inline constexpr double ps = 1e-12;  // seconds per picosecond
inline constexpr double ns = 1e-9;

/// Angular frequency (rad/s) of light of the given vacuum wavelength in nm.
inline double omega_from_wavelength_nm(double wavelength_nm) {
    return 2.0 * phys::pi * phys::c0 / (wavelength_nm * nm);
}

using TimestampPs = std::int64_t;

}  // namespace npa
