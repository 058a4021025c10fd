#pragma once

namespace fibersense::constants {

// CODATA 2018 / exact SI values.
inline constexpr double k_boltzmann = 1.380649e-23;        // J/K
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double speed_of_light = 2.99792458e8;     // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // H/m
inline constexpr double elementary_charge = 1.602176634e-19;     // C

inline constexpr double pascal_per_bar = 1.0e5;
inline constexpr double cubic_angstrom = 1.0e-30;          // m^3

}  // namespace fibersense::constants
