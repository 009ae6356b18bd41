#pragma once

namespace qrelax::constants {

// CODATA 2018 values, fixed here (not configurable) so results are reproducible.
inline constexpr double eps0 = 8.8541878128e-12;  // vacuum permittivity, F/m
inline constexpr double hbar = 1.054571817e-34;   // reduced Planck constant, J*s
inline constexpr double kB   = 1.380649e-23;      // Boltzmann constant, J/K
inline constexpr double Phi0 = 2.067833848e-15;   // flux quantum h/2e, Wb

inline constexpr double pi = 3.14159265358979323846;

}  // namespace qrelax::constants
