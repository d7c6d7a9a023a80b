#pragma once

// Central tolerances and physical constants.
//
// All spin dynamics runs in angular-frequency units with hbar = 1; times are
// seconds when frequencies are rad/s.  The kinetics module is plain SI.

namespace spinpair {

// Numerical tolerances (single knob for the whole library and its tests).
inline constexpr double kHermTol = 1e-12;  // max|A - A^dag| for Hermitian inputs
inline constexpr double kUnitTol = 1e-10;  // max|U^dag U - I| for unitaries
inline constexpr double kEigTol = 1e-10;   // residual for eigenpairs
inline constexpr double kNormTol = 1e-10;  // state normalization
inline constexpr double kWeightTol = 1e-12; // |a|^2+|b|^2 constraint on superposition weights

// CODATA SI constants.
namespace si {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;      // J/K
inline constexpr double electron_volt = 1.602176634e-19; // J
inline constexpr double speed_of_light_cm = 2.99792458e10; // cm/s
inline constexpr double mu0_over_4pi = 1e-7;           // T m / A
inline constexpr double gamma_proton = 2.6752218744e8; // rad s^-1 T^-1
inline constexpr double angstrom = 1e-10;              // m
}  // namespace si

}  // namespace spinpair
