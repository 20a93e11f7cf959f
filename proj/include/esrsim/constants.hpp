#pragma once

namespace esrsim {

// CODATA 2018 values. gamma_e is stored as a magnitude; the free-electron
// gyromagnetic ratio is negative, and the one place the sign matters (the
// time-domain Bloch integrator) negates it explicitly.
struct PhysicalConstants {
    double mu0 = 1.25663706212e-6;       // vacuum permeability [T*m/A]
    double gamma_e = 1.76085963023e11;   // |electron gyromagnetic ratio| [rad/(s*T)]
    double hbar = 1.054571817e-34;       // reduced Planck constant [J*s]
    double kB = 1.380649e-23;            // Boltzmann constant [J/K]
};

inline constexpr PhysicalConstants kConstants{};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace esrsim
