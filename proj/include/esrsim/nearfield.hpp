#pragma once

#include <array>
#include <complex>
#include <vector>

#include "esrsim/constants.hpp"
#include "esrsim/errors.hpp"

namespace esrsim {

// Guard radius around the beam line; valid scenarios never evaluate closer.
inline constexpr double kSingularGuard = 1e-9;  // [m]

// Sinusoidally deflected electron beam running along z. Coordinates follow the
// coil-centered frame: x is height above the coil plane, y is lateral. The
// undeflected beam line sits at x = sample_height + standoff, y = offset, and
// the deflection direction is tilted from the y-axis into the xy-plane.
struct BeamSpec {
    double current = 1e-6;               // beam current [A]
    double base_omega = 1.100537269e9;   // deflection angular frequency = omega/2 [rad/s]
    double amplitude = 0.9e-3;           // deflection amplitude at sample plane [m]
    double standoff = 0.6e-3;            // distance above the sample top [m]
    double offset = 0.1e-3;              // lateral beam-center position [m]
    double tilt = 0.0872664625997;       // deflection direction vs y-axis [rad], 5 deg
    double sample_height = 0.7e-3;       // sample top above coil plane [m]

    void validate() const;
};

struct FieldVector {
    double bx = 0.0;  // [T]
    double by = 0.0;  // [T]
};

// Complex Fourier amplitudes of the beam field at one point, with the
// convention B(t) = sum_n Re[c_n * exp(i n Omega t)]. The second harmonic
// (n = 2) oscillates at the spin drive frequency omega = 2*Omega, so
// B1x = |c2x|, theta_x = arg c2x, and likewise for y.
struct HarmonicField {
    double px = 0.0;  // evaluation point [m]
    double py = 0.0;
    std::vector<std::complex<double>> coeffs_x;  // c_n^x, n = 0..n_max [T]
    std::vector<std::complex<double>> coeffs_y;  // c_n^y [T]

    double b1x() const { return std::abs(coeffs_x.at(2)); }
    double theta_x() const { return std::arg(coeffs_x.at(2)); }
    double b1y() const { return std::abs(coeffs_y.at(2)); }
    double theta_y() const { return std::arg(coeffs_y.at(2)); }
    double second_harmonic_magnitude() const;
};

// Axis-aligned rectangular winding in the coil plane x = 0.
struct RectLoop {
    double y_min, y_max;  // [m]
    double z_min, z_max;  // [m]
};

// Two-winding rectangular microcoil. loop_rects[0] is the inner winding,
// whose rectangle also serves as the aperture for the EMF field average.
struct CoilSpec {
    int turns = 2;
    double area = 1e-6;        // A_coil [m^2]
    double resistance = 1.25;  // R_c [Ohm]
    std::vector<RectLoop> loop_rects = {
        {-0.55e-3, 0.55e-3, -0.30e-3, 0.30e-3},
        {-0.75e-3, 0.75e-3, -0.50e-3, 0.50e-3},
    };
    double unitary_ref = 2e-3;  // reference |B_u| [T/A]

    void validate() const;
};

// Instantaneous beam line position (x, y) at time t.
std::array<double, 2> beam_line_position(const BeamSpec& spec, double t);

// Quasi-static field of the (infinite-line) beam at a point, at time t.
// Throws SingularPoint if the point lies on the instantaneous beam line.
FieldVector field_at(const BeamSpec& spec, double px, double py, double t);

// Harmonic decomposition over one modulation period by uniform sampling
// (trapezoidal quadrature == DFT bins for a periodic integrand).
HarmonicField harmonics(const BeamSpec& spec, double px, double py, int n_max,
                        int n_samples = 4096);

// Time-averaged (DC) field: the real part of c0.
FieldVector dc_field(const BeamSpec& spec, double px, double py, int n_samples = 4096);

// Biot-Savart field of all coil windings carrying 1 A, at a 3D point [T/A].
std::array<double, 3> coil_unitary_field(const CoilSpec& coil, double px, double py,
                                         double pz);

// Self-weighted average sum(b^2)/sum(b) of non-negative magnitudes.
double self_weighted_average(const std::vector<double>& values);

}  // namespace esrsim
