#pragma once

#include <complex>
#include <functional>

#include "esrsim/constants.hpp"
#include "esrsim/errors.hpp"

namespace esrsim {

struct SpinMaterial {
    double spin_density = 0.75e27;  // n_e [1/m^3]; half the nominal BDPA density
    double t1 = 8.7508e-8;          // longitudinal relaxation [s]
    double t2 = 8.7508e-8;          // transverse relaxation [s]
    double temperature = 293.0;     // [K]
    double spin = 0.5;              // S

    void validate() const;
};

// Two-component transverse drive B1x*cos(wt+theta_x) x + B1y*cos(wt+theta_y) y
// on top of a static field b0 z.
struct DriveField {
    double b1x = 0.0;      // [T]
    double theta_x = 0.0;  // [rad]
    double b1y = 0.0;      // [T]
    double theta_y = 0.0;  // [rad]
    double omega = 0.0;    // drive angular frequency [rad/s]
    double b0 = 12.5e-3;   // static field [T]

    void validate() const;
};

// Rotating-frame drive components B1x' and B1y'. Only constructible from a
// DriveField so the defining relations hold by construction.
struct RotatingFrameDrive {
    double b1x_rot;  // (B1x cos(theta_x) - B1y sin(theta_y)) / 2 [T]
    double b1y_rot;  // (B1x sin(theta_x) + B1y cos(theta_y)) / 2 [T]

    static RotatingFrameDrive from_drive(const DriveField& d);

   private:
    RotatingFrameDrive(double bx, double by) : b1x_rot(bx), b1y_rot(by) {}
};

struct Magnetization {
    double mx_rot = 0.0;  // M_x' [A/m]
    double my_rot = 0.0;  // M_y' [A/m]
    double m0 = 0.0;      // thermal magnetization [A/m]
};

// Curie-law thermal magnetization n_e gamma^2 hbar^2 S(S+1) b0 / (3 kB T).
double thermal_magnetization(const SpinMaterial& mat, double b0);

// Steady-state Bloch solution in the small-drive regime. omega0 = |gamma_e|*b0.
// If saturation_warning is non-null it is set when gamma^2 B1^2 T1 T2 > 0.01.
Magnetization steady_state(const DriveField& drive, const SpinMaterial& mat, double m0,
                           bool* saturation_warning = nullptr);

// Linear response factor G with (Mx' + i My') = G * (B1x' + i B1y').
// Shared by steady_state and the voxel-sum kernels.
std::complex<double> steady_state_response(const SpinMaterial& mat, double m0,
                                           double omega, double omega0);

// Mx' - i My'; lab frame via Mx = Re[p e^{iwt}], My = Re[i p e^{iwt}].
std::complex<double> transverse_phasor(const Magnetization& m);

// Fixed-step RK4 integration of dM/dt = gamma_e M x B(t) - relaxation with
// signed (negative) gamma_e, from M(0) = (0, 0, m0). The rotating-frame
// components are recovered by demodulating Mx + i My against e^{-i w t} over
// the final drive period; the demodulation phase reference is chosen so the
// result matches the closed-form convention. Infinite t1/t2 disable
// relaxation (used for conservation checks). The optional observer is invoked
// once per accepted step.
Magnetization time_domain_oracle(
    const DriveField& drive, const SpinMaterial& mat, double m0, double duration,
    double dt,
    const std::function<void(double t, double mx, double my, double mz)>& observer = {});

}  // namespace esrsim
