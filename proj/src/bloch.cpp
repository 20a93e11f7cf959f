#include "esrsim/bloch.hpp"

#include <cmath>

namespace esrsim {

void SpinMaterial::validate() const {
    if (!(spin_density > 0.0)) throw ValidationError("material.spin_density must be > 0");
    if (!(t1 > 0.0)) throw ValidationError("material.t1 must be > 0");
    if (!(t2 > 0.0)) throw ValidationError("material.t2 must be > 0");
    if (std::isfinite(t1) && std::isfinite(t2) && t2 > 2.0 * t1)
        throw ValidationError("material.t2 must satisfy t2 <= 2*t1");
    if (!(temperature > 0.0)) throw ValidationError("material.temperature must be > 0");
    if (!(spin > 0.0)) throw ValidationError("material.spin must be > 0");
}

void DriveField::validate() const {
    if (!(b1x >= 0.0)) throw ValidationError("drive.b1x must be >= 0");
    if (!(b1y >= 0.0)) throw ValidationError("drive.b1y must be >= 0");
    if (!(omega > 0.0)) throw ValidationError("drive.omega must be > 0");
    if (!(b0 > 0.0)) throw ValidationError("drive.b0 must be > 0");
}

RotatingFrameDrive RotatingFrameDrive::from_drive(const DriveField& d) {
    const double bx = 0.5 * (d.b1x * std::cos(d.theta_x) - d.b1y * std::sin(d.theta_y));
    const double by = 0.5 * (d.b1x * std::sin(d.theta_x) + d.b1y * std::cos(d.theta_y));
    return {bx, by};
}

double thermal_magnetization(const SpinMaterial& mat, double b0) {
    if (!(b0 > 0.0)) throw ValidationError("b0 must be > 0");
    const auto& pc = kConstants;
    const double g2 = pc.gamma_e * pc.gamma_e;
    return mat.spin_density * g2 * pc.hbar * pc.hbar * mat.spin * (mat.spin + 1.0) * b0 /
           (3.0 * pc.kB * mat.temperature);
}

std::complex<double> steady_state_response(const SpinMaterial& mat, double m0,
                                           double omega, double omega0) {
    const double x = (omega - omega0) * mat.t2;
    const double kappa = m0 * kConstants.gamma_e * mat.t2;
    return kappa / (1.0 + x * x) * std::complex<double>(x, 1.0);
}

Magnetization steady_state(const DriveField& drive, const SpinMaterial& mat, double m0,
                           bool* saturation_warning) {
    const double b1max = std::max(drive.b1x, drive.b1y);
    const double sat = kConstants.gamma_e * kConstants.gamma_e * b1max * b1max * mat.t1 * mat.t2;
    if (saturation_warning) *saturation_warning = sat > 0.01;

    const double omega0 = kConstants.gamma_e * drive.b0;
    const auto rot = RotatingFrameDrive::from_drive(drive);
    const std::complex<double> g = steady_state_response(mat, m0, drive.omega, omega0);
    const std::complex<double> q = g * std::complex<double>(rot.b1x_rot, rot.b1y_rot);
    return {q.real(), q.imag(), m0};
}

std::complex<double> transverse_phasor(const Magnetization& m) {
    return {m.mx_rot, -m.my_rot};
}

Magnetization time_domain_oracle(
    const DriveField& drive, const SpinMaterial& mat, double m0, double duration,
    double dt,
    const std::function<void(double t, double mx, double my, double mz)>& observer) {
    drive.validate();
    const double period = kTwoPi / drive.omega;
    if (dt > period / 64.0 * (1.0 + 1e-12))
        throw StepTooLarge("time_domain_oracle: dt must be <= (2pi/omega)/64");

    const double gamma = -kConstants.gamma_e;  // signed electron value
    const double inv_t1 = std::isfinite(mat.t1) ? 1.0 / mat.t1 : 0.0;
    const double inv_t2 = std::isfinite(mat.t2) ? 1.0 / mat.t2 : 0.0;

    // Integer steps per drive period so the final-period demodulation window
    // lines up exactly.
    const int steps_per_period = static_cast<int>(std::ceil(period / dt));
    const double h = period / steps_per_period;
    const long n_periods = std::max(1L, std::lround(std::ceil(duration / period)));
    const long n_steps = n_periods * steps_per_period;

    struct V3 {
        double x, y, z;
    };
    const auto deriv = [&](double t, const V3& m) -> V3 {
        const double bx = drive.b1x * std::cos(drive.omega * t + drive.theta_x);
        const double by = drive.b1y * std::cos(drive.omega * t + drive.theta_y);
        const double bz = drive.b0;
        return {gamma * (m.y * bz - m.z * by) - inv_t2 * m.x,
                gamma * (m.z * bx - m.x * bz) - inv_t2 * m.y,
                gamma * (m.x * by - m.y * bx) - inv_t1 * (m.z - m0)};
    };

    V3 m{0.0, 0.0, m0};
    // Demodulation accumulators over the last period (trapezoid; endpoints of
    // the window coincide modulo the period, so uniform weights suffice).
    std::complex<double> acc{0.0, 0.0};
    const long demod_start = n_steps - steps_per_period;

    for (long step = 0; step < n_steps; ++step) {
        const double t = step * h;
        if (step >= demod_start) {
            const std::complex<double> rot(std::cos(drive.omega * t),
                                           -std::sin(drive.omega * t));
            acc += std::complex<double>(m.x, m.y) * rot;
        }
        const V3 k1 = deriv(t, m);
        const V3 m2{m.x + 0.5 * h * k1.x, m.y + 0.5 * h * k1.y, m.z + 0.5 * h * k1.z};
        const V3 k2 = deriv(t + 0.5 * h, m2);
        const V3 m3{m.x + 0.5 * h * k2.x, m.y + 0.5 * h * k2.y, m.z + 0.5 * h * k2.z};
        const V3 k3 = deriv(t + 0.5 * h, m3);
        const V3 m4{m.x + h * k3.x, m.y + h * k3.y, m.z + h * k3.z};
        const V3 k4 = deriv(t + h, m4);
        m.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        m.y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        m.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        if (observer) observer((step + 1) * h, m.x, m.y, m.z);
    }

    // Physical precession for gamma_e < 0 is counterclockwise about +z; the
    // closed-form convention differs by a constant frame phase of pi, hence
    // the sign flip on the demodulated components.
    const std::complex<double> q = -acc / static_cast<double>(steps_per_period);
    return {q.real(), q.imag(), m0};
}

}  // namespace esrsim
