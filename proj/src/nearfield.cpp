#include "esrsim/nearfield.hpp"

#include <cmath>

namespace esrsim {

void BeamSpec::validate() const {
    if (!(current > 0.0)) throw ValidationError("beam.current must be > 0");
    if (!(amplitude >= 0.0)) throw ValidationError("beam.amplitude must be >= 0");
    if (!(standoff > 0.0)) throw ValidationError("beam.standoff must be > 0");
    if (!(base_omega > 0.0)) throw ValidationError("beam.base_omega must be > 0");
    if (!std::isfinite(offset)) throw ValidationError("beam.offset must be finite");
    if (!std::isfinite(tilt)) throw ValidationError("beam.tilt must be finite");
    if (!(sample_height >= 0.0)) throw ValidationError("beam.sample_height must be >= 0");
}

void CoilSpec::validate() const {
    if (turns < 1) throw ValidationError("coil.turns must be >= 1");
    if (!(area > 0.0)) throw ValidationError("coil.area must be > 0");
    if (!(resistance > 0.0)) throw ValidationError("coil.resistance must be > 0");
    if (loop_rects.size() != static_cast<size_t>(turns))
        throw ValidationError("coil.loop_rects count must equal coil.turns");
    for (const auto& r : loop_rects) {
        if (!(r.y_max > r.y_min) || !(r.z_max > r.z_min))
            throw ValidationError("coil.loop_rects must have positive extent");
    }
    if (!(unitary_ref > 0.0)) throw ValidationError("coil.unitary_ref must be > 0");
}

double HarmonicField::second_harmonic_magnitude() const {
    const double bx = b1x();
    const double by = b1y();
    return std::sqrt(bx * bx + by * by);
}

std::array<double, 2> beam_line_position(const BeamSpec& spec, double t) {
    const double deflection = spec.amplitude * std::cos(spec.base_omega * t);
    return {spec.sample_height + spec.standoff + deflection * std::sin(spec.tilt),
            spec.offset + deflection * std::cos(spec.tilt)};
}

namespace {

FieldVector line_field(double current, double dx, double dy) {
    const double r2 = dx * dx + dy * dy;
    if (r2 < kSingularGuard * kSingularGuard)
        throw SingularPoint("field evaluation point lies on the beam line");
    const double scale = -kConstants.mu0 * current / (kTwoPi * r2);
    return {scale * dy, -scale * dx};
}

}  // namespace

FieldVector field_at(const BeamSpec& spec, double px, double py, double t) {
    const auto beam = beam_line_position(spec, t);
    return line_field(spec.current, px - beam[0], py - beam[1]);
}

HarmonicField harmonics(const BeamSpec& spec, double px, double py, int n_max,
                        int n_samples) {
    if (n_max < 0) throw Error("harmonics: n_max must be >= 0");
    if (n_samples < 8 * std::max(n_max, 1))
        throw Error("harmonics: n_samples must be >= 8*n_max");

    HarmonicField out;
    out.px = px;
    out.py = py;
    out.coeffs_x.assign(static_cast<size_t>(n_max) + 1, {0.0, 0.0});
    out.coeffs_y.assign(static_cast<size_t>(n_max) + 1, {0.0, 0.0});

    const double period = kTwoPi / spec.base_omega;
    const double dt = period / n_samples;
    // Single-bin DFT accumulation; the phase factors recur per sample.
    for (int j = 0; j < n_samples; ++j) {
        const double t = j * dt;
        const FieldVector b = field_at(spec, px, py, t);
        const double phase = -spec.base_omega * t;
        std::complex<double> rot(std::cos(phase), std::sin(phase));
        std::complex<double> w(1.0, 0.0);
        for (int n = 0; n <= n_max; ++n) {
            out.coeffs_x[n] += b.bx * w;
            out.coeffs_y[n] += b.by * w;
            w *= rot;
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        const double norm = (n == 0 ? 1.0 : 2.0) / n_samples;
        out.coeffs_x[n] *= norm;
        out.coeffs_y[n] *= norm;
    }
    return out;
}

FieldVector dc_field(const BeamSpec& spec, double px, double py, int n_samples) {
    const HarmonicField h = harmonics(spec, px, py, 0, n_samples);
    return {h.coeffs_x[0].real(), h.coeffs_y[0].real()};
}

namespace {

// Field of a finite straight segment p1->p2 carrying 1 A, at point x.
std::array<double, 3> segment_field(const std::array<double, 3>& p1,
                                    const std::array<double, 3>& p2,
                                    const std::array<double, 3>& x) {
    const double ux = p2[0] - p1[0], uy = p2[1] - p1[1], uz = p2[2] - p1[2];
    const double len = std::sqrt(ux * ux + uy * uy + uz * uz);
    const double ex = ux / len, ey = uy / len, ez = uz / len;
    const double r1x = x[0] - p1[0], r1y = x[1] - p1[1], r1z = x[2] - p1[2];
    const double r2x = x[0] - p2[0], r2y = x[1] - p2[1], r2z = x[2] - p2[2];
    const double r1 = std::sqrt(r1x * r1x + r1y * r1y + r1z * r1z);
    const double r2 = std::sqrt(r2x * r2x + r2y * r2y + r2z * r2z);
    // perpendicular direction u x r1; |u x r1| = rho
    const double cx = ey * r1z - ez * r1y;
    const double cy = ez * r1x - ex * r1z;
    const double cz = ex * r1y - ey * r1x;
    const double rho2 = cx * cx + cy * cy + cz * cz;
    if (rho2 < kSingularGuard * kSingularGuard)
        throw SingularPoint("coil field evaluated on a conductor segment");
    const double cos1 = (ex * r1x + ey * r1y + ez * r1z) / r1;
    const double cos2 = (ex * r2x + ey * r2y + ez * r2z) / r2;
    const double scale = kConstants.mu0 / (4.0 * kPi * rho2) * (cos1 - cos2);
    return {scale * cx, scale * cy, scale * cz};
}

}  // namespace

std::array<double, 3> coil_unitary_field(const CoilSpec& coil, double px, double py,
                                         double pz) {
    const std::array<double, 3> x{px, py, pz};
    std::array<double, 3> b{0.0, 0.0, 0.0};
    for (const auto& r : coil.loop_rects) {
        // Counterclockwise in the yz-plane viewed from +x, so the axis field
        // at the loop center points along +x.
        const std::array<std::array<double, 3>, 4> corners{{
            {0.0, r.y_min, r.z_min},
            {0.0, r.y_max, r.z_min},
            {0.0, r.y_max, r.z_max},
            {0.0, r.y_min, r.z_max},
        }};
        for (int s = 0; s < 4; ++s) {
            const auto seg = segment_field(corners[s], corners[(s + 1) % 4], x);
            b[0] += seg[0];
            b[1] += seg[1];
            b[2] += seg[2];
        }
    }
    return b;
}

double self_weighted_average(const std::vector<double>& values) {
    if (values.empty()) throw EmptyInput("self_weighted_average: empty input");
    double num = 0.0, den = 0.0;
    for (double v : values) {
        if (v < 0.0) throw Error("self_weighted_average: negative magnitude");
        num += v * v;
        den += v;
    }
    if (den == 0.0) throw AllZero("self_weighted_average: all values zero");
    return num / den;
}

}  // namespace esrsim
