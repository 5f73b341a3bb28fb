#include "rotorient/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace rotorient {

namespace {

constexpr int kRevivalScanPoints = 4096;
constexpr double kTimeRefineTolerance = 1e-8;

double golden_section_max(double lo, double hi, const auto& f) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > kTimeRefineTolerance) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double orientation_at(const WavePacket& packet, const RotorModel& model, double t) {
    const int n = int(packet.coeffs.size());
    double value = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
        const double element = cos_matrix_element(j, j + 1, model.m);
        const double omega = transition_frequency(model, j);
        value += 2.0 * element *
                 std::real(std::conj(packet.coeffs[j + 1]) * packet.coeffs[j] *
                           std::exp(complexd{0.0, omega * t}));
    }
    return value;
}

RevivalMax max_orientation_over_revival(const WavePacket& packet, const RotorModel& model) {
    const double period = revival_period(model);
    const double t0 = packet.reference_time;
    const auto magnitude = [&](double t) { return std::abs(orientation_at(packet, model, t)); };

    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < kRevivalScanPoints; ++i) {
        const double v = magnitude(t0 + period * i / kRevivalScanPoints);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    // Refine inside the bracket around the best grid point; the trace is
    // periodic, so the bracket may wrap.
    const double step = period / kRevivalScanPoints;
    const double lo = t0 + step * (best - 1);
    const double hi = t0 + step * (best + 1);
    const double t_star = golden_section_max(lo, hi, magnitude);

    return {magnitude(t_star), t_star};
}

OrientationTrace sample_orientation_trace(const WavePacket& packet, const RotorModel& model,
                                          double t_from, double t_to, int n_samples) {
    if (n_samples < 2) {
        throw std::invalid_argument("sample_orientation_trace: need at least two samples");
    }
    OrientationTrace trace;
    trace.samples.reserve(n_samples);
    trace.argmax_time = t_from;
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_from + (t_to - t_from) * i / (n_samples - 1);
        const double v = orientation_at(packet, model, t);
        trace.samples.emplace_back(t, v);
        if (std::abs(v) > trace.max_value) {
            trace.max_value = std::abs(v);
            trace.argmax_time = t;
        }
    }
    return trace;
}

StateReport population_phase_report(const WavePacket& packet) {
    StateReport report;
    report.populations.reserve(packet.coeffs.size());
    report.phases.reserve(packet.coeffs.size());
    for (const auto& c : packet.coeffs) {
        const double p = std::norm(c);
        report.populations.push_back(p);
        report.phases.push_back(p < kPhaseFloorPopulation ? 0.0 : std::arg(c));
    }
    return report;
}

}  // namespace rotorient
