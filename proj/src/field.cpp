#include "rotorient/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rotorient {

namespace {

constexpr double kWindowWidths = 6.0;  // Gaussian widths kept on each side
constexpr double kOverlapThreshold = 1e-3;

double pulse_value(const PulseSpec& p, double t) {
    if (p.amplitude == 0.0) return 0.0;
    const double u = (t - p.center_time) * p.bandwidth;
    return std::sqrt(2.0 / std::numbers::pi) * p.amplitude * p.bandwidth *
           std::exp(-0.5 * u * u) * std::cos(p.center_freq * (t - p.center_time) + p.phase);
}

complexd lobe_value(const PulseSpec& p, double omega) {
    const double u = (omega - p.center_freq) / p.bandwidth;
    return p.amplitude * std::exp(-0.5 * u * u) *
           std::exp(complexd{0.0, p.phase - omega * p.center_time});
}

// Trapezoid quadrature of E(t') exp(i w t') over [t_start, t] with n panels.
complexd oscillating_integral(const FieldConfig& config, double omega, double t, int n) {
    const double h = (t - config.t_start) / n;
    complexd sum = 0.5 * (field_time(config, config.t_start) *
                              std::exp(complexd{0.0, omega * config.t_start}) +
                          field_time(config, t) * std::exp(complexd{0.0, omega * t}));
    for (int i = 1; i < n; ++i) {
        const double ti = config.t_start + h * i;
        sum += field_time(config, ti) * std::exp(complexd{0.0, omega * ti});
    }
    return sum * h;
}

}  // namespace

double ThetaPair::theta12() const { return std::hypot(std::abs(theta1), std::abs(theta2)); }

bool ThetaPair::ratio_defined() const { return std::abs(theta1) > 0.0; }

double ThetaPair::ratio() const {
    if (!ratio_defined()) return std::numeric_limits<double>::quiet_NaN();
    return std::abs(theta2) / std::abs(theta1);
}

double field_time(const FieldConfig& config, double t) {
    return pulse_value(config.pulses[0], t) + pulse_value(config.pulses[1], t);
}

complexd spectral_field(const FieldConfig& config, double omega) {
    return lobe_value(config.pulses[0], omega) + lobe_value(config.pulses[1], omega);
}

ThetaPair theta_integrals(const FieldConfig& config, const RotorModel& model, double t,
                          const QuadratureControl& quad) {
    if (t < config.t_start - 1e-12 || t > config.t_end + 1e-12) {
        throw std::invalid_argument("theta_integrals: t outside the field window");
    }
    const double w01 = transition_frequency(model, 0);
    const double w12 = transition_frequency(model, 1);
    double max_step = quad.max_step;
    if (max_step <= 0.0) {
        max_step = (2.0 * std::numbers::pi / w12) / 40.0;
    }
    const double span = t - config.t_start;
    if (span <= 0.0) return {};

    int n = std::max(2, int(std::ceil(span / max_step)));
    auto evaluate = [&](int panels) {
        ThetaPair pair;
        pair.theta1 = dipole_coupling(model, 0) * oscillating_integral(config, w01, t, panels);
        pair.theta2 = dipole_coupling(model, 1) * oscillating_integral(config, w12, t, panels);
        return pair;
    };

    // Full-pulse theta magnitude sets the convergence scale; the running
    // integral itself can pass through zero.
    const double theta_scale = dipole_coupling(model, 0) * config.pulses[0].amplitude +
                               dipole_coupling(model, 1) * config.pulses[1].amplitude;

    ThetaPair coarse = evaluate(n);
    for (int refine = 0;; ++refine) {
        ThetaPair fine = evaluate(2 * n);
        const double scale = std::max({fine.theta12(), 1e-12 * theta_scale, 1e-300});
        const double change = std::hypot(std::abs(fine.theta1 - coarse.theta1),
                                         std::abs(fine.theta2 - coarse.theta2));
        if (change <= quad.rel_tol * scale) {
            return fine;
        }
        if (refine >= quad.max_refine) {
            throw QuadratureError(
                "theta_integrals: quadrature did not converge (step " + std::to_string(span / n) +
                ", relative change " + std::to_string(change / scale) + ")");
        }
        n *= 2;
        coarse = fine;
    }
}

ThetaPair theta_from_spectrum(const FieldConfig& config, const RotorModel& model) {
    ThetaPair pair;
    pair.theta1 = dipole_coupling(model, 0) *
                  std::conj(spectral_field(config, transition_frequency(model, 0)));
    pair.theta2 = dipole_coupling(model, 1) *
                  std::conj(spectral_field(config, transition_frequency(model, 1)));
    return pair;
}

FieldConfig pulses_from_targets(const ThetaPair& targets, const RotorModel& model,
                                double detuning, double bandwidth, double delay, double phi1,
                                double phi2) {
    validate(model);
    if (!(bandwidth > 0.0)) {
        throw std::invalid_argument("pulses_from_targets: bandwidth must be positive");
    }
    const double w01 = transition_frequency(model, 0);
    if (std::abs(detuning) >= w01) {
        throw std::invalid_argument("pulses_from_targets: |detuning| must stay below w01");
    }

    FieldConfig config;
    const double w0 = w01 + detuning;
    config.pulses[0] = {std::abs(targets.theta1) / dipole_coupling(model, 0), w0, bandwidth,
                        phi1, 0.0};
    config.pulses[1] = {std::abs(targets.theta2) / dipole_coupling(model, 1), 2.0 * w0,
                        bandwidth, phi2, delay};

    const double tau = 1.0 / bandwidth;
    config.t_start = std::min(0.0, delay) - kWindowWidths * tau;
    config.t_end = std::max(0.0, delay) + kWindowWidths * tau;

    // Overlap warning: each lobe evaluated at the other transition frequency,
    // relative to the lobe that owns it.
    const double w12 = transition_frequency(model, 1);
    const double own1 = std::abs(lobe_value(config.pulses[0], w01));
    const double cross1 = std::abs(lobe_value(config.pulses[1], w01));
    const double own2 = std::abs(lobe_value(config.pulses[1], w12));
    const double cross2 = std::abs(lobe_value(config.pulses[0], w12));
    config.overlap_flagged = (own1 > 0.0 && cross1 > kOverlapThreshold * own1) ||
                             (own2 > 0.0 && cross2 > kOverlapThreshold * own2);
    return config;
}

}  // namespace rotorient
