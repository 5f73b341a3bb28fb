#include "rotorient/magnus.hpp"

#include <cmath>

#include "rotorient/observables.hpp"

namespace rotorient {

namespace {

// (cos r - 1) / r^2 and sin(r) / r with 4th-order series below the switch
// point; the closed forms are 0/0 at r = 0.
constexpr double kSeriesSwitch = 1e-4;

double cos_factor(double r) {
    if (r < kSeriesSwitch) {
        const double r2 = r * r;
        return -0.5 + r2 / 24.0 - r2 * r2 / 720.0;
    }
    return (std::cos(r) - 1.0) / (r * r);
}

double sinc(double r) {
    if (r < kSeriesSwitch) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sin(r) / r;
}

}  // namespace

WavePacket first_order_wavepacket(const ThetaPair& thetas) {
    const double r = thetas.theta12();
    const double g = cos_factor(r);

    WavePacket packet;
    packet.coeffs.resize(3);
    // c0 = (|t2|^2 + |t1|^2 cos r)/r^2 rewritten as 1 + |t1|^2 (cos r - 1)/r^2,
    // which is regular at r = 0 and exactly normalized together with c1, c2.
    packet.coeffs[0] = complexd{1.0 + std::norm(thetas.theta1) * g, 0.0};
    packet.coeffs[1] = complexd{0.0, 1.0} * thetas.theta1 * sinc(r);
    packet.coeffs[2] = thetas.theta1 * thetas.theta2 * g;
    return packet;
}

ComparisonRecord magnus_vs_exact_report(const FieldConfig& config, const RotorModel& model,
                                        const StepControl& control) {
    ComparisonRecord record;

    const auto exact = propagate_exact(ground_state(model), config, model, control);
    WavePacket analytic = first_order_wavepacket(theta_integrals(config, model, config.t_end));
    analytic.reference_time = config.t_end;

    const auto exact_report = population_phase_report(exact.final);
    const auto analytic_report = population_phase_report(analytic);
    record.populations_exact = exact_report.populations;
    record.phases_exact = exact_report.phases;
    record.populations_analytic = analytic_report.populations;
    record.phases_analytic = analytic_report.phases;

    record.max_orientation_exact = max_orientation_over_revival(exact.final, model).value;
    record.max_orientation_analytic = max_orientation_over_revival(analytic, model).value;

    const size_t n = std::min(record.populations_exact.size(), record.populations_analytic.size());
    for (size_t j = 0; j < n; ++j) {
        record.max_population_diff =
            std::max(record.max_population_diff,
                     std::abs(record.populations_exact[j] - record.populations_analytic[j]));
    }
    // Population possibly leaked beyond the analytic three-state space counts
    // as discrepancy too.
    for (size_t j = n; j < record.populations_exact.size(); ++j) {
        record.max_population_diff =
            std::max(record.max_population_diff, record.populations_exact[j]);
    }
    return record;
}

}  // namespace rotorient
