#include "rotorient/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "rotorient/magnus.hpp"
#include "rotorient/observables.hpp"

namespace rotorient {

const char* to_string(SweepParam p) {
    switch (p) {
        case SweepParam::none: return "none";
        case SweepParam::bandwidth: return "bandwidth";
        case SweepParam::detuning: return "detuning";
        case SweepParam::delay: return "delay";
    }
    return "none";
}

const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::exact: return "exact";
        case SweepMode::analytic: return "analytic";
        case SweepMode::both: return "both";
    }
    return "both";
}

SweepParam sweep_param_from_string(const std::string& s) {
    if (s == "none") return SweepParam::none;
    if (s == "bandwidth") return SweepParam::bandwidth;
    if (s == "detuning") return SweepParam::detuning;
    if (s == "delay") return SweepParam::delay;
    throw std::invalid_argument("unknown sweep parameter: " + s);
}

SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "exact") return SweepMode::exact;
    if (s == "analytic") return SweepMode::analytic;
    if (s == "both") return SweepMode::both;
    throw std::invalid_argument("unknown sweep mode: " + s);
}

double SweepAxis::value_at(int i) const {
    if (n <= 1) return min;
    return min + (max - min) * double(i) / double(n - 1);
}

GridPoint resolve_point(const SweepConfig& config, const RotorModel& model, double axis1_value,
                        double axis2_value) {
    double bandwidth = config.bandwidth;
    double detuning = config.detuning;
    double delay = config.delay;

    const auto apply = [&](SweepParam param, double value) {
        switch (param) {
            case SweepParam::bandwidth: bandwidth = value; break;
            case SweepParam::detuning: detuning = value; break;
            case SweepParam::delay: delay = value; break;
            case SweepParam::none: break;
        }
    };
    apply(config.axis1.param, axis1_value);
    apply(config.axis2.param, axis2_value);

    const double tp = tau_prime(model);
    GridPoint point;
    point.bandwidth_abs = bandwidth / tp;
    point.delay_abs = delay * tp;
    point.detuning_abs =
        config.detuning_absolute ? detuning : detuning * transition_frequency(model, 0);
    return point;
}

namespace {

void validate_sweep(const SweepConfig& config) {
    if (config.axis1.param == SweepParam::none) {
        throw std::invalid_argument("sweep: axis1 must name a parameter");
    }
    if (config.axis1.n < 2) {
        throw std::invalid_argument("sweep: axis1 needs at least two points");
    }
    if (config.axis2.param != SweepParam::none) {
        if (config.axis2.n < 2) {
            throw std::invalid_argument("sweep: axis2 needs at least two points");
        }
        if (config.axis2.param == config.axis1.param) {
            throw std::invalid_argument("sweep: axes must differ");
        }
    }
}

SweepRecord evaluate_point(const SweepConfig& config, const RotorModel& model,
                           double axis1_value, double axis2_value, bool exact) {
    SweepRecord record;
    record.axis1 = axis1_value;
    record.axis2 = axis2_value;
    record.mode = exact ? "exact" : "analytic";

    const GridPoint point = resolve_point(config, model, axis1_value, axis2_value);
    const ThetaPair targets{complexd{config.condition.theta1_mag, 0.0},
                            complexd{config.condition.theta2_mag, 0.0}};
    const FieldConfig field =
        pulses_from_targets(targets, model, point.detuning_abs, point.bandwidth_abs,
                            point.delay_abs, config.phi1, config.phi2);

    WavePacket packet;
    if (exact) {
        packet = propagate_exact(ground_state(model), field, model, config.step_control).final;
    } else {
        packet = first_order_wavepacket(theta_integrals(field, model, field.t_end));
        packet.reference_time = field.t_end;
    }

    record.max_orientation = max_orientation_over_revival(packet, model).value;
    const auto report = population_phase_report(packet);
    record.populations = report.populations;
    record.phases = report.phases;
    return record;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const RotorModel& model, Execution exec) {
    validate(model);
    validate_sweep(config);

    SweepResult result;
    result.n1 = config.axis1.n;
    result.has_axis2 = config.axis2.param != SweepParam::none;
    result.n2 = result.has_axis2 ? config.axis2.n : 1;

    const bool run_exact = config.mode != SweepMode::analytic;
    const bool run_analytic = config.mode != SweepMode::exact;
    const int modes = (run_exact ? 1 : 0) + (run_analytic ? 1 : 0);
    const int points = result.n1 * result.n2;
    result.records.assign(size_t(points) * modes, SweepRecord{});

    const int total = points * modes;

    // Returns 1 if the point failed; failures never escape the worker so the
    // loop is safe to parallelize.
    const auto work = [&](int idx) -> int {
        const int point_index = idx / modes;
        const int mode_index = idx % modes;
        const int i1 = point_index / result.n2;
        const int i2 = point_index % result.n2;
        const double a1 = config.axis1.value_at(i1);
        const double a2 = result.has_axis2 ? config.axis2.value_at(i2) : 0.0;
        const bool exact = run_exact && mode_index == 0;

        SweepRecord& record = result.records[idx];
        try {
            record = evaluate_point(config, model, a1, a2, exact);
            return 0;
        } catch (const std::exception& e) {
            record.axis1 = a1;
            record.axis2 = a2;
            record.mode = exact ? "exact" : "analytic";
            record.ok = false;
            record.error = e.what();
            return 1;
        }
    };

    int failed = 0;
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : failed)
        for (int idx = 0; idx < total; ++idx) {
            failed += work(idx);
        }
    } else {
        // Serial reference path; results are index-ordered, so the parallel
        // loop reproduces it record for record.
        for (int idx = 0; idx < total; ++idx) {
            failed += work(idx);
        }
    }

    result.failed_points = failed;
    return result;
}

}  // namespace rotorient
