#include "rotorient/propagate.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rotorient {

namespace {

// d/dt c = -i H_I(t) c for the tridiagonal zero-diagonal H_I. couplings[j]
// holds mu_{j+1,j}; omegas[j] the transition frequency. Writes into out.
void derivative(const FieldConfig& config, const std::vector<double>& couplings,
                const std::vector<double>& omegas, double t, const cvec& c, cvec& out) {
    const double field = field_time(config, t);
    const int n = int(c.size());
    for (int j = 0; j < n; ++j) out[j] = {0.0, 0.0};
    for (int j = 0; j + 1 < n; ++j) {
        const complexd upper = -couplings[j] * field * std::exp(complexd{0.0, -omegas[j] * t});
        out[j] += upper * c[j + 1];
        out[j + 1] += std::conj(upper) * c[j];
    }
    for (int j = 0; j < n; ++j) out[j] *= complexd{0.0, -1.0};
}

double norm_squared(const cvec& c) {
    double s = 0.0;
    for (const auto& z : c) s += std::norm(z);
    return s;
}

}  // namespace

double WavePacket::norm() const { return std::sqrt(norm_squared(coeffs)); }

std::vector<double> WavePacket::populations() const {
    std::vector<double> p(coeffs.size());
    for (size_t j = 0; j < coeffs.size(); ++j) p[j] = std::norm(coeffs[j]);
    return p;
}

WavePacket ground_state(const RotorModel& model) {
    validate(model);
    WavePacket packet;
    packet.coeffs.assign(model.dim(), complexd{0.0, 0.0});
    packet.coeffs[0] = {1.0, 0.0};
    return packet;
}

PropagationResult propagate_between(const WavePacket& initial, const FieldConfig& config,
                                    const RotorModel& model, double t_from, double t_to,
                                    const StepControl& control) {
    validate(model);
    const int n = int(initial.coeffs.size());
    if (n != model.dim()) {
        throw std::invalid_argument("propagate: packet size does not match the model basis");
    }

    std::vector<double> couplings(n - 1), omegas(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        couplings[j] = dipole_coupling(model, j);
        omegas[j] = transition_frequency(model, j);
    }

    const double fastest = omegas.back();
    const double dt_target = (2.0 * std::numbers::pi / fastest) / control.steps_per_period;
    const double span = t_to - t_from;
    const long steps = std::max<long>(1, std::lround(std::ceil(std::abs(span) / dt_target)));
    const double dt = span / double(steps);

    PropagationResult result;
    cvec c = initial.coeffs;
    cvec k1(n), k2(n), k3(n), k4(n), tmp(n);
    double max_drift = 0.0;
    double t = t_from;

    for (long step = 0; step < steps; ++step) {
        t = t_from + dt * double(step);
        if (control.trajectory_stride > 0 && step % control.trajectory_stride == 0) {
            result.trajectory.push_back({c, t});
        }

        derivative(config, couplings, omegas, t, c, k1);
        for (int j = 0; j < n; ++j) tmp[j] = c[j] + 0.5 * dt * k1[j];
        derivative(config, couplings, omegas, t + 0.5 * dt, tmp, k2);
        for (int j = 0; j < n; ++j) tmp[j] = c[j] + 0.5 * dt * k2[j];
        derivative(config, couplings, omegas, t + 0.5 * dt, tmp, k3);
        for (int j = 0; j < n; ++j) tmp[j] = c[j] + dt * k3[j];
        derivative(config, couplings, omegas, t + dt, tmp, k4);
        for (int j = 0; j < n; ++j) {
            c[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }

        const double drift = std::abs(1.0 - norm_squared(c));
        if (drift > max_drift) max_drift = drift;
        if (drift > control.norm_tolerance) {
            throw PropagationError("propagation norm drift " + std::to_string(drift) +
                                   " exceeds tolerance " +
                                   std::to_string(control.norm_tolerance) + " at step size " +
                                   std::to_string(dt));
        }
    }

    result.final = {std::move(c), t_to};
    if (control.trajectory_stride > 0) {
        result.trajectory.push_back({result.final.coeffs, t_to});
    }
    result.norm_drift = max_drift;
    return result;
}

PropagationResult propagate_exact(const WavePacket& initial, const FieldConfig& config,
                                  const RotorModel& model, const StepControl& control) {
    return propagate_between(initial, config, model, config.t_start, config.t_end, control);
}

WavePacket free_evolve(const WavePacket& packet, const RotorModel& model, double t) {
    const auto energies = rotor_energies(model);
    if (packet.coeffs.size() != energies.size()) {
        throw std::invalid_argument("free_evolve: packet size does not match the model basis");
    }
    WavePacket evolved = packet;
    for (size_t j = 0; j < evolved.coeffs.size(); ++j) {
        evolved.coeffs[j] *= std::exp(complexd{0.0, -energies[j] * t});
    }
    evolved.reference_time = packet.reference_time + t;
    return evolved;
}

}  // namespace rotorient
