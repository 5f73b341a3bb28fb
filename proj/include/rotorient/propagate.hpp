#ifndef ROTORIENT_PROPAGATE_HPP
#define ROTORIENT_PROPAGATE_HPP

#include <stdexcept>
#include <vector>

#include "rotorient/field.hpp"
#include "rotorient/rotor.hpp"

namespace rotorient {

/// Interaction-picture expansion coefficients c_J at a reference time.
struct WavePacket {
    cvec coeffs;
    double reference_time = 0.0;

    double norm() const;
    std::vector<double> populations() const;
};

/// |J=0, M=0> for the model's basis size.
WavePacket ground_state(const RotorModel& model);

struct StepControl {
    /// dt = (2 pi / w12) / steps_per_period (fixed-step RK4).
    int steps_per_period = 200;
    double norm_tolerance = 1e-10;
    /// Store every n-th step in the trajectory; 0 disables sampling.
    int trajectory_stride = 0;
};

struct PropagationResult {
    WavePacket final;
    std::vector<WavePacket> trajectory;
    double norm_drift = 0.0;
};

struct PropagationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solves i dc/dt = H_I(t) c across the field window with classical RK4.
/// Throws PropagationError (with step size and drift in the message) if the
/// norm drifts beyond control.norm_tolerance.
PropagationResult propagate_exact(const WavePacket& initial, const FieldConfig& config,
                                  const RotorModel& model, const StepControl& control = {});

/// Same integration between arbitrary times (t_from > t_to integrates backward).
PropagationResult propagate_between(const WavePacket& initial, const FieldConfig& config,
                                    const RotorModel& model, double t_from, double t_to,
                                    const StepControl& control = {});

/// Free evolution for a duration t: c_J -> c_J exp(-i E_J t).
WavePacket free_evolve(const WavePacket& packet, const RotorModel& model, double t);

}  // namespace rotorient

#endif
