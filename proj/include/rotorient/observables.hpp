#ifndef ROTORIENT_OBSERVABLES_HPP
#define ROTORIENT_OBSERVABLES_HPP

#include <utility>
#include <vector>

#include "rotorient/propagate.hpp"
#include "rotorient/rotor.hpp"

namespace rotorient {

/// Field-free degree of orientation at absolute time t for a packet whose
/// interaction-picture coefficients are frozen (post-pulse):
///   <cos theta>(t) = sum_J 2 M_{J+1,J} Re[ conj(c_{J+1}) c_J exp(i w_{J,J+1} t) ].
double orientation_at(const WavePacket& packet, const RotorModel& model, double t);

struct RevivalMax {
    double value = 0.0;  ///< max |<cos theta>| over one revival period
    double time = 0.0;   ///< where it is attained (absolute time)
};

/// Scans |<cos theta>| on a 4096-point grid over one revival period after the
/// packet's reference time and refines the best bracket by golden-section
/// search to 1e-8 in t.
RevivalMax max_orientation_over_revival(const WavePacket& packet, const RotorModel& model);

struct OrientationTrace {
    std::vector<std::pair<double, double>> samples;  ///< (t, <cos theta>)
    double max_value = 0.0;                          ///< max |<cos theta>| over the samples
    double argmax_time = 0.0;
};

OrientationTrace sample_orientation_trace(const WavePacket& packet, const RotorModel& model,
                                          double t_from, double t_to, int n_samples);

/// Populations below this report a phase of zero (the phase is meaningless).
inline constexpr double kPhaseFloorPopulation = 1e-4;

struct StateReport {
    std::vector<double> populations;
    std::vector<double> phases;
};

StateReport population_phase_report(const WavePacket& packet);

}  // namespace rotorient

#endif
