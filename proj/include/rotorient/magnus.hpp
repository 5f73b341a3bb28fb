#ifndef ROTORIENT_MAGNUS_HPP
#define ROTORIENT_MAGNUS_HPP

#include <vector>

#include "rotorient/field.hpp"
#include "rotorient/propagate.hpp"
#include "rotorient/rotor.hpp"

namespace rotorient {

/// Closed-form first-order Magnus wavepacket for the three-state ladder,
/// starting from |00>:
///   c0 = (|t2|^2 + |t1|^2 cos r) / r^2
///   c1 = i t1 sin(r) / r
///   c2 = t1 t2 (cos r - 1) / r^2        with r = sqrt(|t1|^2 + |t2|^2).
/// Exactly normalized for any thetas; the r -> 0 limit is handled by series.
WavePacket first_order_wavepacket(const ThetaPair& thetas);

/// Exact propagation vs the first-order Magnus model for one field.
struct ComparisonRecord {
    std::vector<double> populations_exact;
    std::vector<double> populations_analytic;
    std::vector<double> phases_exact;     ///< phase floor convention applied
    std::vector<double> phases_analytic;  ///< (population < 1e-4 reports 0)
    double max_orientation_exact = 0.0;
    double max_orientation_analytic = 0.0;
    double max_population_diff = 0.0;
};

ComparisonRecord magnus_vs_exact_report(const FieldConfig& config, const RotorModel& model,
                                        const StepControl& control = {});

}  // namespace rotorient

#endif
