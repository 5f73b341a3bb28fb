#ifndef ROTORIENT_SWEEP_HPP
#define ROTORIENT_SWEEP_HPP

#include <string>
#include <vector>

#include "rotorient/optimum.hpp"
#include "rotorient/propagate.hpp"
#include "rotorient/rotor.hpp"

namespace rotorient {

enum class SweepParam { none, bandwidth, detuning, delay };
enum class SweepMode { exact, analytic, both };
enum class Execution { serial, parallel };

const char* to_string(SweepParam p);
const char* to_string(SweepMode m);
SweepParam sweep_param_from_string(const std::string& s);
SweepMode sweep_mode_from_string(const std::string& s);

/// Uniform grid over one pulse parameter. Units: bandwidth in 1/tau',
/// delay in tau', detuning in units of w01 (or absolute internal frequency
/// when SweepConfig::detuning_absolute is set).
struct SweepAxis {
    SweepParam param = SweepParam::none;
    double min = 0.0;
    double max = 0.0;
    int n = 1;

    double value_at(int i) const;
};

struct SweepConfig {
    OptimalCondition condition;
    SweepMode mode = SweepMode::both;
    SweepAxis axis1;
    SweepAxis axis2;  ///< param = none for line cuts
    // Fixed values for parameters not swept (same units as the axes).
    double bandwidth = 0.02;
    double detuning = 0.0;
    double delay = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    bool detuning_absolute = false;
    StepControl step_control;
};

struct SweepRecord {
    double axis1 = 0.0;
    double axis2 = 0.0;
    std::string mode;  ///< "exact" or "analytic"
    double max_orientation = 0.0;
    std::vector<double> populations;
    std::vector<double> phases;
    bool ok = true;
    std::string error;
};

struct SweepResult {
    int n1 = 0;
    int n2 = 0;
    bool has_axis2 = false;
    std::vector<SweepRecord> records;  ///< index order: (i1, i2, mode)
    int failed_points = 0;
};

/// Resolved pulse parameters of one grid point (exposed for reuse by the
/// compare driver and tests).
struct GridPoint {
    double bandwidth_abs = 0.0;  ///< internal frequency units
    double detuning_abs = 0.0;
    double delay_abs = 0.0;
};
GridPoint resolve_point(const SweepConfig& config, const RotorModel& model, double axis1_value,
                        double axis2_value);

/// Evaluates every grid point (field synthesis, exact propagation and/or the
/// first-order analytic wavepacket, revival maximum, populations and phases).
/// Grid points are independent; the parallel execution fills the same records
/// in index order, so results are identical to the serial reference.
/// Per-point failures are recorded and the sweep continues.
SweepResult run_sweep(const SweepConfig& config, const RotorModel& model,
                      Execution exec = Execution::parallel);

}  // namespace rotorient

#endif
