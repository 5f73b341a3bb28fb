// Benchmark: OpenMP-parallel sweep against the serial reference. Verifies
// record-for-record agreement and reports wall-clock timings and speedup.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rotorient/optimum.hpp"
#include "rotorient/sweep.hpp"

using namespace rotorient;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_delay = argc > 1 ? std::atoi(argv[1]) : 16;
    const int n_detuning = argc > 2 ? std::atoi(argv[2]) : 4;

    RotorModel model;
    SweepConfig config;
    config.condition = condition_amplitudes(1, 0);
    config.mode = SweepMode::exact;
    config.bandwidth = 0.1;
    config.phi1 = 0.0;
    config.phi2 = 0.0;
    config.axis1 = {SweepParam::delay, 0.0, 2.0, n_delay};
    config.axis2 = {SweepParam::detuning, -0.01, 0.01, n_detuning};

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both runs are serial\n");
#endif
    std::printf("grid: %d x %d exact propagations\n", n_delay, n_detuning);

    const auto t_serial = std::chrono::steady_clock::now();
    const auto serial = run_sweep(config, model, Execution::serial);
    const double serial_s = seconds_since(t_serial);

    const auto t_parallel = std::chrono::steady_clock::now();
    const auto parallel = run_sweep(config, model, Execution::parallel);
    const double parallel_s = seconds_since(t_parallel);

    if (serial.records.size() != parallel.records.size()) {
        std::printf("MISMATCH: record counts differ\n");
        return 1;
    }
    double worst = 0.0;
    for (size_t i = 0; i < serial.records.size(); ++i) {
        const auto& a = serial.records[i];
        const auto& b = parallel.records[i];
        if (a.mode != b.mode || a.ok != b.ok) {
            std::printf("MISMATCH: record %zu metadata differs\n", i);
            return 1;
        }
        worst = std::max(worst, std::abs(a.max_orientation - b.max_orientation));
        for (size_t j = 0; j < a.populations.size(); ++j) {
            worst = std::max(worst, std::abs(a.populations[j] - b.populations[j]));
        }
    }

    std::printf("serial:   %8.3f s\n", serial_s);
    std::printf("parallel: %8.3f s  (speedup %.2fx)\n", parallel_s,
                parallel_s > 0.0 ? serial_s / parallel_s : 0.0);
    std::printf("max |serial - parallel| over all records: %.3e\n", worst);
    if (worst != 0.0) {
        std::printf("MISMATCH: parallel sweep deviates from the serial reference\n");
        return 1;
    }
    std::printf("parallel records identical to the serial reference\n");
    return 0;
}
