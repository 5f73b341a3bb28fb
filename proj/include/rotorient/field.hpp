#ifndef ROTORIENT_FIELD_HPP
#define ROTORIENT_FIELD_HPP

#include <array>
#include <stdexcept>

#include "rotorient/rotor.hpp"

namespace rotorient {

/// One Gaussian spectral lobe. In the time domain the pulse is
///   sqrt(2/pi) * A * dw * exp(-dw^2 (t-tc)^2 / 2) * cos(w0 (t-tc) + phi),
/// i.e. envelope peak sqrt(2/pi) * A * dw and duration tau = 1/dw.
struct PulseSpec {
    double amplitude = 0.0;    ///< spectral amplitude A
    double center_freq = 0.0;  ///< carrier frequency
    double bandwidth = 0.0;    ///< spectral width dw (> 0)
    double phase = 0.0;        ///< spectral phase at the carrier
    double center_time = 0.0;  ///< envelope center

    double duration() const { return 1.0 / bandwidth; }
};

/// Two-pulse control field with its simulation window. The window is chosen
/// so the field at both ends is negligible (see pulses_from_targets).
struct FieldConfig {
    std::array<PulseSpec, 2> pulses{};
    double t_start = 0.0;
    double t_end = 0.0;
    /// Set when the two spectral lobes overlap enough to corrupt the
    /// amplitude targets (cross-lobe > 1e-3 of the resident lobe at either
    /// transition frequency).
    bool overlap_flagged = false;
};

/// Complex spectral overlap integrals of the field with the two transition
/// frequencies, theta_k(t) = mu_k integral E(t') exp(+i w_k t') dt'.
struct ThetaPair {
    complexd theta1{0.0, 0.0};
    complexd theta2{0.0, 0.0};

    /// sqrt(|theta1|^2 + |theta2|^2)
    double theta12() const;
    /// |theta2| / |theta1|; NaN when |theta1| = 0 (check ratio_defined()).
    double ratio() const;
    bool ratio_defined() const;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Controls for the running-integral quadrature. max_step = 0 picks the
/// default (2 pi / w12) / 40; the result is refined by step halving until
/// two resolutions agree to rel_tol (at most max_refine halvings).
struct QuadratureControl {
    double max_step = 0.0;
    double rel_tol = 1e-6;
    int max_refine = 3;
};

/// Field value at time t (sum of the two Gaussian-windowed cosines).
double field_time(const FieldConfig& config, double t);

/// Spectrum E(w) = sum_i A_i exp(-(w-w_i)^2/(2 dw_i^2)) exp(i phi_i) exp(-i w tc_i).
/// Convention: E(w) = integral E(t) exp(-i w t) dt, positive lobes only; the
/// negative-frequency lobes are exponentially small for w0 * tau >> 1 and are
/// not included here (field_time is the defining form).
complexd spectral_field(const FieldConfig& config, double omega);

/// Running integrals theta_1(t), theta_2(t) by trapezoid quadrature from
/// t_start to t. Requires t within the window. Throws QuadratureError if the
/// refinement does not converge.
ThetaPair theta_integrals(const FieldConfig& config, const RotorModel& model, double t,
                          const QuadratureControl& quad = {});

/// Full-pulse thetas via the conjugate-spectrum identity
/// theta_k*(t_end) = mu_k E(w_k); agrees with theta_integrals at t_end for
/// non-overlapping narrow-band lobes.
ThetaPair theta_from_spectrum(const FieldConfig& config, const RotorModel& model);

/// Builds the two-pulse field realizing |theta1|, |theta2| targets:
/// w1 = w01 + detuning, w2 = 2 w1, amplitudes A_k = |theta_k| / mu_k,
/// first pulse centered at t = 0, second at t = delay, common bandwidth.
/// The window extends 6 Gaussian widths beyond the outermost pulse center.
FieldConfig pulses_from_targets(const ThetaPair& targets, const RotorModel& model,
                                double detuning, double bandwidth, double delay,
                                double phi1, double phi2);

}  // namespace rotorient

#endif
