#ifndef ROTORIENT_OPTIMUM_HPP
#define ROTORIENT_OPTIMUM_HPP

#include <array>
#include <utility>

#include "rotorient/field.hpp"

namespace rotorient {

/// Solution of the constrained maximization of the revival amplitude
/// f = 2 m10 |c0 c1| + 2 m21 |c1 c2| over normalized magnitude triples.
struct LagrangeSolution {
    double lambda_max = 0.0;  ///< maximum orientation amplitude
    std::array<double, 3> coeff_magnitudes{};
    std::array<double, 3> populations{};
};

/// Closed form: lambda^2 = m10^2 + m21^2, |c1| = 1/sqrt(2),
/// |c0| = m10/(lambda sqrt(2)), |c2| = m21/(lambda sqrt(2)).
/// For the J=0 ladder (m10 = sqrt(1/3), m21 = sqrt(4/15)) this gives
/// lambda = 0.7746 with populations (0.278, 0.5, 0.222).
LagrangeSolution lagrange_optimum(double m10, double m21);

/// The two positive real roots of
///   2/9 - (2 sqrt(2)/3) s + (17/18) s^2 - (2 sqrt(2)/3) s^3 + (13/18) s^4 = 0,
/// returned as (s1, s2) with s1 > s2 (0.9967 and 0.3087). Roots are isolated
/// by sign-change scanning on [0, 2] and polished by bisection + Newton;
/// residuals are checked below 1e-12. Throws std::runtime_error if the root
/// count in (0, 2) differs from two.
std::pair<double, double> solve_ratio_quartic();

/// Amplitude targets that make the first-order wavepacket reach the
/// Lagrange optimum, plus the phase relation they must be paired with:
/// 2 arg(theta1) - arg(theta2) = (k +- 1/2) pi.
struct OptimalCondition {
    int branch = 1;           ///< 1 or 2, selecting the quartic root
    int winding = 0;          ///< j >= 0, the 2 pi j branch of the arccos
    double theta1_mag = 0.0;  ///< radians
    double theta2_mag = 0.0;  ///< = ratio * theta1_mag
    double ratio = 0.0;       ///< s for the chosen branch
};

/// |theta1| = |arccos(1 - sqrt(2)/(3 s) - sqrt(2) s / 3) + 2 j pi| / sqrt(1 + s^2).
/// branch 1, j = 0 gives (0.3412 pi, 0.3401 pi); branch 2 gives
/// (0.7021 pi, 0.2167 pi).
OptimalCondition condition_amplitudes(int branch, int winding);

/// Distance of 2 arg(theta1) - arg(theta2) from the nearest half-integer
/// multiple of pi, in [0, pi/2]; zero iff the phase condition holds.
/// Throws std::invalid_argument if either theta vanishes.
double phase_residual(const ThetaPair& thetas);

}  // namespace rotorient

#endif
