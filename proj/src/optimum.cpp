#include "rotorient/optimum.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotorient {

namespace {

// Quartic in the amplitude ratio s = |theta2|/|theta1| whose positive real
// roots mark the optimal-orientation conditions.
constexpr std::array<double, 5> kRatioQuartic = {2.0 / 9.0, -2.0 * std::numbers::sqrt2 / 3.0,
                                                 17.0 / 18.0, -2.0 * std::numbers::sqrt2 / 3.0,
                                                 13.0 / 18.0};

double quartic_value(double s) {
    double acc = 0.0;
    for (int l = 4; l >= 0; --l) acc = acc * s + kRatioQuartic[l];
    return acc;
}

double quartic_derivative(double s) {
    double acc = 0.0;
    for (int l = 4; l >= 1; --l) acc = acc * s + l * kRatioQuartic[l];
    return acc;
}

double polish_root(double lo, double hi) {
    // Bisection until the bracket is tight, then a few Newton steps.
    double flo = quartic_value(lo);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = quartic_value(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    double s = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double f = quartic_value(s);
        const double df = quartic_derivative(s);
        if (df == 0.0) break;
        s -= f / df;
    }
    return s;
}

}  // namespace

LagrangeSolution lagrange_optimum(double m10, double m21) {
    if (!(m10 > 0.0) || m21 < 0.0) {
        throw std::invalid_argument("lagrange_optimum: matrix elements must be non-negative, m10 > 0");
    }
    LagrangeSolution solution;
    solution.lambda_max = std::hypot(m10, m21);
    const double c1 = 1.0 / std::numbers::sqrt2;
    solution.coeff_magnitudes = {m10 / (solution.lambda_max * std::numbers::sqrt2), c1,
                                 m21 / (solution.lambda_max * std::numbers::sqrt2)};
    for (int j = 0; j < 3; ++j) {
        solution.populations[j] = solution.coeff_magnitudes[j] * solution.coeff_magnitudes[j];
    }
    return solution;
}

std::pair<double, double> solve_ratio_quartic() {
    // Scan [0, 2] for sign changes; the other two roots are complex.
    constexpr int kScanPoints = 4096;
    std::vector<double> roots;
    double prev_s = 0.0;
    double prev_f = quartic_value(prev_s);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double s = 2.0 * double(i) / kScanPoints;
        const double f = quartic_value(s);
        if (f == 0.0) {
            roots.push_back(s);
        } else if ((prev_f < 0.0) != (f < 0.0)) {
            roots.push_back(polish_root(prev_s, s));
        }
        prev_s = s;
        prev_f = f;
    }
    if (roots.size() != 2) {
        throw std::runtime_error("solve_ratio_quartic: expected exactly two real roots in (0, 2), found " +
                                 std::to_string(roots.size()));
    }
    const double s1 = std::max(roots[0], roots[1]);
    const double s2 = std::min(roots[0], roots[1]);
    for (double s : {s1, s2}) {
        if (std::abs(quartic_value(s)) >= 1e-12) {
            throw std::runtime_error("solve_ratio_quartic: root residual above 1e-12");
        }
    }
    return {s1, s2};
}

OptimalCondition condition_amplitudes(int branch, int winding) {
    if (branch != 1 && branch != 2) {
        throw std::invalid_argument("condition_amplitudes: branch must be 1 or 2");
    }
    if (winding < 0) {
        throw std::invalid_argument("condition_amplitudes: winding must be non-negative");
    }
    const auto [s1, s2] = solve_ratio_quartic();
    const double s = (branch == 1) ? s1 : s2;

    const double arg = 1.0 - std::numbers::sqrt2 / (3.0 * s) - std::numbers::sqrt2 * s / 3.0;
    if (arg < -1.0 || arg > 1.0) {
        throw std::runtime_error("condition_amplitudes: arccos argument outside [-1, 1]");
    }

    OptimalCondition condition;
    condition.branch = branch;
    condition.winding = winding;
    condition.ratio = s;
    condition.theta1_mag =
        std::abs(std::acos(arg) + 2.0 * std::numbers::pi * winding) / std::sqrt(1.0 + s * s);
    condition.theta2_mag = s * condition.theta1_mag;
    return condition;
}

double phase_residual(const ThetaPair& thetas) {
    if (std::abs(thetas.theta1) == 0.0 || std::abs(thetas.theta2) == 0.0) {
        throw std::invalid_argument("phase_residual: undefined for vanishing theta");
    }
    const double d = 2.0 * std::arg(thetas.theta1) - std::arg(thetas.theta2);
    // Distance to the nearest half-integer multiple of pi.
    return std::abs(std::remainder(d - std::numbers::pi / 2.0, std::numbers::pi));
}

}  // namespace rotorient
