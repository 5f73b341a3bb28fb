#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rotorient/magnus.hpp"
#include "rotorient/observables.hpp"
#include "rotorient/optimum.hpp"

using namespace rotorient;

namespace {
constexpr double kM10 = 0.5773502691896258;  // sqrt(1/3)
constexpr double kM21 = 0.5163977794943222;  // sqrt(4/15)
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("lagrange optimum: three-state ladder values") {
    const auto solution = lagrange_optimum(kM10, kM21);
    CHECK(solution.lambda_max == doctest::Approx(0.7745966692414834).epsilon(1e-12));
    CHECK(solution.coeff_magnitudes[0] == doctest::Approx(std::sqrt(10.0) / 6.0).epsilon(1e-12));
    CHECK(solution.coeff_magnitudes[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(solution.coeff_magnitudes[2] == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK(solution.populations[0] == doctest::Approx(5.0 / 18.0).epsilon(1e-12));
    CHECK(solution.populations[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(solution.populations[2] == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("lagrange optimum: two-level reduction at m21 = 0") {
    const auto solution = lagrange_optimum(0.7, 0.0);
    CHECK(solution.lambda_max == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(solution.coeff_magnitudes[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(solution.coeff_magnitudes[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(solution.coeff_magnitudes[2] == 0.0);
}

TEST_CASE("lagrange optimum: matches brute-force grid search") {
    std::mt19937_64 gen = oracles::rng(37);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double m10 = dist(gen), m21 = dist(gen);
        const double brute = oracles::lagrange_brute_force(m10, m21);
        CHECK(lagrange_optimum(m10, m21).lambda_max == doctest::Approx(brute).epsilon(1e-4));
    }
}

TEST_CASE("lagrange optimum: stationarity residuals") {
    const auto s = lagrange_optimum(kM10, kM21);
    const auto& c = s.coeff_magnitudes;
    CHECK(std::abs(kM10 * c[1] - s.lambda_max * c[0]) < 1e-12);
    CHECK(std::abs(kM21 * c[2] + kM10 * c[0] - s.lambda_max * c[1]) < 1e-12);
    CHECK(std::abs(kM21 * c[1] - s.lambda_max * c[2]) < 1e-12);
    CHECK(c[0] * c[0] + c[2] * c[2] == doctest::Approx(c[1] * c[1]).epsilon(1e-12));
    CHECK(s.populations[0] + s.populations[1] + s.populations[2] ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("revival amplitude never exceeds the Lagrange bound") {
    std::mt19937_64 gen = oracles::rng(41);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000000; ++trial) {
        const double c0 = std::abs(normal(gen)), c1 = std::abs(normal(gen)),
                     c2 = std::abs(normal(gen));
        const double inv2 = 1.0 / (c0 * c0 + c1 * c1 + c2 * c2);
        const double f = (2.0 * kM10 * c0 * c1 + 2.0 * kM21 * c1 * c2) * inv2;
        if (f > worst) worst = f;
    }
    CHECK(worst <= lagrange_optimum(kM10, kM21).lambda_max + 1e-9);
    CHECK(worst > 0.774);  // the bound is sharp: random search comes close
}

TEST_CASE("ratio quartic: the two real roots") {
    const auto [s1, s2] = solve_ratio_quartic();
    CHECK(std::abs(s1 - 0.9967) < 5e-4);
    CHECK(std::abs(s2 - 0.3087) < 5e-4);

    // direct residual evaluation
    const auto poly = [](double s) {
        return 2.0 / 9.0 - 2.0 * std::numbers::sqrt2 / 3.0 * (s + s * s * s) +
               17.0 / 18.0 * s * s + 13.0 / 18.0 * s * s * s * s;
    };
    CHECK(std::abs(poly(s1)) < 1e-12);
    CHECK(std::abs(poly(s2)) < 1e-12);

    // sign-change scan oracle: exactly two real roots in (0, 2)
    int sign_changes = 0;
    double prev = poly(0.0);
    for (int i = 1; i <= 100000; ++i) {
        const double f = poly(2.0 * i / 100000.0);
        if ((prev < 0.0) != (f < 0.0)) ++sign_changes;
        prev = f;
    }
    CHECK(sign_changes == 2);
}

TEST_CASE("condition amplitudes: j = 0 values from both branches") {
    const auto cond1 = condition_amplitudes(1, 0);
    CHECK(std::abs(cond1.theta1_mag - 0.3412 * kPi) < 1e-3 * kPi);
    CHECK(std::abs(cond1.theta2_mag - 0.3401 * kPi) < 1e-3 * kPi);
    CHECK(cond1.theta2_mag == doctest::Approx(cond1.ratio * cond1.theta1_mag).epsilon(1e-14));

    const auto cond2 = condition_amplitudes(2, 0);
    CHECK(std::abs(cond2.theta1_mag - 0.7021 * kPi) < 1e-3 * kPi);
    CHECK(std::abs(cond2.theta2_mag - 0.2167 * kPi) < 1e-3 * kPi);
}

TEST_CASE("condition amplitudes: winding grows the targets monotonically") {
    for (int branch : {1, 2}) {
        double prev = 0.0;
        for (int j = 0; j <= 3; ++j) {
            const auto cond = condition_amplitudes(branch, j);
            CHECK(cond.theta1_mag > prev);
            prev = cond.theta1_mag;
        }
    }
}

TEST_CASE("condition amplitudes feed the first-order packet to the optimum") {
    // Any branch and winding must reproduce the optimal magnitudes and, with
    // compliant phases (arg t1 = arg t2 = pi/2), the full revival maximum.
    RotorModel model;
    for (int branch : {1, 2}) {
        for (int j = 0; j <= 3; ++j) {
            const auto cond = condition_amplitudes(branch, j);
            const auto packet = first_order_wavepacket(
                {complexd{cond.theta1_mag, 0.0}, complexd{cond.theta2_mag, 0.0}});
            CHECK(std::abs(packet.coeffs[0]) ==
                  doctest::Approx(std::sqrt(10.0) / 6.0).epsilon(1e-6));
            CHECK(std::abs(packet.coeffs[1]) ==
                  doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-6));
            CHECK(std::abs(packet.coeffs[2]) ==
                  doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-6));

            const auto compliant = first_order_wavepacket(
                {std::polar(cond.theta1_mag, kPi / 2.0), std::polar(cond.theta2_mag, kPi / 2.0)});
            const auto best = max_orientation_over_revival(compliant, model);
            CHECK(std::abs(best.value - 0.7745966692414834) < 1e-6);
        }
    }
}

TEST_CASE("condition amplitudes: argument validation") {
    CHECK_THROWS_AS(condition_amplitudes(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(condition_amplitudes(1, -1), std::invalid_argument);
}

TEST_CASE("phase residual") {
    const auto make = [](double arg1, double arg2) {
        return ThetaPair{std::polar(1.0, arg1), std::polar(1.0, arg2)};
    };
    CHECK(phase_residual(make(kPi / 2.0, kPi / 2.0)) < 1e-14);
    CHECK(phase_residual(make(0.0, 0.0)) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
    // delay phase: arg theta2 = w12 tau0 = pi/2 satisfies the condition
    CHECK(phase_residual(make(0.0, kPi / 2.0)) < 1e-14);
    CHECK(phase_residual(make(0.3, 2.0 * 0.3 - 1.5 * kPi)) < 1e-13);
    CHECK_THROWS_AS(phase_residual(ThetaPair{complexd{0.0, 0.0}, complexd{1.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("phase residual is bounded by pi/2") {
    std::mt19937_64 gen = oracles::rng(53);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const ThetaPair pair{std::polar(1.0, dist(gen)), std::polar(1.0, dist(gen))};
        const double r = phase_residual(pair);
        CHECK(r >= 0.0);
        CHECK(r <= kPi / 2.0 + 1e-14);
    }
}
