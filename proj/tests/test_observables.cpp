#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rotorient/observables.hpp"
#include "rotorient/optimum.hpp"

using namespace rotorient;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kM10 = 0.5773502691896258;
constexpr double kM21 = 0.5163977794943222;

WavePacket packet_from_magnitudes(double c0, double c1, double c2, double phi01, double phi12) {
    // arg c0 = 0; phases set through the two relative phases.
    WavePacket packet;
    packet.coeffs = {complexd{c0, 0.0}, std::polar(c1, phi01), std::polar(c2, phi01 + phi12)};
    return packet;
}

}  // namespace

TEST_CASE("orientation of the bare ground state vanishes") {
    RotorModel model;
    WavePacket packet;
    packet.coeffs = {complexd{1.0, 0.0}, complexd{0.0, 0.0}, complexd{0.0, 0.0}};
    for (double t : {0.0, 0.3, 1.7, 3.0}) {
        CHECK(orientation_at(packet, model, t) == 0.0);
    }
    const auto best = max_orientation_over_revival(packet, model);
    CHECK(best.value == 0.0);
    // flat trace: the reported time is arbitrary within one grid step
    CHECK(std::abs(best.time - packet.reference_time) <= revival_period(model) / 4096 + 1e-8);
}

TEST_CASE("equal two-state superposition peaks at 1/sqrt(3)") {
    RotorModel model;
    const auto packet = packet_from_magnitudes(std::sqrt(0.5), std::sqrt(0.5), 0.0, 0.0, 0.0);
    const auto best = max_orientation_over_revival(packet, model);
    CHECK(best.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
    // single-cosine maximum: w01 t - 0 = 0 (mod pi against the abs)
    CHECK(std::abs(orientation_at(packet, model, best.time)) ==
          doctest::Approx(best.value).epsilon(1e-12));
}

TEST_CASE("optimal packet reaches the Lagrange maximum") {
    RotorModel model;
    // phi12 = 2 phi01 (k = 0) realizes the bound.
    const auto packet = packet_from_magnitudes(std::sqrt(10.0) / 6.0, std::sqrt(0.5),
                                               std::sqrt(2.0) / 3.0, 0.7, 1.4);
    const auto best = max_orientation_over_revival(packet, model);
    CHECK(best.value == doctest::Approx(0.7745966692414834).epsilon(1e-9));
}

TEST_CASE("orientation trace is periodic with the revival") {
    RotorModel model;
    std::mt19937_64 gen = oracles::rng(131);
    std::normal_distribution<double> normal(0.0, 1.0);
    WavePacket packet;
    packet.coeffs.resize(3);
    for (auto& c : packet.coeffs) c = {normal(gen), normal(gen)};
    const double inv = 1.0 / packet.norm();
    for (auto& c : packet.coeffs) c *= inv;

    const double period = revival_period(model);
    for (double t : {0.1, 0.9, 2.2}) {
        CHECK(std::abs(orientation_at(packet, model, t) -
                       orientation_at(packet, model, t + period)) < 1e-10);
    }

    const auto first = max_orientation_over_revival(packet, model);
    WavePacket shifted = packet;
    shifted.reference_time += period;
    const auto second = max_orientation_over_revival(shifted, model);
    CHECK(std::abs(first.value - second.value) < 1e-10);
}

TEST_CASE("free evolution commutes with the orientation clock") {
    RotorModel model;
    model.j_max = 3;
    std::mt19937_64 gen = oracles::rng(137);
    std::normal_distribution<double> normal(0.0, 1.0);
    WavePacket packet;
    packet.coeffs.resize(model.dim());
    for (auto& c : packet.coeffs) c = {normal(gen), normal(gen)};
    const double inv = 1.0 / packet.norm();
    for (auto& c : packet.coeffs) c *= inv;

    const double s = 0.83, t = 1.91;
    const auto evolved = free_evolve(packet, model, s);
    CHECK(orientation_at(evolved, model, t) ==
          doctest::Approx(orientation_at(packet, model, s + t)).epsilon(1e-12));
}

TEST_CASE("phase relation saturates the bound, violations reduce it") {
    RotorModel model;
    std::mt19937_64 gen = oracles::rng(139);
    std::uniform_real_distribution<double> mag(0.05, 1.0);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> kdist(-2, 2);

    for (int trial = 0; trial < 200; ++trial) {
        double c0 = mag(gen), c1 = mag(gen), c2 = mag(gen);
        const double inv = 1.0 / std::sqrt(c0 * c0 + c1 * c1 + c2 * c2);
        c0 *= inv;
        c1 *= inv;
        c2 *= inv;
        const double f = 2.0 * kM10 * c0 * c1 + 2.0 * kM21 * c1 * c2;

        const double phi01 = ang(gen);
        const double phi12 = 2.0 * phi01 + kdist(gen) * kPi;
        const auto compliant = packet_from_magnitudes(c0, c1, c2, phi01, phi12);
        const auto best = max_orientation_over_revival(compliant, model);
        REQUIRE(std::abs(best.value - f) < 1e-8);

        const auto violating = packet_from_magnitudes(c0, c1, c2, phi01, phi12 + 0.4);
        const auto reduced = max_orientation_over_revival(violating, model);
        REQUIRE(reduced.value < f - 1e-6);
    }
}

TEST_CASE("orientation stays within the three-state bound") {
    RotorModel model;
    std::mt19937_64 gen = oracles::rng(149);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        WavePacket packet;
        packet.coeffs.resize(3);
        for (auto& c : packet.coeffs) c = {normal(gen), normal(gen)};
        const double inv = 1.0 / packet.norm();
        for (auto& c : packet.coeffs) c *= inv;
        const auto best = max_orientation_over_revival(packet, model);
        REQUIRE(best.value <= 0.7745966692414834 + 1e-9);
    }
}

TEST_CASE("orientation trace sampling") {
    RotorModel model;
    const auto packet = packet_from_magnitudes(std::sqrt(0.5), std::sqrt(0.5), 0.0, 0.0, 0.0);
    const auto trace = sample_orientation_trace(packet, model, 0.0, revival_period(model), 257);
    CHECK(trace.samples.size() == 257);
    CHECK(trace.samples.front().first == 0.0);
    CHECK(trace.samples.back().first == doctest::Approx(revival_period(model)).epsilon(1e-14));
    CHECK(trace.max_value <= 1.0 / std::sqrt(3.0) + 1e-12);
    CHECK(trace.max_value > 0.5);
    CHECK_THROWS_AS(sample_orientation_trace(packet, model, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("population and phase report") {
    SUBCASE("pure state reports zero phases everywhere") {
        WavePacket packet;
        packet.coeffs = {complexd{1.0, 0.0}, complexd{0.0, 0.0}, complexd{0.0, 0.0}};
        const auto report = population_phase_report(packet);
        CHECK(report.populations == std::vector<double>{1.0, 0.0, 0.0});
        CHECK(report.phases == std::vector<double>{0.0, 0.0, 0.0});
    }

    SUBCASE("phases below the population floor are zeroed") {
        WavePacket packet;
        packet.coeffs = {std::polar(0.99999, 0.3), std::polar(0.004, 1.0),
                         std::polar(0.0001, -2.0)};
        const auto report = population_phase_report(packet);
        CHECK(report.phases[0] == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(report.phases[1] == 0.0);  // population 1.6e-5 < 1e-4
        CHECK(report.phases[2] == 0.0);
    }
}
