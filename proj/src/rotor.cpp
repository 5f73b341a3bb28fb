#include "rotorient/rotor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rotorient {

void validate(const RotorModel& model) {
    if (!(model.b > 0.0)) {
        throw std::invalid_argument("RotorModel: rotational constant must be positive");
    }
    if (!(model.mu > 0.0)) {
        throw std::invalid_argument("RotorModel: dipole moment must be positive");
    }
    if (model.j_max < 2) {
        throw std::invalid_argument("RotorModel: j_max must be at least 2, got " +
                                    std::to_string(model.j_max));
    }
    if (std::abs(model.m) > model.j_max) {
        throw std::invalid_argument("RotorModel: |m| exceeds j_max");
    }
}

double cos_matrix_element(int j, int j_prime, int m) {
    if (j < 0 || j_prime < 0) {
        throw std::domain_error("cos_matrix_element: negative angular momentum");
    }
    if (std::abs(m) > std::min(j, j_prime)) {
        throw std::domain_error("cos_matrix_element: |m| exceeds j");
    }
    if (std::abs(j - j_prime) != 1) {
        return 0.0;  // parity selection rule
    }
    const int lower = std::min(j, j_prime);
    const double num = double(lower + 1) * double(lower + 1) - double(m) * double(m);
    const double den = double(2 * lower + 1) * double(2 * lower + 3);
    return std::sqrt(num / den);
}

std::vector<double> rotor_energies(const RotorModel& model) {
    validate(model);
    std::vector<double> energies(model.dim());
    for (int j = 0; j <= model.j_max; ++j) {
        energies[j] = model.b * j * (j + 1);
    }
    return energies;
}

double transition_frequency(const RotorModel& model, int j) {
    return 2.0 * model.b * (j + 1);
}

double tau_prime(const RotorModel& model) {
    return std::numbers::pi / (2.0 * transition_frequency(model, 0));
}

double revival_period(const RotorModel& model) {
    return std::numbers::pi / model.b;
}

double dipole_coupling(const RotorModel& model, int j) {
    return model.mu * cos_matrix_element(j, j + 1, model.m);
}

cmat interaction_hamiltonian(const RotorModel& model, double field_value, double t) {
    validate(model);
    const int n = model.dim();
    cmat h(n, cvec(n, complexd{0.0, 0.0}));
    for (int j = 0; j + 1 < n; ++j) {
        const double omega = transition_frequency(model, j);
        const complexd upper =
            -dipole_coupling(model, j) * field_value * std::exp(complexd{0.0, -omega * t});
        h[j][j + 1] = upper;
        h[j + 1][j] = std::conj(upper);
    }
    return h;
}

double UnitSystem::seconds_per_time(const RotorModel& model) const {
    // Internal energy unit corresponds to h * b_ghz / model.b; time unit is
    // hbar over that, i.e. model.b / (2 pi b_ghz).
    return model.b / (2.0 * std::numbers::pi * b_ghz * 1e9);
}

double UnitSystem::volts_per_meter_per_field(const RotorModel& model) const {
    constexpr double debye_si = 3.33564e-30;  // C m
    const double energy_si = 6.62607015e-34 * b_ghz * 1e9 / model.b;  // J
    return energy_si / (mu_debye * debye_si) * model.mu;
}

double UnitSystem::tau_prime_ps(const RotorModel& model) const {
    return tau_prime(model) * seconds_per_time(model) * 1e12;
}

double UnitSystem::revival_period_ps(const RotorModel& model) const {
    return revival_period(model) * seconds_per_time(model) * 1e12;
}

}  // namespace rotorient
