#ifndef ROTORIENT_ROTOR_HPP
#define ROTORIENT_ROTOR_HPP

#include <complex>
#include <vector>

namespace rotorient {

using complexd = std::complex<double>;
using cvec = std::vector<complexd>;
using cmat = std::vector<cvec>;

/// Linear rigid rotor in internal units (hbar = 1; B and mu default to 1).
/// All dimensionless outputs of the toolkit are invariant under rescaling
/// of b and mu; see UnitSystem for conversion to laboratory units.
struct RotorModel {
    double b = 1.0;   ///< rotational constant
    double mu = 1.0;  ///< permanent dipole moment
    int j_max = 2;    ///< basis truncation, states J = 0..j_max
    int m = 0;        ///< magnetic quantum number (conserved, 0 in all workflows)

    int dim() const { return j_max + 1; }
};

/// Throws std::invalid_argument unless b > 0, mu > 0, j_max >= 2, |m| <= j_max.
void validate(const RotorModel& model);

/// <J' M| cos(theta) |J M>. Zero unless |J - J'| = 1; symmetric in J, J'.
/// Throws std::domain_error for negative J or |M| > min(J, J').
double cos_matrix_element(int j, int j_prime, int m);

/// E_J = B J (J+1) for J = 0..j_max.
std::vector<double> rotor_energies(const RotorModel& model);

/// omega_{J,J+1} = E_{J+1} - E_J = 2 B (J+1).
double transition_frequency(const RotorModel& model, int j);

/// tau' = pi / (2 omega01), the quarter revival time used as the bandwidth unit.
double tau_prime(const RotorModel& model);

/// Full revival period pi / B.
double revival_period(const RotorModel& model);

/// Dipole coupling mu_{J+1,J} = mu <J+1 M|cos theta|J M> for the model's M.
double dipole_coupling(const RotorModel& model, int j);

/// Interaction-picture Hamiltonian at time t for field value E(t):
/// zero diagonal, entry (J, J+1) = -mu_{J+1,J} E(t) exp(-i omega_{J,J+1} t),
/// Hermitian by construction. Dense (j_max+1)^2 matrix; the propagator uses
/// the tridiagonal structure directly.
cmat interaction_hamiltonian(const RotorModel& model, double field_value, double t);

/// Conversion between internal units (B = mu = 1) and laboratory units.
/// Reporting only: no physics depends on these scales. Defaults correspond
/// to HCN spectroscopy (B ~ 44.3 GHz, mu ~ 2.985 Debye).
struct UnitSystem {
    double b_ghz = 44.3;       ///< rotational constant, ordinary frequency
    double mu_debye = 2.985;   ///< dipole moment

    /// Laboratory seconds per internal time unit (for a model with B = b).
    double seconds_per_time(const RotorModel& model) const;
    /// Laboratory V/m per internal field unit.
    double volts_per_meter_per_field(const RotorModel& model) const;
    /// tau' in picoseconds.
    double tau_prime_ps(const RotorModel& model) const;
    /// revival period in picoseconds.
    double revival_period_ps(const RotorModel& model) const;
};

}  // namespace rotorient

#endif
