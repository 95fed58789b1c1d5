#pragma once

#include <string_view>

#include "qhe/errors.hpp"

// Canonical unit system and reduction to the dimensionless variable set.
//
// Internal unit: eV with hbar = k_B = 1. Energies, rates, and temperatures
// are all stored in eV; times in 1/eV.

namespace qhe {

inline constexpr double kEvPerInverseCm = 1.239841984e-4;
inline constexpr double kEvPerInversePs = 6.582119569e-4;  // hbar in eV*ps
inline constexpr double kEvPerKelvin = 8.617333262e-5;     // k_B in eV/K

enum class Unit { eV, InverseCm, InversePs, Kelvin };

// Converts an energy-like quantity into internal eV.
double to_internal_units(double value, Unit unit);
Unit parse_unit(std::string_view tag);  // throws ConfigError on unknown tag

// Times: internal 1/eV. "ps" is the only non-trivial time tag in the inputs.
double time_to_internal(double value, std::string_view tag);

// sin(x)/x with the removable singularity patched; series used below |x|<1e-4.
double sinc(double x);

// Physical constants of the six-level molecule {g, 0, e, e', 1, 2}.
// Level energies and rates in eV; occupations dimensionless; temperatures in
// eV (converted from K at the config boundary).
struct SystemParams {
  double omega_g = 0.0;
  double omega_0 = 0.0;
  double omega_e = 0.0;
  double omega_ep = 0.0;
  double omega_1 = 0.0;
  double omega_2 = 0.0;

  double gamma_2 = 0.0;
  double gamma_c = 0.0;
  double gamma_e = 0.0;

  double n_2 = 0.0;
  double n_c = 0.0;
  double n_e = 0.0;

  double T_2 = 0.0;
  double T_c = 0.0;

  double omega_21() const { return omega_2 - omega_1; }
  double omega_c() const { return omega_0 - omega_g; }
  double omega_h() const { return omega_1 - omega_g; }
  double omega_2g() const { return omega_2 - omega_g; }
  double omega_2e() const { return omega_2 - omega_e; }
  double omega_2ep() const { return omega_2 - omega_ep; }
  double omega_epg() const { return omega_ep - omega_g; }
  // delta = omega_2e - omega_2e' = omega_e' - omega_e
  double delta() const { return omega_2e() - omega_2ep(); }
  // delta~ = delta + 2(omega_2e' - omega_e'g); equals delta for a harmonic ladder
  double delta_tilde() const { return delta() + 2.0 * (omega_2ep() - omega_epg()); }

  void validate() const;  // throws DomainError on violated invariants
};

enum class PumpKind { ClassicalTwoPhoton, EntangledTwoPhoton };

// Pump + probe description. omega_p is the *two-photon* center frequency
// (each photon of a midway-tuned pump sits at omega_p/2).
struct PumpSpec {
  PumpKind kind = PumpKind::ClassicalTwoPhoton;
  double omega_p = 0.0;
  double Omega_p = 0.0;               // classical Rabi amplitude
  double Omega_1p = 0.0, Omega_2p = 0.0;  // entangled Rabi amplitudes
  double sigma_p = 0.0;               // pump bandwidth
  double T_ent = 0.0;                 // entanglement time [1/eV]
  double lambda = 0.0;                // probe Rabi frequency
  double sigma_pr = 0.0;              // probe bandwidth

  // Squared single-amplitude normalization: Omega_p^2 (classical) or
  // Omega_1' Omega_2' (entangled), so that N^2 = amplitude2()^2 in both cases.
  double amplitude2() const;
  double detuning_Delta(const SystemParams& sys) const { return sys.omega_2g() - omega_p; }

  void validate(const SystemParams& sys) const;  // bandwidth invariants
};

// The reduced variable set all power/efficiency formulas are written in.
struct DimensionlessSet {
  double tau = 0.0;
  double c_p = 0.0;
  double c_21 = 0.0;
  double lambda_prime = 0.0;
  double sigma_p_prime = 0.0;
  double u = 0.0;
  double v = 0.0;
  double alpha = 0.0;
  double theta = 1.0;
};

// T_h = (Omega_p Gamma_2^2 / 2 delta)^(1/2). For entangled pumps the common
// amplitude sqrt(Omega_1' Omega_2') replaces Omega_p (same normalization as
// the dimensionless set).
double effective_hot_temperature(const SystemParams& sys, const PumpSpec& pump);

// Populates the full dimensionless set from physical parameters.
// tau = T_c/T_h, c_p = omega_p/omega_c, c_21 = omega_21/omega_c,
// lambda' = lambda (Gamma_2 T_c)^{-1/2}, u = Gamma_2 omega_c / (Gamma_c T_c),
// v = Gamma_c/omega_c, alpha = T_2/omega_c,
// theta = sinc^2[T_ent (omega_2e' - omega_ge')/2] (1 for classical pumps).
// sigma'_p: classical (sigma_p^2 - delta^2/4)^{1/2} Gamma_2 / (delta T_c),
//           entangled (sigma_p^2 - Delta^2)^{1/2} Gamma_2 / (T_c Delta).
DimensionlessSet reduce(const SystemParams& sys, const PumpSpec& pump);

double theta_factor(const SystemParams& sys, const PumpSpec& pump);

}  // namespace qhe
