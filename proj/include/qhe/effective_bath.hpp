#pragma once

#include <vector>

#include "qhe/units.hpp"

// Closed-form coherently pumped populations, the effective hot-bath fit that
// matches them to a thermal two-level relaxation, and the residual diagnostic
// between the two curves.

namespace qhe {

struct EffectiveBath {
  double n_h = 0.0;      // mean occupation
  double gamma_h = 0.0;  // relaxation rate [eV]
  double T_h = 0.0;      // Bose temperature at omega_1g reproducing n_h [eV]
};

// ConsistencyFit solves the two matching conditions (equal asymptote, equal
// initial slope) of the coherent and thermal curves exactly. LiteralForm
// evaluates the literal closed-form fit; its classical Gamma_h line
// carries a dimensional typo and is kept only for documentation runs.
enum class BathFitMode { ConsistencyFit, LiteralForm };

struct PopulationPair {
  double rho_11 = 0.0;
  double rho_gg = 1.0;
};

// rho_11(t) = 16 d^2 d~^2 Omega_p^4 (1 - e^{-Gamma_2(2n_2+1)t})
//             / [(2n_2+1)(d^2+4s^2)^2(d~^2+4s^2)^2]
PopulationPair coherent_population_classical(double t, const SystemParams& sys,
                                             const PumpSpec& pump);

// rho_11(t) = N^2 (n_2+1) w_2e' w_e'g Delta^2 theta (1 - e^{-Gamma_2(2n_2+1)t})
//             / [(2n_2+1)(sigma_p^2 + Delta^2)^2],   N^2 = (Omega_1' Omega_2')^2
PopulationPair coherent_population_entangled(double t, const SystemParams& sys,
                                             const PumpSpec& pump);

// rho_11(t) = n_h (1 - e^{-Gamma_h(2n_h+1)t}) / (1 + 2 n_h)
PopulationPair thermal_population(double t, const EffectiveBath& bath);

// Asymptotic rho_11 of the matching coherent curve (t -> infinity).
double coherent_asymptote(const SystemParams& sys, const PumpSpec& pump);

EffectiveBath fit_bath_classical(const SystemParams& sys, const PumpSpec& pump,
                                 BathFitMode mode = BathFitMode::ConsistencyFit);
EffectiveBath fit_bath_entangled(const SystemParams& sys, const PumpSpec& pump,
                                 BathFitMode mode = BathFitMode::ConsistencyFit);
EffectiveBath fit_bath(const SystemParams& sys, const PumpSpec& pump,
                       BathFitMode mode = BathFitMode::ConsistencyFit);

struct MismatchReport {
  double max_abs_diff = 0.0;
  std::vector<double> t;
  std::vector<double> diff_11;  // rho_11 coherent - thermal
  std::vector<double> diff_gg;
};

// 400 log-spaced points over [1e-3, 10] x 1/(Gamma_h(2n_h+1)).
std::vector<double> default_mismatch_grid(const EffectiveBath& bath);

MismatchReport population_mismatch(const SystemParams& sys, const PumpSpec& pump,
                                   const std::vector<double>& t_grid,
                                   BathFitMode mode = BathFitMode::ConsistencyFit);

}  // namespace qhe
