#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qhe/effective_bath.hpp"
#include "qhe/units.hpp"

// Steady-state engine observables, dimensionless power surfaces, maximization
// over c_21, efficiency at maximum power, and the efficiency-bound machinery.

namespace qhe {

struct EngineResult {
  double power = 0.0;        // |P|
  double heat_flux_h = 0.0;  // |Qdot_h|
  double efficiency = 0.0;   // 1 - omega_c/omega_h
  double c21_star = 0.0;
  std::string region;        // bound-region label of the efficiency
  bool engine_regime = true; // n_h > n_c with omega_h > omega_c
};

// P = (2/3) lambda^2 G_h G_c (n_c - n_h)(omega_c - omega_h)
//     / [(G_h n_h + G_c n_c)(lambda^2 + G_h G_c n_c n_h)], eta = 1 - omega_c/omega_h.
// Power is reported as |P| with the regime recorded.
EngineResult engine_observables(const EffectiveBath& bath, const SystemParams& sys,
                                const PumpSpec& pump);

// The literal classical power carries tilde_c21 = alpha - c_21, which puts
// poles inside the physical c_21 range; SignConsistent flips it to
// alpha + c_21 (the high-temperature (n_2+1) c_21 combination, as in the
// entangled branch) for diagnostic runs.
enum class PowerVariant { Literal, SignConsistent };

// Dimensionless steady-state power (classical or entangled branch) at the
// set's c_21. The T_c*omega_c prefactor of the literal classical form is
// dropped; all comparisons and maxima are taken in these reduced units.
double power_dimensionless(PumpKind kind, const DimensionlessSet& d,
                           PowerVariant variant = PowerVariant::Literal);

// Literal closed-form maxima. m is an undefined symbol inside the
// classical form; exposed with default 1.
double max_power_analytic(PumpKind kind, const DimensionlessSet& d, double m = 1.0);

struct MaxPowerResult {
  double p_max = 0.0;        // numeric maximum (authoritative)
  double c21_star = 0.0;     // numeric maximizer
  double p_max_analytic = 0.0;
  double stationarity = 0.0;  // |dP/dc21| / |P| central difference at c21_star
  bool flagged = false;       // analytic and numeric disagree beyond tolerance
  double rel_disagreement = 0.0;
};

// 256-point bracketing scan over c_21 in (0, c_p - 1) followed by golden
// section; non-finite or non-positive samples are excluded from bracketing.
// The analytic closed form is evaluated alongside; disagreement beyond
// rel_tol raises the flag (the result carries both values, never throws).
MaxPowerResult maximize_power(PumpKind kind, const DimensionlessSet& d,
                              double rel_tol = 1e-6, int scan_points = 256,
                              PowerVariant variant = PowerVariant::Literal);

enum class EfficiencyForm {
  Full,          // full literal closed forms
  Weak,          // literal weak-dissipation forms
  TableClosure,  // the identity generating both bound tables:
                 // eta = 1 - lambda' T (alpha u theta - T) / (alpha^2 u v theta^2),
                 // T = tau^8 sigma'^8 (classical), tau^4 sigma'^4 (entangled)
};

double efficiency_at_max_power(PumpKind kind, const DimensionlessSet& d,
                               EfficiencyForm form = EfficiencyForm::Weak);

enum class BoundRegion { I, I_II, II_III, III_IV, IV };

// Bound efficiencies {0, eta_C/2, eta_CA, eta_C/(2-eta_C), eta_C} and the
// tabulated pump-frequency scale c_p per region.
double bound_efficiency(BoundRegion region, double tau);
double bound_cp(BoundRegion region, double tau);

// Tabulated bandwidth: classical sigma' = [xi (u - sqrt(u^2 - b u v / lambda'))]^{1/8}
// with xi = alpha / (2 (1-eta_C)^8); entangled the 4th-root analog with
// Xi = alpha theta / (2 (1-eta_C)^4). Throws DomainError (naming the minimal
// lambda') when the radicand is negative.
double bound_bandwidth(PumpKind kind, BoundRegion region, const DimensionlessSet& d);

// Region label for an efficiency value at temperature ratio tau.
std::string classify_region(double eta_star, double tau, double boundary_tol = 1e-9);

struct PowerRatio {
  double asymptotic = 0.0;  // 1 / (tau^4 sigma'^4 theta), small-tau limit
  double exact = 0.0;       // quotient of the full closed-form maxima
};

// Quantum/classical maximum-power ratio. theta = 0 yields an infinite-ratio
// sentinel in both fields.
PowerRatio max_power_ratio_qhe(const DimensionlessSet& d);

// Smallest tau in [tau_lo, tau_hi] where f changes sign, refined by bisection;
// nullopt when no sign change is bracketed.
std::optional<double> find_crossover(const std::function<double(double)>& f,
                                     double tau_lo, double tau_hi, int grid = 600);

}  // namespace qhe
