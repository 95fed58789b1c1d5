#include "qhe/effective_bath.hpp"

#include <cmath>

namespace qhe {

namespace {

double relaxation_rate(const SystemParams& sys) {
  return sys.gamma_2 * (2.0 * sys.n_2 + 1.0);
}

PopulationPair saturation_curve(double t, double asymptote, double rate) {
  if (t < 0) throw DomainError("population requested at negative time");
  PopulationPair p;
  p.rho_11 = asymptote * (1.0 - std::exp(-rate * t));
  p.rho_gg = 1.0 - p.rho_11;
  if (p.rho_11 > 1.0)
    throw DomainError("perturbative-regime violation: rho_11 > 1 (pump too strong)");
  return p;
}

double classical_asymptote(const SystemParams& sys, const PumpSpec& pump) {
  const double d = sys.delta();
  const double dt = sys.delta_tilde();
  const double s2 = pump.sigma_p * pump.sigma_p;
  const double D1 = d * d + 4.0 * s2;
  const double D2 = dt * dt + 4.0 * s2;
  const double Om4 = pump.amplitude2() * pump.amplitude2();
  return 16.0 * d * d * dt * dt * Om4 /
         ((2.0 * sys.n_2 + 1.0) * D1 * D1 * D2 * D2);
}

double entangled_asymptote(const SystemParams& sys, const PumpSpec& pump) {
  const double D = pump.detuning_Delta(sys);
  const double N2 = pump.amplitude2() * pump.amplitude2();
  const double theta = theta_factor(sys, pump);
  const double Dt2 = pump.sigma_p * pump.sigma_p + D * D;
  return N2 * (sys.n_2 + 1.0) * sys.omega_2ep() * sys.omega_epg() * D * D * theta /
         ((2.0 * sys.n_2 + 1.0) * Dt2 * Dt2);
}

double bose_temperature(double n, double omega) {
  if (n <= 0.0) return 0.0;
  return omega / std::log1p(1.0 / n);
}

EffectiveBath consistency_fit(double asymptote, const SystemParams& sys) {
  if (asymptote >= 0.5)
    throw DomainError("effective bath undefined at this pump strength (asymptote >= 1/2)");
  EffectiveBath b;
  b.n_h = asymptote / (1.0 - 2.0 * asymptote);
  b.gamma_h = relaxation_rate(sys) / (1.0 + 2.0 * b.n_h);
  b.T_h = bose_temperature(b.n_h, sys.omega_h());
  return b;
}

}  // namespace

PopulationPair coherent_population_classical(double t, const SystemParams& sys,
                                             const PumpSpec& pump) {
  if (pump.kind != PumpKind::ClassicalTwoPhoton)
    throw DomainError("coherent_population_classical requires a classical pump");
  return saturation_curve(t, classical_asymptote(sys, pump), relaxation_rate(sys));
}

PopulationPair coherent_population_entangled(double t, const SystemParams& sys,
                                             const PumpSpec& pump) {
  if (pump.kind != PumpKind::EntangledTwoPhoton)
    throw DomainError("coherent_population_entangled requires an entangled pump");
  return saturation_curve(t, entangled_asymptote(sys, pump), relaxation_rate(sys));
}

PopulationPair thermal_population(double t, const EffectiveBath& bath) {
  const double asym = bath.n_h / (1.0 + 2.0 * bath.n_h);
  return saturation_curve(t, asym, bath.gamma_h * (2.0 * bath.n_h + 1.0));
}

double coherent_asymptote(const SystemParams& sys, const PumpSpec& pump) {
  return pump.kind == PumpKind::ClassicalTwoPhoton ? classical_asymptote(sys, pump)
                                                   : entangled_asymptote(sys, pump);
}

EffectiveBath fit_bath_classical(const SystemParams& sys, const PumpSpec& pump,
                                 BathFitMode mode) {
  if (pump.kind != PumpKind::ClassicalTwoPhoton)
    throw DomainError("fit_bath_classical requires a classical pump");
  if (mode == BathFitMode::ConsistencyFit)
    return consistency_fit(classical_asymptote(sys, pump), sys);

  // Literal form. n_h line is the exact asymptote match of the (n_2+1)-carrying
  // population; the Gamma_h line is typeset with sigma_p^4 where consistency
  // requires Omega_p^4 and is kept as written.
  const double d = sys.delta();
  const double s2 = pump.sigma_p * pump.sigma_p;
  const double D = d * d + 4.0 * s2;
  const double D4 = D * D * D * D;
  const double Om4 = pump.amplitude2() * pump.amplitude2();
  const double n2p1 = sys.n_2 + 1.0;
  const double denom = (2.0 * sys.n_2 + 1.0) * D4 - 32.0 * Om4 * n2p1 * d * d * d * d;
  if (denom <= 0.0)
    throw DomainError("effective bath undefined at this pump strength (literal n_h denominator <= 0)");
  EffectiveBath b;
  b.n_h = 16.0 * Om4 * n2p1 * d * d * d * d / denom;
  b.gamma_h = sys.gamma_2 *
              ((2.0 * sys.n_2 + 1.0) * D - 32.0 * s2 * s2 * n2p1 * d * d * d * d) / D4;
  b.T_h = bose_temperature(b.n_h, sys.omega_h());
  return b;
}

EffectiveBath fit_bath_entangled(const SystemParams& sys, const PumpSpec& pump,
                                 BathFitMode mode) {
  if (pump.kind != PumpKind::EntangledTwoPhoton)
    throw DomainError("fit_bath_entangled requires an entangled pump");
  // The literal entangled fit coincides with the exact matching conditions,
  // so both modes evaluate the same expressions.
  const double A = entangled_asymptote(sys, pump);
  (void)mode;
  return consistency_fit(A, sys);
}

EffectiveBath fit_bath(const SystemParams& sys, const PumpSpec& pump, BathFitMode mode) {
  return pump.kind == PumpKind::ClassicalTwoPhoton ? fit_bath_classical(sys, pump, mode)
                                                   : fit_bath_entangled(sys, pump, mode);
}

std::vector<double> default_mismatch_grid(const EffectiveBath& bath) {
  const double scale = 1.0 / (bath.gamma_h * (2.0 * bath.n_h + 1.0));
  const int n = 400;
  std::vector<double> grid(n);
  const double lo = std::log(1e-3 * scale);
  const double hi = std::log(10.0 * scale);
  for (int i = 0; i < n; ++i)
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  return grid;
}

MismatchReport population_mismatch(const SystemParams& sys, const PumpSpec& pump,
                                   const std::vector<double>& t_grid, BathFitMode mode) {
  if (t_grid.empty()) throw DomainError("population_mismatch: empty time grid");
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1])
      throw DomainError("population_mismatch: time grid must be ascending");

  const EffectiveBath bath = fit_bath(sys, pump, mode);
  MismatchReport rep;
  rep.t = t_grid;
  rep.diff_11.reserve(t_grid.size());
  rep.diff_gg.reserve(t_grid.size());
  for (double t : t_grid) {
    const PopulationPair c = pump.kind == PumpKind::ClassicalTwoPhoton
                                 ? coherent_population_classical(t, sys, pump)
                                 : coherent_population_entangled(t, sys, pump);
    const PopulationPair th = thermal_population(t, bath);
    rep.diff_11.push_back(c.rho_11 - th.rho_11);
    rep.diff_gg.push_back(c.rho_gg - th.rho_gg);
    rep.max_abs_diff = std::max({rep.max_abs_diff, std::abs(rep.diff_11.back()),
                                 std::abs(rep.diff_gg.back())});
  }
  return rep;
}

}  // namespace qhe
