#include "qhe/engine.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace qhe {

namespace {

constexpr double kGolden = 0.6180339887498949;

double pow4(double x) { return x * x * x * x; }
double pow8(double x) { return pow4(x) * pow4(x); }

}  // namespace

EngineResult engine_observables(const EffectiveBath& bath, const SystemParams& sys,
                                const PumpSpec& pump) {
  if (pump.lambda <= 0) throw DomainError("engine_observables: probe lambda must be positive");
  if (bath.gamma_h <= 0) throw DomainError("engine_observables: invalid bath");
  const double omega_c = sys.omega_c();
  const double omega_h = sys.omega_h();
  const double lam2 = pump.lambda * pump.lambda;
  const double num = (2.0 / 3.0) * lam2 * bath.gamma_h * sys.gamma_c *
                     (sys.n_c - bath.n_h) * (omega_c - omega_h);
  const double den = (bath.gamma_h * bath.n_h + sys.gamma_c * sys.n_c) *
                     (lam2 + bath.gamma_h * sys.gamma_c * sys.n_c * bath.n_h);
  const double P = num / den;

  EngineResult r;
  r.engine_regime = bath.n_h > sys.n_c && omega_h > omega_c;
  r.power = std::abs(P);
  r.efficiency = omega_h > 0 ? 1.0 - omega_c / omega_h : 0.0;
  // Qdot_h = P * omega_h / (omega_c - omega_h)
  r.heat_flux_h = omega_c != omega_h ? std::abs(P * omega_h / (omega_c - omega_h)) : 0.0;
  r.c21_star = sys.omega_21() / omega_c;
  const double tau = bath.T_h > 0 ? sys.T_c / bath.T_h : 1.0;
  r.region = classify_region(r.efficiency, tau);
  return r;
}

double power_dimensionless(PumpKind kind, const DimensionlessSet& d, PowerVariant variant) {
  const double c21 = d.c_21, cp = d.c_p, lam = d.lambda_prime;
  const double u = d.u, v = d.v, alpha = d.alpha, theta = d.theta;
  const double ctp = cp - c21 - 1.0;
  if (kind == PumpKind::ClassicalTwoPhoton) {
    const double t8 = pow8(d.tau) * pow8(d.sigma_p_prime);
    const double ct21 = variant == PowerVariant::Literal ? alpha - c21 : alpha + c21;
    const double num = 4.0 * c21 * u * v * ctp * lam * t8 * (ct21 - t8 * (ct21 - c21));
    const double den = 3.0 * (c21 * t8 + u * ct21) * (c21 * lam * t8 + v * ct21);
    if (den == 0.0) throw NumericError("power_dimensionless: pole in classical denominator");
    return num / den;
  }
  const double t4 = pow4(d.tau) * pow4(d.sigma_p_prime);
  const double ct21 = alpha + c21;
  const double num = 2.0 * u * v * c21 * ctp * lam * t4 *
                     (2.0 * theta * ct21 - t4 * (2.0 * ct21 - c21));
  const double den = 3.0 * (u * ct21 * theta + c21 * t4) * (v * ct21 * theta + c21 * lam * t4);
  if (den == 0.0) throw NumericError("power_dimensionless: pole in entangled denominator");
  return num / den;
}

double max_power_analytic(PumpKind kind, const DimensionlessSet& d, double m) {
  const double cp = d.c_p, lam = d.lambda_prime;
  const double u = d.u, v = d.v, alpha = d.alpha, theta = d.theta;
  const double cpp = cp - 1.0;
  if (kind == PumpKind::ClassicalTwoPhoton) {
    const double S = pow8(d.tau) * pow8(d.sigma_p_prime);
    const double A = std::sqrt(u * v * (S * cpp + alpha * u) * (S * cpp * lam + alpha * v));
    const double ttau = 1.0 - S;
    const double dd = v - u * lam;
    if (S == 0.0 || dd == 0.0) throw NumericError("max_power_analytic: singular parameters");
    return 4.0 * u * v * lam * ttau * (2.0 * A + 2.0 * alpha * u * v + S * cpp * (m * u + v)) /
           (3.0 * S * dd * dd);
  }
  const double s4 = pow4(d.tau) * pow4(d.sigma_p_prime);
  const double E = alpha * u * v * theta;
  const double W = std::sqrt(u * v * (s4 * cpp + E / v) * (s4 * cpp * lam + E / u));
  const double X = W + E;
  if (theta == 0.0) throw NumericError("max_power_analytic: theta = 0");
  const double num = 4.0 * u * v * lam * W * pow4(d.tau) * cpp * cpp *
                     pow4(d.sigma_p_prime) * (theta - s4);
  const double den = 3.0 * theta * (X + s4 * v * cpp) * (X + s4 * u * cpp * lam);
  return num / den;
}

MaxPowerResult maximize_power(PumpKind kind, const DimensionlessSet& d, double rel_tol,
                              int scan_points, PowerVariant variant) {
  if (d.c_p <= 1.0)
    throw DomainError("maximize_power: need c_p > 1 for a nonempty c_21 domain");
  const double hi = d.c_p - 1.0;

  auto eval = [&](double c21) -> double {
    DimensionlessSet dd = d;
    dd.c_21 = c21;
    double p;
    try {
      p = power_dimensionless(kind, dd, variant);
    } catch (const NumericError&) {
      return -std::numeric_limits<double>::infinity();
    }
    if (!std::isfinite(p) || p <= 0.0) return -std::numeric_limits<double>::infinity();
    return p;
  };

  // bracketing scan on the open interval
  int best = -1;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> xs(scan_points), fs(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    xs[i] = hi * (i + 1.0) / (scan_points + 1.0);
    fs[i] = eval(xs[i]);
    if (fs[i] > best_val) {
      best_val = fs[i];
      best = i;
    }
  }
  if (best < 0)
    throw DomainError("maximize_power: no positive power found in (0, c_p - 1)");

  double a = best > 0 ? xs[best - 1] : 0.0;
  double b = best + 1 < scan_points ? xs[best + 1] : hi;
  // golden section on [a, b]
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * hi; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = eval(x1);
    }
  }
  MaxPowerResult r;
  r.c21_star = f1 > f2 ? x1 : x2;
  r.p_max = std::max(f1, f2);

  const double step = 1e-5 * std::max(1.0, r.c21_star);
  const double fp = eval(r.c21_star + step), fm = eval(r.c21_star - step);
  if (std::isfinite(fp) && std::isfinite(fm))
    r.stationarity = std::abs((fp - fm) / (2.0 * step)) / std::abs(r.p_max);
  else
    r.stationarity = std::numeric_limits<double>::infinity();

  r.p_max_analytic = max_power_analytic(kind, d);
  r.rel_disagreement = std::abs(r.p_max - r.p_max_analytic) /
                       std::max(std::abs(r.p_max_analytic), 1e-300);
  r.flagged = r.rel_disagreement > rel_tol || r.stationarity > rel_tol;
  return r;
}

double efficiency_at_max_power(PumpKind kind, const DimensionlessSet& d, EfficiencyForm form) {
  const double cp = d.c_p, lam = d.lambda_prime;
  const double u = d.u, v = d.v, alpha = d.alpha, theta = d.theta;
  const double cpp = cp - 1.0;
  const bool classical = kind == PumpKind::ClassicalTwoPhoton;
  const double T = classical ? pow8(d.tau) * pow8(d.sigma_p_prime)
                             : pow4(d.tau) * pow4(d.sigma_p_prime);
  const double th = classical ? 1.0 : theta;

  switch (form) {
    case EfficiencyForm::TableClosure:
      return 1.0 - lam * T * (alpha * u * th - T) / (alpha * alpha * u * v * th * th);
    case EfficiencyForm::Weak: {
      if (classical) {
        const double X = alpha * alpha * u * v / (T * (T * cpp * lam + alpha * u * lam));
        return 1.0 - 1.0 / (cp + X);
      }
      const double X = u * v * alpha * alpha * theta * theta /
                       (T * lam * (alpha * u * theta + cpp * T));
      return 1.0 - 1.0 / (cp + X);
    }
    case EfficiencyForm::Full: {
      if (classical) {
        const double ttau = 1.0 - T;
        const double A = std::sqrt(u * v * (cpp * T + alpha * u) * (T * lam * cpp + alpha * v));
        const double num = ttau * A + u * v * ttau * alpha * alpha;
        const double den = ttau * T * (alpha * v + lam * (cpp * T + alpha * u));
        return 1.0 - 1.0 / (cp + num / den);
      }
      const double E = alpha * u * v * theta;
      const double W = std::sqrt(u * v * (T * cpp + E / v) * (T * cpp * lam + E / u));
      return 1.0 - 1.0 / (cp - cpp * E / (W + E));
    }
  }
  throw ConfigError("efficiency_at_max_power: unknown form");
}

namespace {

// Radicand coefficient b of each table row: sigma' solves
// T (alpha u theta - T) = (b/4) alpha^2 theta^2 u v / lambda'.
double bound_b(BoundRegion region, double eta_C) {
  switch (region) {
    case BoundRegion::I: return 4.0;
    case BoundRegion::I_II: return 2.0 * (2.0 - eta_C);
    case BoundRegion::II_III: return 4.0 * std::sqrt(1.0 - eta_C);
    case BoundRegion::III_IV: return 8.0 * (1.0 - eta_C) / (2.0 - eta_C);
    case BoundRegion::IV: return 4.0 * (1.0 - eta_C);
  }
  throw ConfigError("unknown bound region");
}

}  // namespace

double bound_efficiency(BoundRegion region, double tau) {
  const double eta_C = 1.0 - tau;
  switch (region) {
    case BoundRegion::I: return 0.0;
    case BoundRegion::I_II: return eta_C / 2.0;
    case BoundRegion::II_III: return 1.0 - std::sqrt(tau);
    case BoundRegion::III_IV: return eta_C / (2.0 - eta_C);
    case BoundRegion::IV: return eta_C;
  }
  throw ConfigError("unknown bound region");
}

double bound_cp(BoundRegion region, double tau) {
  const double eta_C = 1.0 - tau;
  switch (region) {
    case BoundRegion::I: return 1.0;
    case BoundRegion::I_II: return 2.0 / (2.0 - eta_C);
    case BoundRegion::II_III: return 1.0 / std::sqrt(1.0 - eta_C);
    case BoundRegion::III_IV: return (2.0 - eta_C) / (2.0 * (1.0 - eta_C));
    case BoundRegion::IV: return 2.0 / (1.0 - eta_C);
  }
  throw ConfigError("unknown bound region");
}

double bound_bandwidth(PumpKind kind, BoundRegion region, const DimensionlessSet& d) {
  const double eta_C = 1.0 - d.tau;
  const double b = bound_b(region, eta_C);
  const double u = d.u, v = d.v, lam = d.lambda_prime;
  const double radicand = u * u - b * u * v / lam;
  if (radicand < 0.0)
    throw DomainError("bound unreachable: need lambda' >= " + std::to_string(b * v / u));
  const double root = u - std::sqrt(radicand);
  if (kind == PumpKind::ClassicalTwoPhoton) {
    const double xi = d.alpha / (2.0 * pow8(1.0 - eta_C));
    return std::pow(xi * root, 1.0 / 8.0);
  }
  const double Xi = d.alpha * d.theta / (2.0 * pow4(1.0 - eta_C));
  return std::pow(Xi * root, 1.0 / 4.0);
}

std::string classify_region(double eta_star, double tau, double boundary_tol) {
  const double b1 = 0.0;
  const double b2 = bound_efficiency(BoundRegion::I_II, tau);
  const double b3 = bound_efficiency(BoundRegion::II_III, tau);
  const double b4 = bound_efficiency(BoundRegion::III_IV, tau);
  const double b5 = bound_efficiency(BoundRegion::IV, tau);
  auto near = [boundary_tol](double x, double y) { return std::abs(x - y) <= boundary_tol; };
  if (near(eta_star, b1)) return "I";
  if (near(eta_star, b2)) return "I/II";
  if (near(eta_star, b3)) return "II/III";
  if (near(eta_star, b4)) return "III/IV";
  if (near(eta_star, b5)) return "boundary-IV";
  if (eta_star < b2) return "I";
  if (eta_star < b3) return "II";
  if (eta_star < b4) return "III";
  if (eta_star <= b5) return "IV";
  return "above-Carnot";
}

PowerRatio max_power_ratio_qhe(const DimensionlessSet& d) {
  PowerRatio r;
  if (d.theta == 0.0) {
    r.asymptotic = std::numeric_limits<double>::infinity();
    r.exact = std::numeric_limits<double>::infinity();
    return r;
  }
  const double s4 = pow4(d.tau) * pow4(d.sigma_p_prime);
  r.asymptotic = 1.0 / (s4 * d.theta);
  r.exact = max_power_analytic(PumpKind::EntangledTwoPhoton, d) /
            max_power_analytic(PumpKind::ClassicalTwoPhoton, d);
  return r;
}

std::optional<double> find_crossover(const std::function<double(double)>& f, double tau_lo,
                                     double tau_hi, int grid) {
  if (tau_lo <= 0 || tau_hi <= tau_lo) throw DomainError("find_crossover: bad bracket");
  double prev_t = tau_lo, prev_f = f(tau_lo);
  const double ratio = std::pow(tau_hi / tau_lo, 1.0 / grid);
  for (int i = 1; i <= grid; ++i) {
    const double t = tau_lo * std::pow(ratio, i);
    const double ft = f(t);
    if (std::isfinite(prev_f) && std::isfinite(ft) && prev_f * ft <= 0.0 && prev_f != ft) {
      double a = prev_t, b = t, fa = prev_f;
      for (int k = 0; k < 200; ++k) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fa * fm <= 0.0) b = m;
        else {
          a = m;
          fa = fm;
        }
      }
      return 0.5 * (a + b);
    }
    prev_t = t;
    prev_f = ft;
  }
  return std::nullopt;
}

}  // namespace qhe
