#include "qhe/oracle.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "qhe/config.hpp"
#include "qhe/effective_bath.hpp"
#include "qhe/engine.hpp"
#include "qhe/lindblad.hpp"
#include "qhe/spdc.hpp"
#include "qhe/spectroscopy.hpp"

namespace qhe {

namespace {

// Portable uniform double in (0,1); std::uniform_real_distribution is not
// bit-stable across standard libraries.
double u01(std::mt19937& gen) {
  return (static_cast<double>(gen()) + 0.5) / 4294967296.0;
}

double log_uniform(std::mt19937& gen, double lo, double hi) {
  return lo * std::pow(hi / lo, u01(gen));
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

DimensionlessSet engine_dimensionless(PumpKind kind) {
  const SystemParams sys = preset_system("engine");
  const PumpSpec pump = preset_pump("engine", kind);
  return reduce(sys, pump);
}

}  // namespace

CheckResult check_bath_asymptote_identity() {
  Timer timer;
  CheckResult r;
  r.name = "bath-asymptote-identity";
  const SystemParams sys = preset_system("bath-match");
  const PumpSpec pump = preset_pump("bath-match", PumpKind::ClassicalTwoPhoton);

  const EffectiveBath bath = fit_bath_classical(sys, pump);
  const double thermal_asym = bath.n_h / (1.0 + 2.0 * bath.n_h);
  const double coherent_asym = coherent_asymptote(sys, pump);
  const double diff = std::abs(thermal_asym - coherent_asym);

  const MismatchReport rep = population_mismatch(sys, pump, default_mismatch_grid(bath));
  r.pass = diff <= 1e-10 && std::isfinite(rep.max_abs_diff);
  r.detail = "asymptote diff = " + fmt(diff) +
             ", max transient |rho_c - rho_th| = " + fmt(rep.max_abs_diff);
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_ode_vs_closed_form() {
  Timer timer;
  CheckResult r;
  r.name = "ode-oracle-vs-closed-form";
  const SystemParams sys = preset_system("bath-match");
  const PumpSpec pump = preset_pump("bath-match", PumpKind::ClassicalTwoPhoton);

  const double A = coherent_asymptote(sys, pump);
  const double rate = sys.gamma_2 * (2.0 * sys.n_2 + 1.0);
  // Impulsive two-photon excitation: the pulse deposits P2 in level 2, after
  // which the closed form is P2 * G_11,22(t); P2 follows from the asymptote.
  const double P2 = A * (1.0 + 2.0 * sys.n_2) / (1.0 + sys.n_2);

  DensityMatrix rho = DensityMatrix::Zero();
  rho(level::g, level::g) = 1.0 - P2;
  rho(level::two, level::two) = P2;

  EomOptions opt;  // probe off, consistent dissipators
  double max_rel = 0.0;
  double t_now = 0.0;
  const int n_times = 20;
  for (int k = 0; k < n_times; ++k) {
    const double t_k = 0.05 / rate * std::pow(100.0, static_cast<double>(k) / (n_times - 1));
    const Trajectory seg = integrate(rho, sys, opt, t_k - t_now, (t_k - t_now) / 64.0, 1);
    rho = seg.rho.back();
    t_now = t_k;
    const double ode = rho(level::one, level::one).real();
    const double closed = A * (1.0 - std::exp(-rate * t_k));
    max_rel = std::max(max_rel, std::abs(ode - closed) / closed);
  }
  r.pass = max_rel <= 0.02;
  r.detail = "max rel deviation over 20 log-spaced times = " + fmt(max_rel);
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_table_closure() {
  Timer timer;
  CheckResult r;
  r.name = "table-closure";
  DimensionlessSet base = engine_dimensionless(PumpKind::ClassicalTwoPhoton);
  base.theta = 1.0;

  double worst = 0.0;
  const BoundRegion regions[] = {BoundRegion::I, BoundRegion::I_II, BoundRegion::II_III,
                                 BoundRegion::III_IV, BoundRegion::IV};
  for (double tau : {0.1, 0.25, 0.5, 0.75}) {
    for (BoundRegion region : regions) {
      for (PumpKind kind : {PumpKind::ClassicalTwoPhoton, PumpKind::EntangledTwoPhoton}) {
        DimensionlessSet d = base;
        d.tau = tau;
        d.sigma_p_prime = bound_bandwidth(kind, region, d);
        const double eta = efficiency_at_max_power(kind, d, EfficiencyForm::TableClosure);
        worst = std::max(worst, std::abs(eta - bound_efficiency(region, tau)));
      }
    }
  }
  r.pass = worst <= 1e-8;
  r.detail = "worst |eta - bound| over 4 tau x 5 rows x 2 tables = " + fmt(worst);
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_maxima_stationarity() {
  Timer timer;
  CheckResult r;
  r.name = "maxima-stationarity-and-match";
  std::mt19937 gen(20260809u);
  int matched = 0, flagged = 0, stationarity_fail = 0;
  const int n_sets = 100;
  r.data = nlohmann::json::array();

  for (int i = 0; i < n_sets; ++i) {
    DimensionlessSet d;
    d.u = log_uniform(gen, 0.5, 50.0);
    d.v = log_uniform(gen, 1e-4, 0.1);
    d.alpha = log_uniform(gen, 0.5, 50.0);
    d.lambda_prime = log_uniform(gen, 1.0, 100.0);
    d.c_p = 1.5 + 100.0 * u01(gen);
    d.theta = 1.0;
    const double tau_sigma = log_uniform(gen, 0.05, 0.9);
    d.tau = log_uniform(gen, 0.01, 0.5);
    d.sigma_p_prime = tau_sigma / d.tau;

    for (PumpKind kind : {PumpKind::ClassicalTwoPhoton, PumpKind::EntangledTwoPhoton}) {
      nlohmann::json rec{{"set", i},
                         {"kind", kind == PumpKind::ClassicalTwoPhoton ? "classical" : "entangled"},
                         {"u", d.u},
                         {"v", d.v},
                         {"alpha", d.alpha},
                         {"lambda_prime", d.lambda_prime},
                         {"c_p", d.c_p},
                         {"tau", d.tau},
                         {"sigma_p_prime", d.sigma_p_prime}};
      try {
        const MaxPowerResult m = maximize_power(kind, d);
        const bool stationary = m.stationarity <= 1e-6;
        if (!stationary) ++stationarity_fail;
        rec["p_max_numeric"] = m.p_max;
        rec["c21_star"] = m.c21_star;
        rec["p_max_closed_form"] = m.p_max_analytic;
        rec["stationarity"] = m.stationarity;
        rec["rel_disagreement"] = m.rel_disagreement;
        if (!m.flagged && stationary) {
          ++matched;
          rec["outcome"] = "matched";
        } else {
          ++flagged;
          rec["outcome"] = "flagged";
        }
      } catch (const Error& e) {
        ++flagged;
        rec["outcome"] = "flagged";
        rec["error"] = e.what();
      }
      r.data.push_back(std::move(rec));
    }
  }
  // Every set must either match the closed form or carry a flagged record;
  // boundary (non-stationary) maximizers occur on the classical branch whose
  // literal power expression has poles inside the c_21 domain.
  r.pass = matched + flagged == 2 * n_sets;
  r.detail = fmt(matched) + " matched, " + fmt(flagged) +
             " flagged with per-set records, " + fmt(stationarity_fail) +
             " boundary (non-stationary) maximizers";
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_qhe_crossover() {
  Timer timer;
  CheckResult r;
  r.name = "qhe-quantum-advantage-crossover";
  const DimensionlessSet dc = engine_dimensionless(PumpKind::ClassicalTwoPhoton);
  const DimensionlessSet dq = engine_dimensionless(PumpKind::EntangledTwoPhoton);

  auto diff = [&](double tau) {
    DimensionlessSet c = dc, q = dq;
    c.tau = q.tau = tau;
    return max_power_analytic(PumpKind::EntangledTwoPhoton, q) -
           max_power_analytic(PumpKind::ClassicalTwoPhoton, c);
  };
  const auto tau_star = find_crossover(diff, 1e-3, 0.06);
  const double target = 0.0048;
  if (!tau_star) {
    r.detail = "no P_Q^max = P_C^max crossover found in [1e-3, 0.06]";
  } else {
    r.pass = std::abs(*tau_star - target) <= 0.2 * target;
    const double asym = 1.0 / (dq.sigma_p_prime * std::pow(dq.theta, 0.25));
    r.detail = "crossover tau = " + fmt(*tau_star) + " (target 0.0048 +- 20%); " +
               "asymptotic-form crossover tau = " + fmt(asym);
  }
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_spectro_crossover() {
  Timer timer;
  CheckResult r;
  r.name = "spectro-quantum-advantage-crossover";
  const SystemParams sys = preset_system("engine");
  const PumpSpec pc = preset_pump("engine", PumpKind::ClassicalTwoPhoton);
  const PumpSpec pq = preset_pump("engine", PumpKind::EntangledTwoPhoton);
  const DimensionlessSet dc = reduce(sys, pc);
  const DimensionlessSet dq = reduce(sys, pq);
  const double sigma_pr = pc.sigma_pr;

  auto ratio_minus_1 = [&](double tau) {
    DimensionlessSet c = dc, q = dq;
    c.tau = q.tau = tau;
    const SpectroMax mc = spectro_max_power(PumpKind::ClassicalTwoPhoton, c, sigma_pr);
    const SpectroMax mq = spectro_max_power(PumpKind::EntangledTwoPhoton, q, sigma_pr);
    return mq.p_max / mc.p_max - 1.0;
  };
  const auto tau_star = find_crossover(ratio_minus_1, 0.01, 0.3);
  const double target = 0.07;
  bool sign_ok = false;
  if (tau_star) {
    const double below = ratio_minus_1(0.9 / dc.sigma_p_prime);
    const double above = ratio_minus_1(1.1 / dc.sigma_p_prime);
    sign_ok = below < 0.0 && above > 0.0;
    r.pass = std::abs(*tau_star - target) <= 0.2 * target && sign_ok;
    r.detail = "crossover tau = " + fmt(*tau_star) + " (target 0.07 +- 20%), sign flip across tau*sigma'=1: " +
               (sign_ok ? "yes" : "no");
  } else {
    r.detail = "no crossover found";
  }
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_intensity_scaling() {
  Timer timer;
  CheckResult r;
  r.name = "intensity-scaling-law";
  const SystemParams sys = preset_system("bath-match");

  auto slope = [](const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  // classical: asymptote vs Omega_p over two decades of weak amplitudes
  std::vector<double> lx, ly;
  for (int i = 0; i <= 8; ++i) {
    PumpSpec p = preset_pump("bath-match", PumpKind::ClassicalTwoPhoton);
    p.Omega_p = 1e-5 * std::pow(100.0, i / 8.0);
    lx.push_back(std::log(p.Omega_p));
    ly.push_back(std::log(coherent_asymptote(sys, p)));
  }
  const double slope_c = slope(lx, ly);

  // entangled: the amplitude knob is the pair amplitude s = Omega_1' Omega_2'
  // (proportional to the SPDC drive field), so rho_11 ~ s^2. Needs the
  // detuned set (Delta != 0).
  const SystemParams sys_q = preset_system("engine");
  lx.clear();
  ly.clear();
  for (int i = 0; i <= 8; ++i) {
    PumpSpec p = preset_pump("engine", PumpKind::EntangledTwoPhoton);
    const double s = 1e-8 * std::pow(100.0, i / 8.0);
    p.Omega_1p = p.Omega_2p = std::sqrt(s);
    lx.push_back(std::log(s));
    ly.push_back(std::log(coherent_asymptote(sys_q, p)));
  }
  const double slope_q = slope(lx, ly);

  r.pass = std::abs(slope_c - 4.0) <= 0.02 && std::abs(slope_q - 2.0) <= 0.02;
  r.detail = "classical slope = " + fmt(slope_c) + " (4.00 +- 0.02), entangled slope = " +
             fmt(slope_q) + " (2.00 +- 0.02)";
  r.seconds = timer.seconds();
  return r;
}

CheckResult check_property_suite() {
  Timer timer;
  CheckResult r;
  r.name = "property-suite";
  std::ostringstream detail;
  bool ok = true;

  // trace conservation + Hermiticity under integration (impulsive + CW-driven)
  {
    const SystemParams sys = preset_system("bath-match");
    EomOptions opt;
    opt.Omega_1 = opt.Omega_2 = 1e-4;
    opt.lambda = 5e-4;
    opt.det_1 = -sys.delta() / 2;
    opt.det_2 = sys.delta() / 2;
    opt.ee_prime_channel = true;
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(level::g, level::g) = 0.9;
    rho0(level::two, level::two) = 0.1;
    const double rate = sys.gamma_2 * (2 * sys.n_2 + 1);
    const Trajectory traj = integrate(rho0, sys, opt, 2.0 / rate, 0.02 / rate, 16);
    double herm = 0.0;
    for (const auto& m : traj.rho)
      herm = std::max(herm, (m - m.adjoint().eval()).cwiseAbs().maxCoeff());
    ok = ok && traj.max_trace_drift <= 1e-9 && herm <= 1e-12;
    detail << "trace drift " << fmt(traj.max_trace_drift) << ", hermiticity " << fmt(herm);
  }

  // transport matrix column sums
  {
    std::mt19937 gen(7u);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      SystemParams s = preset_system("bath-match");
      s.gamma_2 = log_uniform(gen, 1e-8, 1e-2);
      s.gamma_c = log_uniform(gen, 1e-8, 1e-2);
      s.gamma_e = log_uniform(gen, 1e-8, 1e-2);
      s.n_2 = log_uniform(gen, 1e-2, 1e3);
      s.n_c = log_uniform(gen, 1e-2, 1e3);
      s.n_e = log_uniform(gen, 1e-2, 1e3);
      const TransportMatrix tm = transport_from_params(s);
      tm.validate();
      for (int c = 0; c < 6; ++c) worst = std::max(worst, std::abs(tm.kappa.col(c).sum()));
    }
    ok = ok && worst <= 1e-12;
    detail << "; column-sum " << fmt(worst);
  }

  // Green function: eigen path vs closed forms
  {
    const SystemParams sys = preset_system("bath-match");
    const TransportMatrix tm = transport_from_params(sys);
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double t = 10.0 * i / 40.0 / (sys.gamma_2 * (2 * sys.n_2 + 1));
      const Eigen::MatrixXd G = population_green_eigen(tm, t);
      worst = std::max(worst, std::abs(G(level::zero, level::g) -
                                       population_green_closed(GreenPair::ZeroG, t, sys)));
      worst = std::max(worst, std::abs(G(level::e, level::ep) -
                                       population_green_closed(GreenPair::EEPrime, t, sys)));
      worst = std::max(worst, std::abs(G(level::one, level::two) -
                                       population_green_closed(GreenPair::OneTwo, t, sys)));
    }
    ok = ok && worst <= 1e-10;
    detail << "; green eigen-vs-closed " << fmt(worst);
  }

  // theta single source of truth
  {
    SystemParams sys = preset_system("bath-match");
    PumpSpec pump = preset_pump("bath-match", PumpKind::EntangledTwoPhoton);
    double worst = 0.0;
    for (double T : {0.0, 50.0, 314.1592653589793, 1000.0}) {
      pump.T_ent = T;
      JointAmplitude ja{1.0, pump.omega_p, pump.sigma_p, T};
      const double phi = phase_matching(sys.omega_2ep(), sys.omega_epg(), ja);
      worst = std::max(worst, std::abs(theta_factor(sys, pump) - phi * phi));
    }
    ok = ok && worst <= 1e-12;
    detail << "; theta-link " << fmt(worst);
  }

  // Carnot ceiling within the tabulated bandwidth window, 1e4 random sweeps
  {
    std::mt19937 gen(20260810u);
    double worst_violation = 0.0;
    bool order_ok = true;
    for (int i = 0; i < 10000; ++i) {
      DimensionlessSet d;
      d.tau = 0.02 + 0.95 * u01(gen);
      if (d.tau >= 1.0) d.tau = 0.97;
      d.u = log_uniform(gen, 0.5, 50.0);
      d.v = log_uniform(gen, 1e-4, 0.1);
      d.alpha = log_uniform(gen, 0.5, 50.0);
      d.theta = i % 3 == 0 ? 0.3 + 0.7 * u01(gen) : 1.0;
      const bool classical = i % 2 == 0;
      const PumpKind kind = classical ? PumpKind::ClassicalTwoPhoton : PumpKind::EntangledTwoPhoton;
      // lambda' above the row-I reachability threshold b v / u with b = 4
      d.lambda_prime = 4.0 * d.v / d.u * log_uniform(gen, 1.01, 100.0);
      const double eta_C = 1.0 - d.tau;
      const double b2 = bound_efficiency(BoundRegion::I_II, d.tau);
      const double b3 = bound_efficiency(BoundRegion::II_III, d.tau);
      const double b4 = bound_efficiency(BoundRegion::III_IV, d.tau);
      order_ok = order_ok && 0.0 < b2 && b2 < b3 && b3 < b4 && b4 < eta_C;
      double s_I, s_IV;
      try {
        s_I = bound_bandwidth(kind, BoundRegion::I, d);
        s_IV = bound_bandwidth(kind, BoundRegion::IV, d);
      } catch (const DomainError&) {
        continue;  // row unreachable at this lambda'
      }
      d.sigma_p_prime = s_IV + (s_I - s_IV) * u01(gen);
      const double eta = efficiency_at_max_power(kind, d, EfficiencyForm::TableClosure);
      worst_violation = std::max(worst_violation, eta - eta_C);
      worst_violation = std::max(worst_violation, -eta);
    }
    ok = ok && worst_violation <= 1e-12 && order_ok;
    detail << "; carnot-ceiling excess " << fmt(worst_violation)
           << (order_ok ? ", bound order ok" : ", bound order BROKEN");
  }

  // sinc evenness and boundedness
  {
    std::mt19937 gen(11u);
    double worst = 0.0;
    bool bounded = true;
    for (int i = 0; i < 1000; ++i) {
      const double x = (u01(gen) - 0.5) * 2000.0;
      worst = std::max(worst, std::abs(sinc(x) - sinc(-x)));
      bounded = bounded && std::abs(sinc(x)) <= 1.0;
    }
    bounded = bounded && std::abs(sinc(9.9e-5) - sinc(1.01e-4)) < 1e-8;
    ok = ok && worst == 0.0 && bounded;
    detail << "; sinc even/bounded " << (worst == 0.0 && bounded ? "ok" : "BROKEN");
  }

  r.pass = ok;
  r.detail = detail.str();
  r.seconds = timer.seconds();
  return r;
}

std::vector<CheckResult> run_acceptance_suite() {
  return {
      check_bath_asymptote_identity(), check_ode_vs_closed_form(), check_table_closure(),
      check_maxima_stationarity(),     check_qhe_crossover(),      check_spectro_crossover(),
      check_intensity_scaling(),       check_property_suite(),
  };
}

}  // namespace qhe
