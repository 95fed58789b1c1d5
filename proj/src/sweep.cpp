#include "qhe/sweep.hpp"

#include <cstdio>
#include <fstream>

#include "qhe/effective_bath.hpp"
#include "qhe/engine.hpp"
#include "qhe/lindblad.hpp"
#include "qhe/spectroscopy.hpp"

namespace qhe {

namespace fs = std::filesystem;

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_lines(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  out << content;
}

}  // namespace

void write_csv(const fs::path& path, const Table& table) {
  std::string s;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) s += ',';
    s += table.header[i];
  }
  s += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += row[i];
    }
    s += '\n';
  }
  write_lines(path, s);
}

void write_json_table(const fs::path& path, const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::object();
    for (size_t i = 0; i < row.size() && i < table.header.size(); ++i)
      r[table.header[i]] = row[i];
    rows.push_back(std::move(r));
  }
  write_lines(path, rows.dump(2) + "\n");
}

namespace {

void emit(const fs::path& path, const Table& t, bool json_format) {
  if (json_format) write_json_table(path, t);
  else write_csv(path, t);
}

fs::path with_ext(fs::path p, bool json_format) {
  p.replace_extension(json_format ? ".json" : ".csv");
  return p;
}

}  // namespace

void write_manifest(const fs::path& out_dir, const std::string& scenario,
                    const Json& resolved_config, const RunResult& result,
                    const RunOptions& opt) {
  Json m;
  m["scenario"] = scenario;
  m["tool_version"] = kToolVersion;
  m["config"] = resolved_config;
  m["config_hash"] = config_hash(resolved_config);
  if (!opt.figure.empty()) m["figure"] = opt.figure;
  Json outs = Json::array();
  for (const auto& p : result.outputs) outs.push_back(p.filename().string());
  m["outputs"] = outs;
  m["summary"] = result.summary;
  write_lines(out_dir / (scenario + "_manifest.json"), m.dump(2) + "\n");
}

RunResult run_populations(const SystemParams& sys, const PumpSpec& pump,
                          const RunOptions& opt) {
  const EffectiveBath bath = fit_bath(sys, pump);
  const std::vector<double> grid = default_mismatch_grid(bath);
  const MismatchReport rep = population_mismatch(sys, pump, grid);

  Table coh{{"t", "rho_11", "rho_gg"}, {}};
  Table th{{"t", "rho_11", "rho_gg"}, {}};
  coh.rows.resize(grid.size());
  th.rows.resize(grid.size());
  parallel_index(static_cast<int>(grid.size()), opt.jobs, [&](int i) {
    const double t = grid[static_cast<size_t>(i)];
    const PopulationPair c = pump.kind == PumpKind::ClassicalTwoPhoton
                                 ? coherent_population_classical(t, sys, pump)
                                 : coherent_population_entangled(t, sys, pump);
    const PopulationPair h = thermal_population(t, bath);
    coh.rows[static_cast<size_t>(i)] = {format_g17(t), format_g17(c.rho_11), format_g17(c.rho_gg)};
    th.rows[static_cast<size_t>(i)] = {format_g17(t), format_g17(h.rho_11), format_g17(h.rho_gg)};
  });

  RunResult r;
  const fs::path p1 = with_ext(opt.out_dir / "populations_coherent", opt.json_format);
  const fs::path p2 = with_ext(opt.out_dir / "populations_thermal", opt.json_format);
  emit(p1, coh, opt.json_format);
  emit(p2, th, opt.json_format);
  r.outputs = {p1, p2};
  r.summary = {{"n_h", bath.n_h},
               {"gamma_h", bath.gamma_h},
               {"T_h", bath.T_h},
               {"max_mismatch", rep.max_abs_diff}};
  return r;
}

RunResult run_bath_fit(const SystemParams& sys, const PumpSpec& pump, const RunOptions& opt) {
  const EffectiveBath bath = fit_bath(sys, pump);
  const MismatchReport rep = population_mismatch(sys, pump, default_mismatch_grid(bath));

  Table curves{{"t", "rho_11_coherent", "rho_11_thermal", "diff_11"}, {}};
  curves.rows.resize(rep.t.size());
  for (size_t i = 0; i < rep.t.size(); ++i) {
    const PopulationPair c = pump.kind == PumpKind::ClassicalTwoPhoton
                                 ? coherent_population_classical(rep.t[i], sys, pump)
                                 : coherent_population_entangled(rep.t[i], sys, pump);
    curves.rows[i] = {format_g17(rep.t[i]), format_g17(c.rho_11),
                      format_g17(c.rho_11 - rep.diff_11[i]), format_g17(rep.diff_11[i])};
  }

  RunResult r;
  const fs::path pc = with_ext(opt.out_dir / "bath_fit_curves", opt.json_format);
  emit(pc, curves, opt.json_format);
  const fs::path pj = opt.out_dir / "bath_fit.json";
  Json j{{"n_h", bath.n_h},
         {"gamma_h", bath.gamma_h},
         {"T_h", bath.T_h},
         {"max_mismatch", rep.max_abs_diff}};
  write_lines(pj, j.dump(2) + "\n");
  r.outputs = {pc, pj};
  r.summary = j;
  return r;
}

RunResult run_engine_sweep(const SystemParams& sys, const PumpSpec& pump,
                           const RangeSpec& tau_range, const RangeSpec& cp_range,
                           const RunOptions& opt) {
  const DimensionlessSet base = reduce(sys, pump);
  const std::vector<double> taus = expand_range(tau_range);
  const std::vector<double> cps = expand_range(cp_range);

  const int n = static_cast<int>(taus.size() * cps.size());
  Table t{{"tau", "c_p", "eta_star", "region", "sigma_p_prime", "P_max", "c21_star"}, {}};
  t.rows.resize(static_cast<size_t>(n));
  parallel_index(n, opt.jobs, [&](int i) {
    DimensionlessSet d = base;
    d.tau = taus[static_cast<size_t>(i) / cps.size()];
    d.c_p = cps[static_cast<size_t>(i) % cps.size()];
    const double eta = efficiency_at_max_power(pump.kind, d, EfficiencyForm::Weak);
    double pmax = 0.0, cstar = 0.0;
    try {
      const MaxPowerResult m = maximize_power(pump.kind, d);
      pmax = m.p_max;
      cstar = m.c21_star;
    } catch (const Error&) {
      // no positive-power branch at this grid cell
    }
    t.rows[static_cast<size_t>(i)] = {format_g17(d.tau),          format_g17(d.c_p),
                                      format_g17(eta),            classify_region(eta, d.tau),
                                      format_g17(d.sigma_p_prime), format_g17(pmax),
                                      format_g17(cstar)};
  });

  RunResult r;
  const fs::path p = with_ext(opt.out_dir / "engine_sweep", opt.json_format);
  emit(p, t, opt.json_format);
  r.outputs = {p};
  r.summary = {{"rows", n}};
  return r;
}

RunResult run_bounds(const DimensionlessSet& base, const std::vector<double>& taus,
                     const RunOptions& opt) {
  static const std::pair<BoundRegion, const char*> regions[] = {
      {BoundRegion::I, "I"},
      {BoundRegion::I_II, "I/II"},
      {BoundRegion::II_III, "II/III"},
      {BoundRegion::III_IV, "III/IV"},
      {BoundRegion::IV, "IV"},
  };
  Table t{{"tau", "bound", "kind", "eta_star", "c_p", "sigma_p_prime", "eta_closure"}, {}};
  for (double tau : taus) {
    for (const auto& [region, label] : regions) {
      for (PumpKind kind : {PumpKind::ClassicalTwoPhoton, PumpKind::EntangledTwoPhoton}) {
        DimensionlessSet d = base;
        d.tau = tau;
        std::string sigma = "unreachable", closure = "";
        try {
          d.sigma_p_prime = bound_bandwidth(kind, region, d);
          sigma = format_g17(d.sigma_p_prime);
          closure = format_g17(efficiency_at_max_power(kind, d, EfficiencyForm::TableClosure));
        } catch (const DomainError&) {
        }
        t.rows.push_back({format_g17(tau), label,
                          kind == PumpKind::ClassicalTwoPhoton ? "classical" : "entangled",
                          format_g17(bound_efficiency(region, tau)),
                          format_g17(bound_cp(region, tau)), sigma, closure});
      }
    }
  }
  RunResult r;
  const fs::path p = with_ext(opt.out_dir / "bounds", opt.json_format);
  emit(p, t, opt.json_format);
  r.outputs = {p};
  r.summary = {{"rows", t.rows.size()}};
  return r;
}

RunResult run_spectro(const SystemParams& sys, const PumpSpec& pump,
                      const RangeSpec& tau_range, const RunOptions& opt) {
  PumpSpec classical = pump;
  classical.kind = PumpKind::ClassicalTwoPhoton;
  if (classical.Omega_p == 0.0) classical.Omega_p = std::sqrt(pump.amplitude2());
  PumpSpec entangled = pump;
  entangled.kind = PumpKind::EntangledTwoPhoton;
  if (entangled.Omega_1p == 0.0) {
    entangled.Omega_1p = entangled.Omega_2p = std::sqrt(pump.amplitude2());
  }
  const DimensionlessSet dc = reduce(sys, classical);
  const DimensionlessSet dq = reduce(sys, entangled);
  const std::vector<double> taus = expand_range(tau_range);

  Table t{{"tau", "P_max_C", "P_max_Q", "ratio", "crossover_flag"}, {}};
  t.rows.resize(taus.size());
  parallel_index(static_cast<int>(taus.size()), opt.jobs, [&](int i) {
    DimensionlessSet c = dc, q = dq;
    c.tau = q.tau = taus[static_cast<size_t>(i)];
    const SpectroMax mc = spectro_max_power(PumpKind::ClassicalTwoPhoton, c, pump.sigma_pr);
    const SpectroMax mq = spectro_max_power(PumpKind::EntangledTwoPhoton, q, pump.sigma_pr);
    const double ratio = mq.p_max / mc.p_max;
    t.rows[static_cast<size_t>(i)] = {format_g17(c.tau), format_g17(mc.p_max),
                                      format_g17(mq.p_max), format_g17(ratio),
                                      ratio > 1.0 ? "1" : "0"};
  });

  RunResult r;
  const fs::path p = with_ext(opt.out_dir / "spectro_sweep", opt.json_format);
  emit(p, t, opt.json_format);
  r.outputs = {p};
  r.summary = {{"rows", taus.size()}};
  return r;
}

RunResult run_trajectory(const SystemParams& sys, const PumpSpec& pump,
                         const RunOptions& opt, int n_samples) {
  using namespace level;
  const double A = coherent_asymptote(sys, pump);
  const double rate = sys.gamma_2 * (2.0 * sys.n_2 + 1.0);
  const double P2 = A * (1.0 + 2.0 * sys.n_2) / (1.0 + sys.n_2);
  DensityMatrix rho0 = DensityMatrix::Zero();
  rho0(g, g) = 1.0 - P2;
  rho0(two, two) = P2;
  EomOptions eom;  // probe off, consistent dissipators
  const double t_end = 5.0 / rate;
  const Trajectory traj = integrate(rho0, sys, eom, t_end, t_end / 256.0, n_samples);

  Table t{{"t", "rho_gg", "rho_00", "rho_11", "rho_22", "re_rho_01", "im_rho_01"}, {}};
  t.rows.reserve(traj.t.size());
  for (size_t k = 0; k < traj.t.size(); ++k) {
    const DensityMatrix& m = traj.rho[k];
    t.rows.push_back({format_g17(traj.t[k]), format_g17(m(g, g).real()),
                      format_g17(m(zero, zero).real()), format_g17(m(one, one).real()),
                      format_g17(m(two, two).real()), format_g17(m(zero, one).real()),
                      format_g17(m(zero, one).imag())});
  }
  RunResult r;
  const fs::path p = with_ext(opt.out_dir / "trajectory", opt.json_format);
  emit(p, t, opt.json_format);
  r.outputs = {p};
  r.summary = {{"rows", t.rows.size()},
               {"max_trace_drift", traj.max_trace_drift},
               {"prepared_population", P2}};
  return r;
}

RunResult run_spdc(const JointAmplitude& ja, double half_width, int n, const RunOptions& opt) {
  const JsaGrid grid = jsa_grid(ja, half_width, n);
  Table t{{"omega_i", "omega_s", "magnitude2"}, {}};
  t.rows.resize(grid.magnitude2.size());
  parallel_index(static_cast<int>(grid.omega_i.size()), opt.jobs, [&](int i) {
    for (size_t s = 0; s < grid.omega_s.size(); ++s) {
      const size_t k = static_cast<size_t>(i) * grid.omega_s.size() + s;
      t.rows[k] = {format_g17(grid.omega_i[static_cast<size_t>(i)]),
                   format_g17(grid.omega_s[s]), format_g17(grid.magnitude2[k])};
    }
  });
  RunResult r;
  const fs::path p = with_ext(opt.out_dir / "spdc_jsa", opt.json_format);
  emit(p, t, opt.json_format);
  r.outputs = {p};
  r.summary = {{"rows", t.rows.size()}};
  return r;
}

}  // namespace qhe
