#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qhe/config.hpp"
#include "qhe/engine.hpp"
#include "qhe/oracle.hpp"
#include "qhe/sweep.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string preset = "engine";
  std::string kind = "classical";
  std::string out_dir = ".";
  std::string format = "csv";
  std::string figure;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config_path, "JSON config with system/pump blocks");
  cmd->add_option("--preset", a.preset, "built-in parameter set (fig3|fig7)");
  cmd->add_option("--kind", a.kind, "pump kind (classical|entangled)");
  cmd->add_option("--out", a.out_dir, "output directory");
  cmd->add_option("--jobs", a.jobs, "worker threads (0 = all cores)");
  cmd->add_option("--format", a.format, "output format (csv|json)");
  cmd->add_option("--figure", a.figure, "provenance tag recorded in the manifest");
}

qhe::PumpKind parse_kind(const std::string& kind) {
  if (kind == "classical") return qhe::PumpKind::ClassicalTwoPhoton;
  if (kind == "entangled") return qhe::PumpKind::EntangledTwoPhoton;
  throw qhe::ConfigError("--kind must be classical or entangled");
}

struct Loaded {
  qhe::SystemParams sys;
  qhe::PumpSpec pump;
  qhe::Json resolved;
};

Loaded load(const CommonArgs& a) {
  Loaded l;
  if (!a.config_path.empty()) {
    const qhe::Json j = qhe::load_json_file(a.config_path);
    l.sys = qhe::system_from_json(j.at("system"));
    l.pump = qhe::pump_from_json(j.at("pump"), l.sys);
  } else {
    l.sys = qhe::preset_system(a.preset);
    l.pump = qhe::preset_pump(a.preset, parse_kind(a.kind));
  }
  l.resolved = qhe::Json{{"system", qhe::system_to_json(l.sys)},
                         {"pump", qhe::pump_to_json(l.pump)}};
  return l;
}

qhe::RunOptions run_options(const CommonArgs& a) {
  qhe::RunOptions opt;
  opt.out_dir = a.out_dir;
  opt.jobs = a.jobs;
  if (a.format == "json") opt.json_format = true;
  else if (a.format != "csv") throw qhe::ConfigError("--format must be csv or json");
  opt.figure = a.figure;
  std::filesystem::create_directories(opt.out_dir);
  return opt;
}

qhe::RangeSpec parse_range(const std::string& spec) {
  qhe::RangeSpec r;
  double lo, hi;
  int n;
  char tail[8] = {0};
  const int got = std::sscanf(spec.c_str(), "%lf:%lf:%d:%7s", &lo, &hi, &n, tail);
  if (got < 3) throw qhe::ConfigError("range must be lo:hi:count[:log] — got '" + spec + "'");
  r.min = lo;
  r.max = hi;
  r.count = n;
  r.log_spacing = got == 4 && std::string(tail) == "log";
  return r;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    out.push_back(std::stod(spec.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (out.empty()) throw qhe::ConfigError("empty value list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon pumped quantum heat engine toolkit"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string tau_range = "0.001:0.2:200:log";
  std::string cp_range = "1.5:120:64";
  std::string grid_spec;
  std::string tau_list = "0.1,0.25,0.5,0.75";
  double half_width = 0.0;
  int spdc_n = 512;
  bool with_ode = false;
  double ovr_lambda_prime = 0.0, ovr_u = 0.0, ovr_v = 0.0, ovr_alpha = 0.0, ovr_theta = -1.0;

  auto* populations = app.add_subcommand("populations", "coherent vs thermal population curves");
  add_common(populations, a);
  populations->add_flag("--ode", with_ode,
                        "also integrate the density-matrix equation of motion and export the trajectory");
  auto* bath_fit = app.add_subcommand("bath-fit", "effective hot-bath fit and mismatch");
  add_common(bath_fit, a);
  auto* engine_sweep = app.add_subcommand("engine-sweep", "eta*/P_max map over (tau, c_p)");
  add_common(engine_sweep, a);
  engine_sweep->add_option("--tau-range", tau_range, "lo:hi:count[:log]");
  engine_sweep->add_option("--cp-range", cp_range, "lo:hi:count[:log]");
  engine_sweep->add_option("--grid", grid_spec, "NxM override for tau x c_p counts");
  auto* bounds = app.add_subcommand("bounds", "efficiency-bound bandwidth columns and closure");
  add_common(bounds, a);
  bounds->add_option("--tau", tau_list, "comma-separated tau values");
  bounds->add_option("--lambda-prime", ovr_lambda_prime, "override the reduced probe coupling");
  bounds->add_option("--u", ovr_u, "override u");
  bounds->add_option("--v", ovr_v, "override v");
  bounds->add_option("--alpha", ovr_alpha, "override alpha");
  bounds->add_option("--theta", ovr_theta, "override theta");
  auto* spectro = app.add_subcommand("spectro", "spectroscopic maximum-power sweep");
  add_common(spectro, a);
  spectro->add_option("--tau-range", tau_range, "lo:hi:count[:log]");
  auto* spdc = app.add_subcommand("spdc", "joint spectral amplitude |phi|^2 grid");
  add_common(spdc, a);
  spdc->add_option("--half-width", half_width, "window half-width [eV] (default 4 sigma_p)");
  spdc->add_option("--grid", spdc_n, "grid points per axis");
  auto* oracle = app.add_subcommand("oracle-check", "cross-module invariant suite");
  add_common(oracle, a);

  CLI11_PARSE(app, argc, argv);

  try {
    if (populations->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      qhe::RunResult res = qhe::run_populations(l.sys, l.pump, opt);
      if (with_ode) {
        const qhe::RunResult ode = qhe::run_trajectory(l.sys, l.pump, opt);
        res.outputs.insert(res.outputs.end(), ode.outputs.begin(), ode.outputs.end());
        res.summary["ode"] = ode.summary;
      }
      qhe::write_manifest(opt.out_dir, "populations", l.resolved, res, opt);
    } else if (bath_fit->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      const qhe::RunResult res = qhe::run_bath_fit(l.sys, l.pump, opt);
      qhe::write_manifest(opt.out_dir, "bath-fit", l.resolved, res, opt);
    } else if (engine_sweep->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      qhe::RangeSpec taus = parse_range(tau_range);
      qhe::RangeSpec cps = parse_range(cp_range);
      if (!grid_spec.empty()) {
        int n = 0, m = 0;
        if (std::sscanf(grid_spec.c_str(), "%dx%d", &n, &m) != 2 || n < 1 || m < 1)
          throw qhe::ConfigError("--grid must be NxM");
        taus.count = n;
        cps.count = m;
      }
      qhe::Json cfg = l.resolved;
      cfg["tau_range"] = tau_range;
      cfg["cp_range"] = cp_range;
      const qhe::RunResult res = qhe::run_engine_sweep(l.sys, l.pump, taus, cps, opt);
      qhe::write_manifest(opt.out_dir, "engine-sweep", cfg, res, opt);
    } else if (bounds->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      qhe::DimensionlessSet base = qhe::reduce(l.sys, l.pump);
      if (ovr_lambda_prime > 0) base.lambda_prime = ovr_lambda_prime;
      if (ovr_u > 0) base.u = ovr_u;
      if (ovr_v > 0) base.v = ovr_v;
      if (ovr_alpha > 0) base.alpha = ovr_alpha;
      if (ovr_theta >= 0) base.theta = ovr_theta;
      qhe::Json cfg = l.resolved;
      cfg["tau"] = tau_list;
      cfg["dimensionless"] = {{"lambda_prime", base.lambda_prime}, {"u", base.u},
                              {"v", base.v},   {"alpha", base.alpha},
                              {"theta", base.theta}};
      const qhe::RunResult res = qhe::run_bounds(base, parse_list(tau_list), opt);
      qhe::write_manifest(opt.out_dir, "bounds", cfg, res, opt);
    } else if (spectro->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      qhe::Json cfg = l.resolved;
      cfg["tau_range"] = tau_range;
      const qhe::RunResult res = qhe::run_spectro(l.sys, l.pump, parse_range(tau_range), opt);
      qhe::write_manifest(opt.out_dir, "spectro", cfg, res, opt);
    } else if (spdc->parsed()) {
      const Loaded l = load(a);
      const qhe::RunOptions opt = run_options(a);
      qhe::JointAmplitude ja;
      ja.A0 = 1.0;
      ja.omega_p = l.pump.omega_p;
      ja.sigma = l.pump.sigma_p;
      ja.T_ent = l.pump.T_ent;
      const double hw = half_width > 0 ? half_width : 4.0 * ja.sigma;
      qhe::Json cfg = l.resolved;
      cfg["half_width_eV"] = hw;
      cfg["grid"] = spdc_n;
      const qhe::RunResult res = qhe::run_spdc(ja, hw, spdc_n, opt);
      qhe::write_manifest(opt.out_dir, "spdc", cfg, res, opt);
    } else if (oracle->parsed()) {
      const auto results = qhe::run_acceptance_suite();
      bool all_pass = true;
      for (const auto& r : results) {
        std::printf("%-4s %-38s %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 4;
    }
  } catch (const qhe::ConfigError& e) {
    std::cerr << qhe::Json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const qhe::Error& e) {
    std::cerr << qhe::Json{{"error", "numeric"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << qhe::Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
