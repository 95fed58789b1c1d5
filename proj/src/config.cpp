#include "qhe/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

namespace qhe {

namespace {

const Json& require(const Json& j, const std::string& field) {
  auto it = j.find(field);
  if (it == j.end()) throw ConfigError("missing config field: " + field);
  return *it;
}

}  // namespace

double quantity_eV(const Json& j, const std::string& field) {
  const Json& q = require(j, field);
  if (q.is_number())
    throw ConfigError("field '" + field + "' is a physical quantity and needs a unit tag");
  if (!q.is_object() || !q.contains("value") || !q.contains("unit"))
    throw ConfigError("field '" + field + "' must be {\"value\":..., \"unit\":...}");
  return to_internal_units(q["value"].get<double>(), parse_unit(q["unit"].get<std::string>()));
}

double quantity_time(const Json& j, const std::string& field) {
  const Json& q = require(j, field);
  if (!q.is_object() || !q.contains("value") || !q.contains("unit"))
    throw ConfigError("field '" + field + "' must be {\"value\":..., \"unit\":...}");
  return time_to_internal(q["value"].get<double>(), q["unit"].get<std::string>());
}

SystemParams system_from_json(const Json& j) {
  SystemParams s;
  const Json& lv = require(j, "levels");
  s.omega_g = quantity_eV(lv, "omega_g");
  s.omega_0 = quantity_eV(lv, "omega_0");
  s.omega_e = quantity_eV(lv, "omega_e");
  s.omega_ep = quantity_eV(lv, "omega_ep");
  s.omega_1 = quantity_eV(lv, "omega_1");
  s.omega_2 = quantity_eV(lv, "omega_2");

  const Json& rt = require(j, "rates");
  s.gamma_2 = quantity_eV(rt, "gamma_2");
  s.gamma_c = quantity_eV(rt, "gamma_c");
  s.gamma_e = rt.contains("gamma_e") ? quantity_eV(rt, "gamma_e") : 0.0;

  if (j.contains("temperatures")) {
    const Json& tp = j["temperatures"];
    if (tp.contains("T_2")) s.T_2 = quantity_eV(tp, "T_2");
    if (tp.contains("T_c")) s.T_c = quantity_eV(tp, "T_c");
  }

  const Json& oc = require(j, "occupations");
  if (oc.contains("mode")) {
    const std::string mode = oc["mode"].get<std::string>();
    if (s.T_2 <= 0 || s.T_c <= 0)
      throw ConfigError("occupation mode '" + mode + "' needs the temperatures block");
    if (mode == "high-T") {
      s.n_2 = s.T_2 / s.omega_21();
      s.n_c = s.T_c / s.omega_c();
    } else if (mode == "bose") {
      s.n_2 = 1.0 / std::expm1(s.omega_21() / s.T_2);
      s.n_c = 1.0 / std::expm1(s.omega_c() / s.T_c);
    } else {
      throw ConfigError("unknown occupation mode: " + mode);
    }
    s.n_e = s.n_2;
  } else {
    s.n_2 = require(oc, "n_2").get<double>();
    s.n_c = require(oc, "n_c").get<double>();
    s.n_e = oc.contains("n_e") ? oc["n_e"].get<double>() : 0.0;
  }
  s.validate();
  return s;
}

PumpSpec pump_from_json(const Json& j, const SystemParams& sys) {
  PumpSpec p;
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "classical") p.kind = PumpKind::ClassicalTwoPhoton;
  else if (kind == "entangled") p.kind = PumpKind::EntangledTwoPhoton;
  else throw ConfigError("pump kind must be 'classical' or 'entangled'");

  p.omega_p = quantity_eV(j, "omega_p");
  p.sigma_p = quantity_eV(j, "sigma_p");
  if (p.kind == PumpKind::ClassicalTwoPhoton) {
    p.Omega_p = quantity_eV(j, "Omega_p");
  } else {
    p.Omega_1p = quantity_eV(j, "Omega_1p");
    p.Omega_2p = quantity_eV(j, "Omega_2p");
    p.T_ent = j.contains("T_ent") ? quantity_time(j, "T_ent") : 0.0;
  }
  p.lambda = j.contains("lambda") ? quantity_eV(j, "lambda") : 0.0;
  p.sigma_pr = j.contains("sigma_pr") ? quantity_eV(j, "sigma_pr") : 0.0;
  p.validate(sys);
  return p;
}

namespace {

Json ev(double v) { return Json{{"value", v}, {"unit", "eV"}}; }

}  // namespace

Json system_to_json(const SystemParams& s) {
  return Json{
      {"levels",
       {{"omega_g", ev(s.omega_g)},
        {"omega_0", ev(s.omega_0)},
        {"omega_e", ev(s.omega_e)},
        {"omega_ep", ev(s.omega_ep)},
        {"omega_1", ev(s.omega_1)},
        {"omega_2", ev(s.omega_2)}}},
      {"rates", {{"gamma_2", ev(s.gamma_2)}, {"gamma_c", ev(s.gamma_c)}, {"gamma_e", ev(s.gamma_e)}}},
      {"occupations", {{"n_2", s.n_2}, {"n_c", s.n_c}, {"n_e", s.n_e}}},
      {"temperatures", {{"T_2", ev(s.T_2)}, {"T_c", ev(s.T_c)}}},
  };
}

Json pump_to_json(const PumpSpec& p) {
  Json j{{"kind", p.kind == PumpKind::ClassicalTwoPhoton ? "classical" : "entangled"},
         {"omega_p", ev(p.omega_p)},
         {"sigma_p", ev(p.sigma_p)},
         {"lambda", ev(p.lambda)},
         {"sigma_pr", ev(p.sigma_pr)}};
  if (p.kind == PumpKind::ClassicalTwoPhoton) {
    j["Omega_p"] = ev(p.Omega_p);
  } else {
    j["Omega_1p"] = ev(p.Omega_1p);
    j["Omega_2p"] = ev(p.Omega_2p);
    j["T_ent"] = Json{{"value", p.T_ent}, {"unit", "eV^-1"}};
  }
  return j;
}

RangeSpec range_from_json(const Json& j) {
  RangeSpec r;
  if (j.is_number()) {
    r.min = r.max = j.get<double>();
    r.count = 1;
    return r;
  }
  r.min = require(j, "min").get<double>();
  r.max = require(j, "max").get<double>();
  r.count = require(j, "count").get<int>();
  if (r.count < 1) throw ConfigError("range count must be >= 1");
  if (r.count > 1 && r.min >= r.max) throw ConfigError("range needs min < max");
  if (j.contains("spacing")) {
    const std::string s = j["spacing"].get<std::string>();
    if (s == "log") r.log_spacing = true;
    else if (s != "linear") throw ConfigError("spacing must be 'linear' or 'log'");
  }
  return r;
}

std::vector<double> expand_range(const RangeSpec& r) {
  std::vector<double> out(r.count);
  if (r.count == 1) {
    out[0] = r.min;
    return out;
  }
  if (r.log_spacing) {
    if (r.min <= 0) throw ConfigError("log range needs min > 0");
    const double l0 = std::log(r.min), l1 = std::log(r.max);
    for (int i = 0; i < r.count; ++i)
      out[i] = std::exp(l0 + (l1 - l0) * i / (r.count - 1));
  } else {
    for (int i = 0; i < r.count; ++i)
      out[i] = r.min + (r.max - r.min) * i / (r.count - 1);
  }
  return out;
}

std::string config_hash(const Json& j) {
  const std::string s = j.dump();  // object keys are sorted by nlohmann
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return j;
}

SystemParams preset_system(const std::string& name) {
  SystemParams s;
  if (name == "bath-match") {
    // Population-matching reference set: n_2 = n_c = 100,
    // Gamma_2 = Gamma_c = 0.002 ps^-1, Omega_p = 0.0078 eV, sigma_p = 30.34 cm^-1,
    // delta = 0.005 eV (inside the sigma_p > delta/2 window). Levels place the
    // pump midway between e and e' with two-photon resonance at 1.3 eV.
    s.omega_g = 0.0;
    s.omega_0 = 0.012;
    s.omega_e = 0.6475;
    s.omega_ep = 0.6525;
    s.omega_1 = 1.276;
    s.omega_2 = 1.3;
    s.gamma_2 = to_internal_units(0.002, Unit::InversePs);
    s.gamma_c = to_internal_units(0.002, Unit::InversePs);
    s.gamma_e = s.gamma_2;
    s.n_2 = 100.0;
    s.n_c = 100.0;
    s.n_e = 100.0;
    s.T_2 = to_internal_units(300.0, Unit::Kelvin);
    s.T_c = s.T_2;
  } else if (name == "engine") {
    // Engine/spectroscopy set: harmonic ladder (omega_2e' = omega_e'g) with
    // delta = Delta = 3e-5 eV, omega_c = 0.012 eV, omega_21 = 0.024 eV.
    // Occupations in the high-temperature limit at 300 K.
    s.omega_g = 0.0;
    s.omega_0 = 0.012;
    s.omega_2 = 1.30003;
    s.omega_ep = s.omega_2 / 2.0;
    s.omega_e = s.omega_ep - 3e-5;
    s.omega_1 = s.omega_2 - 0.024;
    s.gamma_2 = to_internal_units(0.71, Unit::InversePs);
    s.gamma_c = to_internal_units(0.025, Unit::InversePs);
    s.gamma_e = s.gamma_2;
    s.T_2 = to_internal_units(300.0, Unit::Kelvin);
    s.T_c = s.T_2;
    s.n_2 = s.T_2 / s.omega_21();
    s.n_c = s.T_c / s.omega_c();
    s.n_e = s.n_2;
  } else {
    throw ConfigError("unknown preset: " + name);
  }
  s.validate();
  return s;
}

PumpSpec preset_pump(const std::string& name, PumpKind kind) {
  PumpSpec p;
  p.kind = kind;
  if (name == "bath-match") {
    p.omega_p = 1.3;
    p.sigma_p = to_internal_units(30.34, Unit::InverseCm);
    if (kind == PumpKind::ClassicalTwoPhoton) {
      p.Omega_p = 0.0078;
    } else {
      p.Omega_1p = p.Omega_2p = 0.0078;
    }
    p.lambda = 0.0;
    p.sigma_pr = to_internal_units(100.0, Unit::InverseCm);
  } else if (name == "engine") {
    p.omega_p = 1.3;
    p.sigma_p = to_internal_units(200.0, Unit::InverseCm);
    if (kind == PumpKind::ClassicalTwoPhoton) {
      p.Omega_p = 0.023;
    } else {
      p.Omega_1p = p.Omega_2p = 0.023;
    }
    p.lambda = 0.1;
    p.sigma_pr = to_internal_units(100.0, Unit::InverseCm);
  } else {
    throw ConfigError("unknown preset: " + name);
  }
  return p;
}

}  // namespace qhe
