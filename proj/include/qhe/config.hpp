#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qhe/units.hpp"

// Config ingestion. Every physical quantity in a config file is an object
// {"value": <number>, "unit": "<tag>"}; bare numbers are rejected for
// dimensioned fields. Occupations are dimensionless and given as numbers, or
// derived from the temperature block via {"mode": "high-T" | "bose"}.

namespace qhe {

using Json = nlohmann::json;

double quantity_eV(const Json& j, const std::string& field);
double quantity_time(const Json& j, const std::string& field);

SystemParams system_from_json(const Json& j);
PumpSpec pump_from_json(const Json& j, const SystemParams& sys);

Json system_to_json(const SystemParams& sys);
Json pump_to_json(const PumpSpec& pump);

struct RangeSpec {
  double min = 0.0, max = 0.0;
  int count = 1;
  bool log_spacing = false;
};

RangeSpec range_from_json(const Json& j);
std::vector<double> expand_range(const RangeSpec& r);

// FNV-1a over the canonical (sorted-key) serialization.
std::string config_hash(const Json& j);

Json load_json_file(const std::string& path);

// Built-in reference parameter sets used by the verification suite;
// "bath-match" is the population-matching set, "engine" the sweep set.
SystemParams preset_system(const std::string& name);
PumpSpec preset_pump(const std::string& name, PumpKind kind);

}  // namespace qhe
