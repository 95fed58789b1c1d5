#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qhe/units.hpp"

// Cross-module verification suite: each check pits an independent numerical
// route (ODE integration, grid maximization, eigen decomposition, random
// sweeps) against the closed forms and reports a measured residual.

namespace qhe {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // measured residuals / diagnostics
  double seconds = 0.0;
  nlohmann::json data;  // per-case records (flagged-discrepancy reports etc.)
};

// The eight acceptance checks, in order. Deterministic (fixed RNG seeds).
std::vector<CheckResult> run_acceptance_suite();

CheckResult check_bath_asymptote_identity();   // 1
CheckResult check_ode_vs_closed_form();        // 2
CheckResult check_table_closure();             // 3
CheckResult check_maxima_stationarity();       // 4
CheckResult check_qhe_crossover();             // 5
CheckResult check_spectro_crossover();         // 6
CheckResult check_intensity_scaling();         // 7
CheckResult check_property_suite();            // 8

}  // namespace qhe
