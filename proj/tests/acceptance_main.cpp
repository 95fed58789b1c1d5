#include <cstdio>
#include <cstring>
#include <fstream>

#include "qhe/oracle.hpp"

// Acceptance gate: one pass/fail line per criterion. With a numeric argument
// runs only that criterion (used by the per-criterion ctest entries). The
// flagged-discrepancy records of criterion 4 are written alongside as JSON.

int main(int argc, char** argv) {
  using qhe::CheckResult;
  CheckResult (*const checks[])() = {
      qhe::check_bath_asymptote_identity, qhe::check_ode_vs_closed_form,
      qhe::check_table_closure,           qhe::check_maxima_stationarity,
      qhe::check_qhe_crossover,           qhe::check_spectro_crossover,
      qhe::check_intensity_scaling,       qhe::check_property_suite,
  };
  const int n = static_cast<int>(sizeof(checks) / sizeof(checks[0]));

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > n) {
      std::fprintf(stderr, "usage: %s [criterion 1..%d]\n", argv[0], n);
      return 2;
    }
  }

  bool all_pass = true;
  for (int i = 1; i <= n; ++i) {
    if (only && i != only) continue;
    const CheckResult r = checks[i - 1]();
    std::printf("%s criterion %d %-38s %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", i,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    if (!r.data.is_null() && !r.data.empty()) {
      const std::string path = r.name + "_report.json";
      std::ofstream out(path);
      out << r.data.dump(2) << "\n";
      std::printf("     criterion %d per-case records written to %s\n", i, path.c_str());
    }
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
