#pragma once

#include <atomic>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "qhe/config.hpp"
#include "qhe/spdc.hpp"

// Sweep orchestration and deterministic artifact emission. Identical configs
// produce byte-identical CSV files: fixed 17-significant-digit formatting,
// '\n' line endings, and index-merged parallel evaluation.

namespace qhe {

std::string format_g17(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const Table& table);
void write_json_table(const std::filesystem::path& path, const Table& table);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  int jobs = 0;          // 0 = hardware concurrency
  bool json_format = false;
  std::string figure;    // provenance tag recorded in the manifest
};

// Evaluates fn(i) for i in [0, n) across `jobs` threads; results land at
// their index so the merge order never depends on scheduling.
template <typename Fn>
void parallel_index(int n, int jobs, Fn&& fn);

struct RunResult {
  std::vector<std::filesystem::path> outputs;
  Json summary;  // scenario-specific summary embedded in the manifest
};

// Scenario drivers. Each writes its artifact files plus a manifest JSON
// recording the full resolved config, its hash, and the tool version.
RunResult run_populations(const SystemParams& sys, const PumpSpec& pump,
                          const RunOptions& opt);
RunResult run_bath_fit(const SystemParams& sys, const PumpSpec& pump, const RunOptions& opt);
RunResult run_engine_sweep(const SystemParams& sys, const PumpSpec& pump,
                           const RangeSpec& tau_range, const RangeSpec& cp_range,
                           const RunOptions& opt);
RunResult run_bounds(const DimensionlessSet& base, const std::vector<double>& taus,
                     const RunOptions& opt);
RunResult run_spectro(const SystemParams& sys, const PumpSpec& pump,
                      const RangeSpec& tau_range, const RunOptions& opt);
RunResult run_spdc(const JointAmplitude& ja, double half_width, int n,
                   const RunOptions& opt);

// Density-matrix trajectory of the impulsively prepared system (probe off,
// consistent dissipators), exported as
// t,rho_gg,rho_00,rho_11,rho_22,re_rho_01,im_rho_01.
RunResult run_trajectory(const SystemParams& sys, const PumpSpec& pump,
                         const RunOptions& opt, int n_samples = 200);

void write_manifest(const std::filesystem::path& out_dir, const std::string& scenario,
                    const Json& resolved_config, const RunResult& result,
                    const RunOptions& opt);

inline constexpr const char* kToolVersion = "0.1.0";

// --- implementation ---

template <typename Fn>
void parallel_index(int n, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(std::min(jobs, n)));
  for (int w = 0; w < std::min(jobs, n); ++w) {
    pool.emplace_back([&next, n, &fn] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qhe
