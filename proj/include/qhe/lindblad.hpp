#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "qhe/units.hpp"

// Numerical oracle for the closed forms: the six-level density-matrix
// equation of motion, population Green's functions, and steady states.
//
// Level order everywhere: {g, 0, e, e', 1, 2} = indices 0..5.

namespace qhe {

using DensityMatrix = Eigen::Matrix<std::complex<double>, 6, 6>;

namespace level {
inline constexpr int g = 0;
inline constexpr int zero = 1;
inline constexpr int e = 2;
inline constexpr int ep = 3;
inline constexpr int one = 4;
inline constexpr int two = 5;
}  // namespace level

// Drive terms and mode switches for the equation of motion.
struct EomOptions {
  double Omega_1 = 0.0;  // CW Rabi coupling on g-e
  double Omega_2 = 0.0;  // CW Rabi coupling on e-2
  double lambda = 0.0;   // probe Rabi coupling on 1-0
  double det_1 = 0.0;    // omega_eg - nu_1
  double det_2 = 0.0;    // omega_2e - nu_2
  double det_pr = 0.0;   // omega_10 - nu_pr
  // Literal mode keeps the uncorrected rho_11 line (-Gamma_2(n_2+1) rho_00
  // + Gamma_c n_c rho_gg) and the uncorrected rho_ee / rho_eg drive couplings.
  // Consistent mode (default) uses the rate structure of the transport
  // equations for the 1<->2 dissipator and population conservation.
  bool literal_terms = false;
  bool ee_prime_channel = false;  // optional e'<->e dissipator, off by default
};

// Maps a pump onto CW drive terms: both photons at omega_p/2, probe resonant.
EomOptions cw_drive(const SystemParams& sys, const PumpSpec& pump);

// d(rho)/dt of the six-level equation of motion. Pure function of rho.
DensityMatrix eom_rhs(const DensityMatrix& rho, const SystemParams& sys,
                      const EomOptions& opt);

void check_density_matrix(const DensityMatrix& rho, double tol = 1e-9);

struct Trajectory {
  std::vector<double> t;
  std::vector<DensityMatrix> rho;
  double max_trace_drift = 0.0;
};

// Fixed-order RK4 with step-halving error control. Hermiticity is restored by
// symmetrization after every step; the trace is monitored, not renormalized.
// Throws NumericError if the step size underflows.
Trajectory integrate(const DensityMatrix& rho0, const SystemParams& sys,
                     const EomOptions& opt, double t_end, double dt0,
                     int n_samples = 64, double local_tol = 1e-10);

// Population transport matrix kappa over {g,0,e,e',1,2}: d(rho_ii)/dt =
// -sum_j kappa_ij rho_jj. Columns sum to zero; diagonal >= 0; off-diagonal <= 0.
struct TransportMatrix {
  Eigen::MatrixXd kappa;
  void validate(double tol = 1e-12) const;
};

TransportMatrix transport_from_params(const SystemParams& sys, bool ee_prime_channel = true);

enum class GreenPair { ZeroG, EEPrime, OneTwo };

// Closed forms: G_00,gg, G_ee,e'e', G_11,22 (single-channel saturation curves).
double population_green_closed(GreenPair pair, double t, const SystemParams& sys);

// Generic eigen-decomposition path: G(t) = exp(-kappa t), any TransportMatrix.
Eigen::MatrixXd population_green_eigen(const TransportMatrix& tm, double t);

// Strict steady state of the six-level generator restricted to the components
// the equation of motion evolves; solved by null-space extraction with the
// trace constraint. Throws NumericError when the null space is degenerate.
// Note: with any drive on, this equation set conserves a second linear
// functional (a combination of Re rho_2e, Re rho_eg, Im rho_2g) besides the
// trace, so its strict null space is two-dimensional and this routine reports
// the degeneracy. The physically reachable state from coherence-free initial
// data is obtained with integrate(); the three-level engine solver below has
// a clean unique null space.
DensityMatrix steady_state(const SystemParams& sys, const EomOptions& opt,
                           double residual_tol = 1e-10);

// Three-level engine {g, 0, 1} with hot bath on g<->1, cold bath on g<->0 and
// a probe on 1<->0; textbook Lindblad dissipators. Used to cross-check the
// closed-form engine observables.
struct ThreeLevelEngine {
  double n_h = 0.0, gamma_h = 0.0;
  double n_c = 0.0, gamma_c = 0.0;
  double lambda = 0.0;
  double det_pr = 0.0;
};

Eigen::Matrix3cd engine_steady_state(const ThreeLevelEngine& eng);

// |P| from P = i lambda (omega_c - omega_h)(rho_01 - rho_10) on a steady state.
double engine_power_from_state(const ThreeLevelEngine& eng, const Eigen::Matrix3cd& rho,
                               double omega_c, double omega_h);

}  // namespace qhe
