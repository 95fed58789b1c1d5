#include "qhe/lindblad.hpp"

#include <array>
#include <cmath>

namespace qhe {

using namespace level;
using cplx = std::complex<double>;
namespace {
constexpr cplx I{0.0, 1.0};
}

EomOptions cw_drive(const SystemParams& sys, const PumpSpec& pump) {
  EomOptions opt;
  const double amp = std::sqrt(pump.amplitude2());
  opt.Omega_1 = amp;
  opt.Omega_2 = amp;
  opt.lambda = pump.lambda;
  const double omega0 = pump.omega_p / 2.0;  // per-photon center
  opt.det_1 = (sys.omega_e - sys.omega_g) - omega0;
  opt.det_2 = sys.omega_2e() - omega0;
  opt.det_pr = 0.0;
  return opt;
}

DensityMatrix eom_rhs(const DensityMatrix& rho, const SystemParams& sys,
                      const EomOptions& opt) {
  const double G2 = sys.gamma_2, n2 = sys.n_2;
  const double Gc = sys.gamma_c, nc = sys.n_c;
  const double Ge = opt.ee_prime_channel ? sys.gamma_e : 0.0;
  const double ne = sys.n_e;
  const double O1 = opt.Omega_1, O2 = opt.Omega_2, lam = opt.lambda;

  DensityMatrix d = DensityMatrix::Zero();

  // populations
  d(g, g) = I * O1 * (rho(g, e) - rho(e, g)) + Gc * (nc + 1) * rho(zero, zero) -
            Gc * nc * rho(g, g);
  if (opt.literal_terms) {
    // uncorrected lines: rho_ee couples rho_g2, rho_11 mixes the 0<->g channel
    d(e, e) = -I * O1 * (rho(g, e) - rho(e, g)) + I * O2 * (rho(g, two) - rho(two, e));
    d(one, one) = -I * lam * (rho(zero, one) - rho(one, zero)) -
                  G2 * (n2 + 1) * rho(zero, zero) + Gc * nc * rho(g, g);
  } else {
    d(e, e) = -I * O1 * (rho(g, e) - rho(e, g)) + I * O2 * (rho(e, two) - rho(two, e));
    d(one, one) = -I * lam * (rho(zero, one) - rho(one, zero)) +
                  G2 * (n2 + 1) * rho(two, two) - G2 * n2 * rho(one, one);
  }
  d(two, two) = -I * O2 * (rho(e, two) - rho(two, e)) - G2 * (n2 + 1) * rho(two, two) +
                G2 * n2 * rho(one, one);
  d(zero, zero) = I * lam * (rho(zero, one) - rho(one, zero)) + Gc * nc * rho(g, g) -
                  Gc * (nc + 1) * rho(zero, zero);
  d(e, e) += Ge * (ne + 1) * rho(ep, ep) - Ge * ne * rho(e, e);
  d(ep, ep) = -Ge * (ne + 1) * rho(ep, ep) + Ge * ne * rho(e, e);

  // coherences
  d(two, e) = I * O2 * (rho(two, two) - rho(e, e)) + I * O1 * rho(two, g) -
              (G2 * (n2 + 1) / 2 + I * opt.det_2) * rho(two, e);
  if (opt.literal_terms) {
    d(e, g) = I * O1 * (rho(e, e) - rho(g, g)) - I * O1 * rho(two, g) -
              (Gc * nc / 2 + I * opt.det_1) * rho(e, g);
  } else {
    d(e, g) = I * O1 * (rho(e, e) - rho(g, g)) - I * O2 * rho(two, g) -
              (Gc * nc / 2 + I * opt.det_1) * rho(e, g);
  }
  d(two, g) = I * O1 * rho(two, e) - I * O2 * rho(e, g) -
              (G2 * (n2 + 1) / 2 + Gc * nc / 2 + I * (opt.det_1 + opt.det_2)) * rho(two, g);
  d(one, zero) = I * lam * (rho(one, one) - rho(zero, zero)) -
                 (G2 * n2 / 2 + Gc * (nc + 1) / 2 + I * opt.det_pr) * rho(one, zero);

  d(e, two) = std::conj(d(two, e));
  d(g, e) = std::conj(d(e, g));
  d(g, two) = std::conj(d(two, g));
  d(zero, one) = std::conj(d(one, zero));
  return d;
}

void check_density_matrix(const DensityMatrix& rho, double tol) {
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw NumericError("density matrix trace deviates from 1");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw NumericError("density matrix not Hermitian");
  for (int i = 0; i < 6; ++i) {
    const double p = rho(i, i).real();
    if (p < -tol || p > 1.0 + tol) throw NumericError("population outside [0,1]");
  }
}

namespace {

DensityMatrix rk4_step(const DensityMatrix& rho, double h, const SystemParams& sys,
                       const EomOptions& opt) {
  const DensityMatrix k1 = eom_rhs(rho, sys, opt);
  const DensityMatrix k2 = eom_rhs(rho + 0.5 * h * k1, sys, opt);
  const DensityMatrix k3 = eom_rhs(rho + 0.5 * h * k2, sys, opt);
  const DensityMatrix k4 = eom_rhs(rho + h * k3, sys, opt);
  DensityMatrix out = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  out = 0.5 * (out + out.adjoint().eval());
  return out;
}

}  // namespace

Trajectory integrate(const DensityMatrix& rho0, const SystemParams& sys,
                     const EomOptions& opt, double t_end, double dt0, int n_samples,
                     double local_tol) {
  if (t_end <= 0 || dt0 <= 0) throw DomainError("integrate: t_end and dt must be positive");
  Trajectory traj;
  traj.t.reserve(n_samples + 1);
  traj.rho.reserve(n_samples + 1);

  const double sample_dt = t_end / n_samples;
  double next_sample = 0.0;
  double t = 0.0, h = dt0;
  DensityMatrix rho = rho0;
  traj.t.push_back(0.0);
  traj.rho.push_back(rho);
  next_sample += sample_dt;

  const double h_min = t_end * 1e-12;
  while (t < t_end) {
    double step = std::min(h, next_sample - t);
    if (step <= 0) step = h_min;
    // step-halving error control on the full step
    for (;;) {
      const DensityMatrix full = rk4_step(rho, step, sys, opt);
      const DensityMatrix half = rk4_step(rk4_step(rho, step / 2, sys, opt), step / 2, sys, opt);
      const double err = (full - half).cwiseAbs().maxCoeff() / 15.0;
      if (err <= local_tol || step <= h_min) {
        rho = half;
        t += step;
        if (err <= local_tol / 64.0) h = std::min(step * 2.0, t_end);
        else h = step;
        break;
      }
      step /= 2.0;
      if (step < h_min)
        throw NumericError("integrate: step size underflow at t = " + std::to_string(t));
    }
    traj.max_trace_drift = std::max(traj.max_trace_drift, std::abs(rho.trace().real() - 1.0));
    if (t >= next_sample - 1e-12 * t_end) {
      traj.t.push_back(t);
      traj.rho.push_back(rho);
      next_sample += sample_dt;
    }
  }
  return traj;
}

void TransportMatrix::validate(double tol) const {
  const auto& k = kappa;
  if (k.rows() != k.cols()) throw DomainError("transport matrix must be square");
  for (int j = 0; j < k.cols(); ++j) {
    if (std::abs(k.col(j).sum()) > tol)
      throw DomainError("transport matrix column does not sum to zero");
    for (int i = 0; i < k.rows(); ++i) {
      if (i == j && k(i, j) < -tol) throw DomainError("negative diagonal transport rate");
      if (i != j && k(i, j) > tol) throw DomainError("positive off-diagonal transport rate");
    }
  }
}

TransportMatrix transport_from_params(const SystemParams& sys, bool ee_prime_channel) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(6, 6);
  auto channel = [&k](int lower, int upper, double gamma, double n) {
    // upper -> lower at gamma(n+1), lower -> upper at gamma n
    k(upper, upper) += gamma * (n + 1);
    k(lower, upper) -= gamma * (n + 1);
    k(lower, lower) += gamma * n;
    k(upper, lower) -= gamma * n;
  };
  channel(one, two, sys.gamma_2, sys.n_2);
  channel(g, zero, sys.gamma_c, sys.n_c);
  if (ee_prime_channel) channel(e, ep, sys.gamma_e, sys.n_e);
  return TransportMatrix{std::move(k)};
}

double population_green_closed(GreenPair pair, double t, const SystemParams& sys) {
  if (t < 0) throw DomainError("Green function requested at negative time");
  double n = 0, gamma = 0;
  bool excited_start = false;  // transfer downhill picks up the (n+1) weight
  switch (pair) {
    case GreenPair::ZeroG:  // g -> 0, uphill
      n = sys.n_c;
      gamma = sys.gamma_c;
      break;
    case GreenPair::EEPrime:  // e' -> e, downhill (e' sits above e)
      n = sys.n_e;
      gamma = sys.gamma_e;
      excited_start = true;
      break;
    case GreenPair::OneTwo:  // 2 -> 1, downhill
      n = sys.n_2;
      gamma = sys.gamma_2;
      excited_start = true;
      break;
  }
  const double w = 1.0 - std::exp(-t * (1.0 + 2.0 * n) * gamma);
  return excited_start ? (1.0 + n) * w / (1.0 + 2.0 * n) : n * w / (1.0 + 2.0 * n);
}

Eigen::MatrixXd population_green_eigen(const TransportMatrix& tm, double t) {
  // rho(t) = exp(-kappa t) rho(0): spectral form xi_R D^-1 exp(-lambda t) xi_L
  Eigen::EigenSolver<Eigen::MatrixXd> es(tm.kappa);
  const Eigen::MatrixXcd V = es.eigenvectors();
  const Eigen::VectorXcd lam = es.eigenvalues();
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(lam.size(), lam.size());
  for (int i = 0; i < lam.size(); ++i) D(i, i) = std::exp(-lam(i) * t);
  const Eigen::MatrixXcd G = V * D * V.inverse();
  return G.real();
}

namespace {

// Component set the equation of motion actually evolves.
constexpr std::array<std::pair<int, int>, 14> kEvolved = {{
    {g, g}, {zero, zero}, {e, e}, {ep, ep}, {one, one}, {two, two},
    {two, e}, {e, two}, {e, g}, {g, e}, {two, g}, {g, two}, {one, zero}, {zero, one},
}};

}  // namespace

DensityMatrix steady_state(const SystemParams& sys, const EomOptions& opt,
                           double residual_tol) {
  constexpr int n = static_cast<int>(kEvolved.size());
  Eigen::MatrixXcd L(n, n);
  for (int c = 0; c < n; ++c) {
    DensityMatrix basis = DensityMatrix::Zero();
    basis(kEvolved[c].first, kEvolved[c].second) = 1.0;
    const DensityMatrix d = eom_rhs(basis, sys, opt);
    for (int r = 0; r < n; ++r) L(r, c) = d(kEvolved[r].first, kEvolved[r].second);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv(0) > 0 ? sv(0) : 1.0;
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= 1e-12 * scale) ++null_dim;
  if (null_dim == 0)
    throw NumericError("steady_state: no null vector found (no dissipative channel?)");
  if (null_dim > 1)
    throw NumericError("steady_state: degenerate null space (dimension " +
                       std::to_string(null_dim) + "); steady state not unique");

  Eigen::VectorXcd x = svd.matrixV().col(n - 1);
  DensityMatrix rho = DensityMatrix::Zero();
  for (int c = 0; c < n; ++c) rho(kEvolved[c].first, kEvolved[c].second) = x(c);
  const cplx tr = rho.trace();
  if (std::abs(tr) < 1e-12)
    throw NumericError("steady_state: null vector is traceless");
  rho /= tr;
  rho = 0.5 * (rho + rho.adjoint().eval());

  // residual check in the evolved components
  const DensityMatrix d = eom_rhs(rho, sys, opt);
  double res = 0.0;
  for (const auto& [i, j] : kEvolved) res = std::max(res, std::abs(d(i, j)));
  if (res > residual_tol)
    throw NumericError("steady_state: residual " + std::to_string(res) + " above tolerance");
  return rho;
}

Eigen::Matrix3cd engine_steady_state(const ThreeLevelEngine& eng) {
  // levels {g, 0, 1} = indices 0,1,2
  using M3 = Eigen::Matrix3cd;
  auto rhs3 = [&eng](const M3& r) {
    M3 d = M3::Zero();
    M3 H = M3::Zero();
    H(2, 1) = eng.lambda;
    H(1, 2) = eng.lambda;
    H(2, 2) = eng.det_pr;
    d = -I * (H * r - r * H);
    auto channel = [&d, &r](int lower, int upper, double gamma, double n) {
      auto add = [&d, &r](int a, int b, double rate) {  // L = |a><b|
        M3 Lop = M3::Zero();
        Lop(a, b) = 1.0;
        d += rate * (Lop * r * Lop.adjoint() -
                     0.5 * (Lop.adjoint() * Lop * r + r * Lop.adjoint() * Lop));
      };
      add(lower, upper, gamma * (n + 1));
      add(upper, lower, gamma * n);
    };
    channel(0, 2, eng.gamma_h, eng.n_h);
    channel(0, 1, eng.gamma_c, eng.n_c);
    return d;
  };
  Eigen::MatrixXcd L(9, 9);
  for (int c = 0; c < 9; ++c) {
    M3 basis = M3::Zero();
    basis(c / 3, c % 3) = 1.0;
    const M3 d = rhs3(basis);
    for (int r = 0; r < 9; ++r) L(r, c) = d(r / 3, r % 3);
  }
  Eigen::MatrixXcd A(10, 9);
  A.topRows(9) = L;
  for (int c = 0; c < 9; ++c) A(9, c) = (c / 3 == c % 3) ? 1.0 : 0.0;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(10);
  b(9) = 1.0;
  const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
  M3 rho;
  for (int c = 0; c < 9; ++c) rho(c / 3, c % 3) = x(c);
  return 0.5 * (rho + rho.adjoint().eval());
}

double engine_power_from_state(const ThreeLevelEngine& eng, const Eigen::Matrix3cd& rho,
                               double omega_c, double omega_h) {
  const cplx j = I * (rho(1, 2) - rho(2, 1));  // i (rho_01 - rho_10)
  return std::abs(eng.lambda * (omega_c - omega_h) * j.real());
}

}  // namespace qhe
