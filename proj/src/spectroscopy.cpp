#include "qhe/spectroscopy.hpp"

#include <cmath>

namespace qhe {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
double pow4(double x) { return x * x * x * x; }
double pow8(double x) { return pow4(x) * pow4(x); }
}  // namespace

std::complex<double> coherence_classical(const SystemParams& sys, const PumpSpec& pump) {
  if (pump.kind != PumpKind::ClassicalTwoPhoton)
    throw DomainError("coherence_classical requires a classical pump");
  if (pump.sigma_pr <= 0) throw DomainError("coherence_classical: sigma_pr must be positive");
  const double d = sys.delta();
  const double D = d * d + 4.0 * pump.sigma_p * pump.sigma_p;
  const double rates1 = sys.gamma_c * sys.n_c + sys.gamma_2 * sys.n_2;
  const double rates2 = 5.0 * sys.gamma_2 * sys.n_2 + sys.gamma_c * sys.n_c;
  if (rates1 == 0.0 || rates2 == 0.0)
    throw DomainError("coherence_classical: degenerate rates (zero denominator)");
  const double Om4 = pump.amplitude2() * pump.amplitude2();
  return -32.0 * I * sys.gamma_2 * pump.lambda * sys.n_2 * pow4(d) * Om4 /
         (pow4(D) * pump.sigma_pr * rates1 * rates2);
}

std::complex<double> coherence_entangled(const SystemParams& sys, const PumpSpec& pump) {
  if (pump.kind != PumpKind::EntangledTwoPhoton)
    throw DomainError("coherence_entangled requires an entangled pump");
  if (pump.sigma_pr <= 0) throw DomainError("coherence_entangled: sigma_pr must be positive");
  const double d = sys.delta();
  const double Delta = pump.detuning_Delta(sys);
  const double Dt = Delta * Delta + pump.sigma_p * pump.sigma_p;
  const double rates1 = sys.gamma_c * sys.n_c + sys.gamma_2 * sys.n_2;
  const double rates2 = 5.0 * sys.gamma_2 * sys.n_2 + sys.gamma_c * sys.n_c;
  if (rates1 == 0.0 || rates2 == 0.0)
    throw DomainError("coherence_entangled: degenerate rates (zero denominator)");
  const double N2 = pump.amplitude2() * pump.amplitude2();
  const double theta = theta_factor(sys, pump);
  return -2.0 * I * sys.gamma_2 * pump.lambda * sys.n_2 * pow4(d) * N2 * theta /
         (pow4(Dt) * pump.sigma_pr * rates1 * rates2);
}

double spectro_power(PumpKind kind, const DimensionlessSet& d, double sigma_pr,
                     QuantumSpectroForm form) {
  if (sigma_pr <= 0) throw DomainError("spectro_power: sigma_pr must be positive");
  const double c21 = d.c_21;
  if (c21 <= 0.0 || c21 >= d.c_p - 1.0)
    throw DomainError("spectro_power: c_21 outside (0, c_p - 1)");
  const double au = d.alpha * d.u;
  const double profile = d.alpha * c21 * d.u * d.u * (d.c_p - c21 - 1.0) * d.lambda_prime /
                         ((c21 + au) * (c21 + 5.0 * au));
  if (kind == PumpKind::ClassicalTwoPhoton)
    return 4.0 * profile / (pow8(d.tau) * sigma_pr * pow8(d.sigma_p_prime));
  if (form == QuantumSpectroForm::RatioConsistent)
    return 4.0 * profile * d.theta / (pow4(d.tau) * sigma_pr * pow4(d.sigma_p_prime));
  const double t2 = d.tau * d.tau, s2 = d.sigma_p_prime * d.sigma_p_prime;
  return profile * d.theta / (2.0 * t2 * sigma_pr * s2);
}

SpectroMax spectro_max_power(PumpKind kind, const DimensionlessSet& d, double sigma_pr,
                             double rel_tol, QuantumSpectroForm form) {
  if (d.c_p <= 1.0) throw DomainError("spectro_max_power: need c_p > 1");
  const double au = d.alpha * d.u;
  const double cpp = d.c_p - 1.0;

  // stationary point of c(cpp - c) / ((c + au)(c + 5 au)):
  // c* = au (C - 5 au) / (cpp + 6 au), C = sqrt(5 (cpp + au)(cpp + 5 au))
  const double C = std::sqrt(5.0 * (cpp + au) * (cpp + 5.0 * au));
  const double c_star = au * (C - 5.0 * au) / (cpp + 6.0 * au);

  auto eval = [&](double c21) {
    DimensionlessSet dd = d;
    dd.c_21 = c21;
    return spectro_power(kind, dd, sigma_pr, form);
  };

  SpectroMax r;
  r.c21_star = c_star;
  r.p_max = eval(c_star);

  const double step = std::min(1e-5 * std::max(1.0, c_star),
                               0.45 * std::min(c_star, cpp - c_star));
  r.stationarity = std::abs((eval(c_star + step) - eval(c_star - step)) / (2.0 * step)) /
                   std::abs(r.p_max);

  if (kind == PumpKind::ClassicalTwoPhoton) {
    r.p_max_analytic = d.u * d.lambda_prime * (3.0 * d.c_p + 5.0 * au - 3.0 - C) /
                       (2.0 * pow8(d.tau) * sigma_pr * pow8(d.sigma_p_prime));
  } else {
    // the literal quantum form keeps c_21 free; evaluate it at the maximizer
    r.p_max_analytic = eval(c_star);
  }
  r.rel_disagreement =
      std::abs(r.p_max - r.p_max_analytic) / std::max(std::abs(r.p_max_analytic), 1e-300);
  r.flagged = r.rel_disagreement > rel_tol || r.stationarity > rel_tol;
  return r;
}

double spectro_ratio(const DimensionlessSet& d) {
  return pow4(d.tau) * pow4(d.sigma_p_prime) * d.theta;
}

}  // namespace qhe
