#include "qhe/units.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qhe {

double to_internal_units(double value, Unit unit) {
  if (!std::isfinite(value)) throw ConfigError("non-finite quantity in unit conversion");
  switch (unit) {
    case Unit::eV:
      return value;
    case Unit::InverseCm:
      return value * kEvPerInverseCm;
    case Unit::InversePs:
      return value * kEvPerInversePs;
    case Unit::Kelvin:
      return value * kEvPerKelvin;
  }
  throw ConfigError("unknown unit tag");
}

Unit parse_unit(std::string_view tag) {
  if (tag == "eV" || tag == "ev") return Unit::eV;
  if (tag == "cm^-1" || tag == "cm-1" || tag == "1/cm") return Unit::InverseCm;
  if (tag == "ps^-1" || tag == "ps-1" || tag == "1/ps") return Unit::InversePs;
  if (tag == "K") return Unit::Kelvin;
  throw ConfigError("unknown unit tag: '" + std::string(tag) + "'");
}

double time_to_internal(double value, std::string_view tag) {
  if (!std::isfinite(value)) throw ConfigError("non-finite time in unit conversion");
  if (tag == "ps") return value / kEvPerInversePs;
  if (tag == "eV^-1" || tag == "1/eV") return value;
  throw ConfigError("unknown time unit tag: '" + std::string(tag) + "'");
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

void SystemParams::validate() const {
  if (gamma_2 < 0 || gamma_c < 0 || gamma_e < 0)
    throw DomainError("negative relaxation rate");
  if (n_2 < 0 || n_c < 0 || n_e < 0) throw DomainError("negative occupation");
  const bool ordered = omega_g <= omega_0 && omega_0 <= omega_e &&
                       omega_e <= omega_ep && omega_ep <= omega_1 &&
                       omega_1 <= omega_2;
  if (!ordered) throw DomainError("level ordering violated: need g <= 0 <= e <= e' <= 1 <= 2");
  if (omega_21() < 0 || omega_c() < 0 || omega_h() < 0 || delta() < 0)
    throw DomainError("negative derived transition frequency");
}

double PumpSpec::amplitude2() const {
  if (kind == PumpKind::ClassicalTwoPhoton) return Omega_p * Omega_p;
  return Omega_1p * Omega_2p;
}

void PumpSpec::validate(const SystemParams& sys) const {
  if (sigma_p <= 0) throw DomainError("pump bandwidth sigma_p must be positive");
  if (lambda < 0) throw DomainError("probe coupling lambda must be nonnegative");
  if (T_ent < 0) throw DomainError("entanglement time must be nonnegative");
  if (kind == PumpKind::ClassicalTwoPhoton) {
    const double d = sys.delta();
    if (sigma_p <= d / 2)
      throw DomainError("classical effective bandwidth undefined: need sigma_p > delta/2");
  } else {
    const double D = detuning_Delta(sys);
    if (sigma_p <= std::abs(D))
      throw DomainError("entangled effective bandwidth undefined: need sigma_p > |Delta|");
  }
}

double effective_hot_temperature(const SystemParams& sys, const PumpSpec& pump) {
  const double d = sys.delta();
  if (d == 0.0) throw NumericError("effective_hot_temperature: delta = 0");
  const double amp = std::sqrt(pump.amplitude2());
  return std::sqrt(amp * sys.gamma_2 * sys.gamma_2 / (2.0 * d));
}

double theta_factor(const SystemParams& sys, const PumpSpec& pump) {
  if (pump.kind == PumpKind::ClassicalTwoPhoton) return 1.0;
  const double s = sinc(pump.T_ent * (sys.omega_2ep() - sys.omega_epg()) / 2.0);
  return s * s;
}

DimensionlessSet reduce(const SystemParams& sys, const PumpSpec& pump) {
  pump.validate(sys);
  DimensionlessSet d;
  const double omega_c = sys.omega_c();
  if (omega_c <= 0) throw DomainError("reduce: omega_c must be positive");
  if (sys.T_c <= 0) throw DomainError("reduce: T_c must be positive");
  if (sys.gamma_2 <= 0 || sys.gamma_c <= 0)
    throw DomainError("reduce: gamma_2 and gamma_c must be positive");

  d.c_p = pump.omega_p / omega_c;
  d.c_21 = sys.omega_21() / omega_c;
  d.lambda_prime = pump.lambda / std::sqrt(sys.gamma_2 * sys.T_c);
  d.u = sys.gamma_2 * omega_c / (sys.gamma_c * sys.T_c);
  d.v = sys.gamma_c / omega_c;
  d.alpha = sys.T_2 / omega_c;
  d.theta = theta_factor(sys, pump);

  const double T_h = effective_hot_temperature(sys, pump);
  d.tau = T_h > 0 ? sys.T_c / T_h : std::numeric_limits<double>::infinity();

  if (pump.kind == PumpKind::ClassicalTwoPhoton) {
    const double delta = sys.delta();
    const double se = std::sqrt(pump.sigma_p * pump.sigma_p - delta * delta / 4.0);
    d.sigma_p_prime = se * sys.gamma_2 / (delta * sys.T_c);
  } else {
    const double D = pump.detuning_Delta(sys);
    if (D == 0.0) throw DomainError("reduce: entangled branch needs Delta != 0");
    const double se = std::sqrt(pump.sigma_p * pump.sigma_p - D * D);
    d.sigma_p_prime = se * sys.gamma_2 / (sys.T_c * D);
  }
  return d;
}

}  // namespace qhe
