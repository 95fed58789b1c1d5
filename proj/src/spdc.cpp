#include "qhe/spdc.hpp"

#include <cmath>

namespace qhe {

std::complex<double> pump_envelope(double omega, const JointAmplitude& ja) {
  return ja.A0 / std::complex<double>(omega - ja.omega_p, ja.sigma);
}

double phase_matching(double omega_s, double omega_i, const JointAmplitude& ja) {
  return sinc((omega_s - omega_i) * ja.T_ent / 2.0);
}

std::complex<double> joint_amplitude(double omega_i, double omega_s, const JointAmplitude& ja) {
  return pump_envelope(omega_i + omega_s, ja) * phase_matching(omega_s, omega_i, ja);
}

std::complex<double> two_photon_correlation(double omega_1, double omega_2,
                                            const JointAmplitude& ja, double dipole_scale) {
  if (omega_1 <= 0 || omega_2 <= 0)
    throw DomainError("two_photon_correlation: frequencies must be positive");
  const std::complex<double> lorentz =
      std::sqrt(omega_1 * omega_2) / std::complex<double>(omega_1 + omega_2 - ja.omega_p, ja.sigma);
  return dipole_scale * ja.A0 * lorentz * sinc((omega_2 - omega_1) * ja.T_ent / 2.0);
}

JsaGrid jsa_grid(const JointAmplitude& ja, double half_width, int n) {
  ja.validate();
  if (n < 2 || half_width <= 0) throw DomainError("jsa_grid: bad window");
  JsaGrid g;
  g.omega_i.resize(n);
  g.omega_s.resize(n);
  const double c = ja.omega_p / 2.0;
  for (int i = 0; i < n; ++i) {
    const double x = c - half_width + 2.0 * half_width * i / (n - 1);
    g.omega_i[i] = x;
    g.omega_s[i] = x;
  }
  g.magnitude2.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s)
      g.magnitude2[static_cast<size_t>(i) * n + s] =
          std::norm(joint_amplitude(g.omega_i[i], g.omega_s[s], ja));
  return g;
}

}  // namespace qhe
