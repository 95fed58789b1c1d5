#pragma once

#include <complex>
#include <vector>

#include "qhe/units.hpp"

// Twin-photon state of type-II SPDC: Lorentzian pump envelope, sinc phase
// matching, and the two-point correlation that replaces the classical Rabi
// product for entangled pumping. Quantization-volume and permittivity
// prefactors are absorbed into a single amplitude scale.

namespace qhe {

struct JointAmplitude {
  double A0 = 1.0;      // amplitude scale
  double omega_p = 0.0; // pump center [eV]
  double sigma = 0.0;   // pump bandwidth [eV]
  double T_ent = 0.0;   // entanglement time [1/eV]

  void validate() const {
    if (sigma <= 0) throw DomainError("JointAmplitude: sigma must be positive");
    if (T_ent < 0) throw DomainError("JointAmplitude: T_ent must be nonnegative");
  }
};

// A(w) = A0 / (w - w_p + i sigma)
std::complex<double> pump_envelope(double omega, const JointAmplitude& ja);

// Phi = sinc[(w_s - w_i) T / 2]
double phase_matching(double omega_s, double omega_i, const JointAmplitude& ja);

// phi(w_i, w_s) = A(w_i + w_s) Phi(w_i, w_s)
std::complex<double> joint_amplitude(double omega_i, double omega_s, const JointAmplitude& ja);

// Om_1 Om_2 (w1, w2) = dipole_scale * A0 sqrt(w1 w2)
//                      / (w1 + w2 - w_p + i sigma) * sinc[(w2 - w1) T / 2]
std::complex<double> two_photon_correlation(double omega_1, double omega_2,
                                            const JointAmplitude& ja,
                                            double dipole_scale = 1.0);

struct JsaGrid {
  std::vector<double> omega_i, omega_s;          // axes
  std::vector<double> magnitude2;                // row-major |phi|^2, omega_i rows
};

// |phi|^2 over a square window of half-width `half_width` centered at
// (omega_p/2, omega_p/2).
JsaGrid jsa_grid(const JointAmplitude& ja, double half_width, int n = 512);

}  // namespace qhe
