#pragma once

#include <complex>

#include "qhe/units.hpp"

// Weak-probe (perturbative) regime: steady coherences, spectroscopic powers
// for both pump types, their maxima over c_21, and the quantum/classical
// ratio identity.

namespace qhe {

// rho_01 = -32 i G2 lambda n2 d^4 Om_p^4
//          / [(d^2+4s^2)^4 sigma_pr (Gc nc + G2 n2)(5 G2 n2 + Gc nc)]
std::complex<double> coherence_classical(const SystemParams& sys, const PumpSpec& pump);

// Same structure with Om_1'^2 Om_2'^2 sinc^2[...] and (Delta^2+sigma_p^2)^4.
// The d^4 numerator is kept in its literal form; delta vs Delta usage differs between
// the classical and quantum branches by construction of the literal forms.
std::complex<double> coherence_entangled(const SystemParams& sys, const PumpSpec& pump);

// The literal "maximum" form of the quantum spectroscopic power still carries free c_21
// with a 4 / (tau^4 sigma'^4) prefactor, while the appendix form carries
// 1 / (2 tau^2 sigma'^2). RatioConsistent (default) uses the former, which is
// the one consistent with the closed-form ratio identity; QuadraticTau evaluates the
// appendix form.
enum class QuantumSpectroForm { RatioConsistent, QuadraticTau };

// P_C = 4 alpha c21 u^2 (cp - c21 - 1) lambda' /
//       [tau^8 sigma_pr (c21 + alpha u)(c21 + 5 alpha u) sigma'^8]
// and the quantum analog per QuantumSpectroForm. sigma_pr in internal units.
double spectro_power(PumpKind kind, const DimensionlessSet& d, double sigma_pr,
                     QuantumSpectroForm form = QuantumSpectroForm::RatioConsistent);

struct SpectroMax {
  double p_max = 0.0;       // numeric maximum (authoritative for the quantum branch)
  double c21_star = 0.0;
  double p_max_analytic = 0.0;  // classical closed form; quantum: literal form at c21_star
  double stationarity = 0.0;
  bool flagged = false;
  double rel_disagreement = 0.0;
};

SpectroMax spectro_max_power(PumpKind kind, const DimensionlessSet& d, double sigma_pr,
                             double rel_tol = 1e-6,
                             QuantumSpectroForm form = QuantumSpectroForm::RatioConsistent);

// Closed-form ratio P_Q^max / P_C^max = tau^4 sigma'^4 theta.
double spectro_ratio(const DimensionlessSet& d);

}  // namespace qhe
