#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qhe/config.hpp"
#include "qhe/spdc.hpp"

using namespace qhe;

namespace {
const JointAmplitude kJa{1.0, 1.3, 0.0248, 500.0};
}

TEST_CASE("pump envelope") {
  SUBCASE("on resonance: A0 / (i sigma)") {
    const std::complex<double> v = pump_envelope(kJa.omega_p, kJa);
    CHECK(v.real() == 0.0);
    CHECK(v.imag() == doctest::Approx(-kJa.A0 / kJa.sigma).epsilon(1e-15));
  }
  SUBCASE("decays far from resonance") {
    CHECK(std::abs(pump_envelope(kJa.omega_p + 1e6, kJa)) < 1e-6);
  }
  SUBCASE("half maximum of |A|^2 at one bandwidth detuning") {
    const double peak = std::norm(pump_envelope(kJa.omega_p, kJa));
    CHECK(std::norm(pump_envelope(kJa.omega_p + kJa.sigma, kJa)) ==
          doctest::Approx(peak / 2).epsilon(1e-12));
    CHECK(std::norm(pump_envelope(kJa.omega_p - kJa.sigma, kJa)) ==
          doctest::Approx(peak / 2).epsilon(1e-12));
  }
}

TEST_CASE("phase matching") {
  SUBCASE("unity at zero frequency difference") {
    CHECK(phase_matching(0.65, 0.65, kJa) == 1.0);
  }
  SUBCASE("first zero at difference 2 pi / T") {
    const double w = 0.65;
    CHECK(std::abs(phase_matching(w + 2 * M_PI / kJa.T_ent, w, kJa)) <= 1e-15);
  }
  SUBCASE("even under exchange") {
    CHECK(phase_matching(0.7, 0.6, kJa) == phase_matching(0.6, 0.7, kJa));
  }
  SUBCASE("equals the linearized dispersion route") {
    // Delta k = (w_s - w_i)(1/v_s - 1/v_i); with T = L (1/v_s - 1/v_i) the
    // factor sinc(Delta k L / 2) must coincide with the T-parameterized form.
    std::mt19937 gen(29u);
    auto u = [&gen] { return (gen() % 10000) / 10000.0; };
    for (int i = 0; i < 50; ++i) {
      const double vs = 0.4 + 0.5 * u(), vi = 0.4 + 0.5 * u(), L = 1e3 + 1e4 * u();
      const double ws = 0.6 + 0.1 * u(), wi = 0.6 + 0.1 * u();
      JointAmplitude ja = kJa;
      ja.T_ent = L * (1.0 / vs - 1.0 / vi);
      const double dk = (ws - wi) * (1.0 / vs - 1.0 / vi);
      CHECK(phase_matching(ws, wi, ja) == doctest::Approx(sinc(dk * L / 2)).epsilon(1e-14));
    }
  }
}

TEST_CASE("two-photon correlation") {
  SUBCASE("peak along the sum coordinate at omega_p") {
    const double half = kJa.omega_p / 2;
    const double peak = std::abs(two_photon_correlation(half, half, kJa));
    for (double det : {-3 * kJa.sigma, -kJa.sigma, kJa.sigma, 3 * kJa.sigma}) {
      CHECK(std::abs(two_photon_correlation(half + det / 2, half + det / 2, kJa)) < peak);
    }
  }
  SUBCASE("sinc factor is unity at equal frequencies") {
    const double w = 0.6;
    const std::complex<double> c = two_photon_correlation(w, w, kJa);
    const std::complex<double> expected =
        kJa.A0 * w / std::complex<double>(2 * w - kJa.omega_p, kJa.sigma);
    CHECK(std::abs(c - expected) <= 1e-15);
  }
  SUBCASE("exchange symmetry of the modulus") {
    std::mt19937 gen(31u);
    for (int i = 0; i < 100; ++i) {
      const double w1 = 0.4 + (gen() % 1000) / 2000.0;
      const double w2 = 0.4 + (gen() % 1000) / 2000.0;
      CHECK(std::abs(two_photon_correlation(w1, w2, kJa)) ==
            doctest::Approx(std::abs(two_photon_correlation(w2, w1, kJa))).epsilon(1e-14));
    }
  }
  SUBCASE("Lorentzian profile of half-width sigma in the sum detuning") {
    const double half = kJa.omega_p / 2;
    auto mod2 = [&](double s) {
      return std::norm(two_photon_correlation(half + s / 2, half + s / 2, kJa));
    };
    // remove the slowly varying sqrt(w1 w2) weight, then the profile is
    // 1/(s^2 + sigma^2) exactly
    auto weight = [&](double s) { return (half + s / 2) * (half + s / 2); };
    const double r = (mod2(kJa.sigma) / weight(kJa.sigma)) / (mod2(0) / weight(0));
    CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("separable limit as T -> 0") {
    JointAmplitude ja = kJa;
    ja.T_ent = 1e-9;
    const double window = 0.2;
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double diff = -window + 2 * window * i / 100.0;
      worst = std::max(worst, std::abs(phase_matching(0.65 + diff / 2, 0.65 - diff / 2, ja) - 1.0));
    }
    CHECK(worst <= (window * ja.T_ent / 2) * (window * ja.T_ent / 2) / 6.0 + 1e-18);
  }
  SUBCASE("nonpositive frequencies rejected") {
    CHECK_THROWS_AS(two_photon_correlation(-0.1, 0.6, kJa), DomainError);
  }
}

TEST_CASE("theta linkage with the reduced variables") {
  const SystemParams sys = preset_system("bath-match");
  PumpSpec pump = preset_pump("bath-match", PumpKind::EntangledTwoPhoton);
  pump.omega_p = sys.omega_2g() - 1e-3;
  for (double T : {0.0, 100.0, 628.0, 5000.0}) {
    pump.T_ent = T;
    JointAmplitude ja{1.0, pump.omega_p, pump.sigma_p, T};
    const double phi = phase_matching(sys.omega_2ep(), sys.omega_epg(), ja);
    CHECK(std::abs(theta_factor(sys, pump) - phi * phi) <= 1e-12);
  }
}

TEST_CASE("joint spectral amplitude grid") {
  JointAmplitude ja = kJa;
  ja.T_ent = 300.0;
  const JsaGrid g = jsa_grid(ja, 4 * ja.sigma, 64);
  REQUIRE(g.omega_i.size() == 64);
  REQUIRE(g.magnitude2.size() == 64 * 64);
  // the anti-diagonal (energy-conserving) ridge carries the maximum
  double best = 0.0;
  size_t best_i = 0, best_s = 0;
  for (size_t i = 0; i < 64; ++i)
    for (size_t s = 0; s < 64; ++s)
      if (g.magnitude2[i * 64 + s] > best) {
        best = g.magnitude2[i * 64 + s];
        best_i = i;
        best_s = s;
      }
  CHECK(std::abs(g.omega_i[best_i] + g.omega_s[best_s] - ja.omega_p) <= 2 * 8 * ja.sigma / 63);
  CHECK_THROWS_AS(jsa_grid(ja, -1.0, 64), DomainError);
}
