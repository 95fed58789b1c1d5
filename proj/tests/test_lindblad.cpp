#include <cmath>
#include <random>

#include "doctest.h"
#include "qhe/config.hpp"
#include "qhe/effective_bath.hpp"
#include "qhe/lindblad.hpp"

using namespace qhe;
using namespace qhe::level;

namespace {

DensityMatrix random_density(std::mt19937& gen) {
  Eigen::Matrix<std::complex<double>, 6, 6> a;
  auto u = [&gen] { return (gen() % 2000 - 1000) / 1000.0; };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = {u(), u()};
  DensityMatrix rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace

TEST_CASE("equation of motion, fixed points and single channels") {
  const SystemParams base = preset_system("bath-match");
  EomOptions opt;  // everything off

  SUBCASE("dark steady state: ground state with n_c = 0") {
    SystemParams s = base;
    s.n_c = 0.0;
    DensityMatrix rho = DensityMatrix::Zero();
    rho(g, g) = 1.0;
    CHECK(eom_rhs(rho, s, opt).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("single decay channel from level 0") {
    DensityMatrix rho = DensityMatrix::Zero();
    rho(zero, zero) = 1.0;
    const DensityMatrix d = eom_rhs(rho, base, opt);
    CHECK(d(zero, zero).real() ==
          doctest::Approx(-base.gamma_c * (base.n_c + 1)).epsilon(1e-12));
    CHECK(d(g, g).real() == doctest::Approx(base.gamma_c * (base.n_c + 1)).epsilon(1e-12));
  }
  SUBCASE("derivative is Hermitian and traceless on random states") {
    std::mt19937 gen(17u);
    EomOptions drive;
    drive.Omega_1 = drive.Omega_2 = 1e-3;
    drive.lambda = 5e-4;
    drive.det_1 = -5e-3;
    drive.det_2 = 5e-3;
    drive.ee_prime_channel = true;
    for (int i = 0; i < 25; ++i) {
      const DensityMatrix rho = random_density(gen);
      const DensityMatrix d = eom_rhs(rho, base, drive);
      CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
      CHECK(std::abs(d.trace()) <= 1e-15);
    }
  }
}

TEST_CASE("integrator") {
  const SystemParams sys = preset_system("bath-match");
  EomOptions opt;

  SUBCASE("zero dynamics is the identity") {
    SystemParams s = sys;
    s.gamma_2 = s.gamma_c = s.gamma_e = 0.0;
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(g, g) = 0.25;
    rho0(one, one) = 0.75;
    const Trajectory tr = integrate(rho0, s, opt, 100.0, 10.0, 4);
    CHECK((tr.rho.back() - rho0).cwiseAbs().maxCoeff() <= 1e-14);
  }

  SUBCASE("relaxation reaches the detailed-balance fixed points") {
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(g, g) = 0.5;
    rho0(two, two) = 0.5;
    const double rate = sys.gamma_c * (2 * sys.n_c + 1);
    const Trajectory tr = integrate(rho0, sys, opt, 30.0 / rate, 0.1 / rate, 8);
    const DensityMatrix& f = tr.rho.back();
    // each two-level channel conserves its own population pair
    CHECK(f(zero, zero).real() / f(g, g).real() ==
          doctest::Approx(sys.n_c / (sys.n_c + 1)).epsilon(1e-6));
    CHECK(f(two, two).real() / f(one, one).real() ==
          doctest::Approx(sys.n_2 / (sys.n_2 + 1)).epsilon(1e-6));
    CHECK(tr.max_trace_drift <= 1e-9);
  }

  SUBCASE("impulsive preparation reproduces the closed-form saturation curve") {
    const PumpSpec pump = preset_pump("bath-match", PumpKind::ClassicalTwoPhoton);
    const double A = coherent_asymptote(sys, pump);
    const double rate = sys.gamma_2 * (2 * sys.n_2 + 1);
    const double P2 = A * (1 + 2 * sys.n_2) / (1 + sys.n_2);
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(g, g) = 1 - P2;
    rho0(two, two) = P2;
    const Trajectory tr = integrate(rho0, sys, opt, 3.0 / rate, 0.05 / rate, 6);
    for (size_t k = 1; k < tr.t.size(); ++k) {
      const double closed = A * (1 - std::exp(-rate * tr.t[k]));
      CHECK(tr.rho[k](one, one).real() == doctest::Approx(closed).epsilon(1e-7));
    }
  }

  SUBCASE("non-finite dynamics triggers the step-underflow error") {
    EomOptions bad;
    bad.Omega_1 = std::nan("");
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(g, g) = 1.0;
    CHECK_THROWS_AS(integrate(rho0, sys, bad, 1.0, 0.1), NumericError);
  }
}

TEST_CASE("transport matrix") {
  const SystemParams sys = preset_system("bath-match");
  const TransportMatrix tm = transport_from_params(sys);
  tm.validate();
  for (int c = 0; c < 6; ++c) CHECK(std::abs(tm.kappa.col(c).sum()) <= 1e-15);

  SUBCASE("column-sum violation is rejected") {
    TransportMatrix bad = tm;
    bad.kappa(0, 0) += 1e-3;
    CHECK_THROWS_AS(bad.validate(), DomainError);
  }
}

TEST_CASE("population Green functions") {
  const SystemParams sys = preset_system("bath-match");

  SUBCASE("no transfer at t = 0") {
    CHECK(population_green_closed(GreenPair::OneTwo, 0.0, sys) == 0.0);
  }
  SUBCASE("long-time limit (1+n)/(1+2n) for downhill transfer") {
    const double inf = population_green_closed(GreenPair::OneTwo, 1e12, sys);
    CHECK(inf == doctest::Approx((1 + sys.n_2) / (1 + 2 * sys.n_2)).epsilon(1e-12));
  }
  SUBCASE("eigen-decomposition path matches the closed forms pointwise") {
    const TransportMatrix tm = transport_from_params(sys);
    const double rate = sys.gamma_2 * (2 * sys.n_2 + 1);
    for (int i = 0; i <= 50; ++i) {
      const double t = 10.0 * i / 50.0 / rate;
      const Eigen::MatrixXd G = population_green_eigen(tm, t);
      CHECK(std::abs(G(zero, g) - population_green_closed(GreenPair::ZeroG, t, sys)) <= 1e-10);
      CHECK(std::abs(G(e, ep) - population_green_closed(GreenPair::EEPrime, t, sys)) <= 1e-10);
      CHECK(std::abs(G(one, two) - population_green_closed(GreenPair::OneTwo, t, sys)) <= 1e-10);
    }
  }
  SUBCASE("generic eigen path on a plain two-level transport block") {
    TransportMatrix two_level;
    two_level.kappa = Eigen::MatrixXd::Zero(2, 2);
    const double gamma = 0.37, n = 2.5;
    two_level.kappa << gamma * n, -gamma * (n + 1), -gamma * n, gamma * (n + 1);
    two_level.validate();
    for (double t : {0.1, 1.0, 5.0}) {
      const Eigen::MatrixXd G = population_green_eigen(two_level, t);
      const double closed = (n + 1) / (2 * n + 1) * (1 - std::exp(-gamma * (2 * n + 1) * t));
      CHECK(std::abs(G(0, 1) - closed) <= 1e-12);
    }
  }
}

TEST_CASE("six-level steady state") {
  SystemParams sys = preset_system("bath-match");

  SUBCASE("disconnected manifolds give a degenerate null space") {
    EomOptions opt;  // no drive: {g,0}, {e,e'}, {1,2} decouple
    CHECK_THROWS_WITH_AS(steady_state(sys, opt), doctest::Contains("degenerate"),
                         NumericError);
  }
  SUBCASE("the equation set conserves a coherence functional: degeneracy reported") {
    // Besides the trace, the six-level equations conserve a second linear
    // functional built from Re rho_2e, Re rho_eg and Im rho_2g, so the strict
    // null space is two-dimensional for any drive. The solver must say so
    // instead of returning an arbitrary member.
    EomOptions opt;
    opt.Omega_1 = opt.Omega_2 = 5e-3;
    opt.lambda = 5e-4;
    opt.det_1 = -sys.delta() / 2;
    opt.det_2 = sys.delta() / 2;
    opt.ee_prime_channel = true;
    CHECK_THROWS_WITH_AS(steady_state(sys, opt), doctest::Contains("degenerate"),
                         NumericError);
  }
  SUBCASE("the reachable steady state is unique from coherence-free starts") {
    EomOptions opt;
    opt.Omega_1 = opt.Omega_2 = 5e-3;
    opt.lambda = 5e-4;
    opt.det_1 = -sys.delta() / 2;
    opt.det_2 = sys.delta() / 2;
    opt.ee_prime_channel = true;
    DensityMatrix a = DensityMatrix::Zero();
    a(level::g, level::g) = 1.0;
    DensityMatrix b = DensityMatrix::Zero();
    b(level::zero, level::zero) = 0.5;
    b(level::two, level::two) = 0.5;
    const double T = 1.5e6;  // all decaying modes are long dead by then
    const DensityMatrix fa = integrate(a, sys, opt, T, 50.0, 1, 1e-9).rho.back();
    const DensityMatrix fb = integrate(b, sys, opt, T, 50.0, 1, 1e-9).rho.back();
    CHECK((fa - fb).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(std::abs(eom_rhs(fa, sys, opt).cwiseAbs().maxCoeff()) <= 1e-11);
  }
}

TEST_CASE("literal population terms diverge from the consistent dissipators") {
  // The uncorrected rho_11 line mixes the 0<->g channel into the 1<->2 one
  // and does not conserve the trace; the measured divergence is the
  // documented comparison between the two modes.
  const SystemParams sys = preset_system("bath-match");
  const PumpSpec pump = preset_pump("bath-match", PumpKind::ClassicalTwoPhoton);
  const double A = coherent_asymptote(sys, pump);
  const double rate = sys.gamma_2 * (2 * sys.n_2 + 1);
  const double P2 = A * (1 + 2 * sys.n_2) / (1 + sys.n_2);
  DensityMatrix rho0 = DensityMatrix::Zero();
  rho0(level::g, level::g) = 1 - P2;
  rho0(level::two, level::two) = P2;

  EomOptions consistent;
  EomOptions literal;
  literal.literal_terms = true;
  const double T = 1.0 / rate;
  const Trajectory a = integrate(rho0, sys, consistent, T, T / 64, 4);
  const Trajectory b = integrate(rho0, sys, literal, T, T / 64, 4);
  CHECK(a.max_trace_drift <= 1e-9);
  CHECK(b.max_trace_drift > 1e-3);  // the literal line injects population
  const double diff = std::abs(a.rho.back()(level::one, level::one).real() -
                               b.rho.back()(level::one, level::one).real());
  CHECK(diff > 1e-3);  // divergence is macroscopic, not a rounding artifact
}

TEST_CASE("quasi-steady coherence scales with the fourth power of the pump") {
  // Quartic pump scaling of the probe coherence, checked at two amplitudes
  // with a Richardson-style quotient. n_c = 0 removes the cold-bath
  // background so the coherence is purely pump induced; its sign matches the
  // perturbative closed form (negative imaginary part).
  SystemParams sys = preset_system("bath-match");
  sys.n_c = 0.0;
  EomOptions opt;
  opt.lambda = 5e-4;
  opt.det_1 = -sys.delta() / 2;
  opt.det_2 = sys.delta() / 2;
  opt.ee_prime_channel = true;
  const double rate = sys.gamma_2 * (2 * sys.n_2 + 1);
  const double T = 10.0 / rate;

  DensityMatrix rho0 = DensityMatrix::Zero();
  rho0(level::g, level::g) = 1.0;

  auto coeff = [&](double eps) {
    EomOptions o = opt;
    o.Omega_1 = o.Omega_2 = eps;
    const DensityMatrix f = integrate(rho0, sys, o, T, 30.0, 1, 1e-9).rho.back();
    const std::complex<double> c = f(level::zero, level::one);
    CHECK(std::abs(c.real()) <= 1e-10 * std::abs(c));
    CHECK(c.imag() < 0.0);
    return c.imag() / (eps * eps * eps * eps);
  };
  const double c1 = coeff(1e-4);
  const double c2 = coeff(5e-5);
  CHECK(c2 / c1 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("three-level engine steady state") {
  ThreeLevelEngine eng;
  eng.gamma_h = to_internal_units(0.71, Unit::InversePs);
  eng.gamma_c = to_internal_units(0.025, Unit::InversePs);
  eng.n_h = 60.0;
  eng.n_c = 30.0;

  SUBCASE("probe off: detailed balance per channel") {
    eng.lambda = 0.0;
    const Eigen::Matrix3cd rho = engine_steady_state(eng);
    CHECK(rho(2, 2).real() / rho(0, 0).real() ==
          doctest::Approx(eng.n_h / (eng.n_h + 1)).epsilon(1e-9));
    CHECK(rho(1, 1).real() / rho(0, 0).real() ==
          doctest::Approx(eng.n_c / (eng.n_c + 1)).epsilon(1e-9));
  }

  const double omega_c = 0.012, omega_h = 1.276;
  const double Y = eng.gamma_h * eng.gamma_c * eng.n_h * eng.n_c;
  auto closed_form = [&](double lambda) {
    return std::abs((2.0 / 3.0) * lambda * lambda * eng.gamma_h * eng.gamma_c *
                    (eng.n_c - eng.n_h) * (omega_c - omega_h) /
                    ((eng.gamma_h * eng.n_h + eng.gamma_c * eng.n_c) *
                     (lambda * lambda + Y)));
  };

  // The closed-form power and the dissipator steady state coincide only at
  // lambda^2 = Y/2; away from it the ratio follows 6 z (Y + l^2)/(Y + 4 l^2)
  // with z the ground population (2x at weak probe, 1/2 at strong probe).
  // The structure is verified rather than hidden behind a loose tolerance.
  SUBCASE("closed form agrees within 5% at the matching probe strength") {
    eng.lambda = std::sqrt(Y / 2.0);
    const Eigen::Matrix3cd rho = engine_steady_state(eng);
    const double p = engine_power_from_state(eng, rho, omega_c, omega_h);
    CHECK(p / closed_form(eng.lambda) == doctest::Approx(1.0).epsilon(0.05));
  }
  SUBCASE("probe-strength dependence of the ratio follows the derived law") {
    for (double l2_over_Y : {0.01, 0.5, 1.0, 100.0}) {
      eng.lambda = std::sqrt(l2_over_Y * Y);
      const Eigen::Matrix3cd rho = engine_steady_state(eng);
      const double p = engine_power_from_state(eng, rho, omega_c, omega_h);
      const double z = rho(0, 0).real();
      const double l2 = eng.lambda * eng.lambda;
      const double predicted = 6.0 * z * (Y + l2) / (Y + 4.0 * l2);
      CHECK(p / closed_form(eng.lambda) == doctest::Approx(predicted).epsilon(0.07));
    }
    eng.lambda = std::sqrt(100.0 * Y);
    const Eigen::Matrix3cd rho = engine_steady_state(eng);
    CHECK(engine_power_from_state(eng, rho, omega_c, omega_h) / closed_form(eng.lambda) ==
          doctest::Approx(0.5).epsilon(0.1));
  }
}
