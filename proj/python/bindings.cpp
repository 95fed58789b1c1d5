#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhe/config.hpp"
#include "qhe/effective_bath.hpp"
#include "qhe/engine.hpp"
#include "qhe/lindblad.hpp"
#include "qhe/oracle.hpp"
#include "qhe/spdc.hpp"
#include "qhe/spectroscopy.hpp"

namespace py = pybind11;
using namespace qhe;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-photon pumped quantum heat engine toolkit";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<NumericError>(m, "NumericError");

  // units and parameter containers
  py::enum_<Unit>(m, "Unit")
      .value("eV", Unit::eV)
      .value("inverse_cm", Unit::InverseCm)
      .value("inverse_ps", Unit::InversePs)
      .value("kelvin", Unit::Kelvin);
  m.def("to_internal_units", &to_internal_units, py::arg("value"), py::arg("unit"));
  m.def("to_internal_units",
        [](double v, const std::string& tag) { return to_internal_units(v, parse_unit(tag)); },
        py::arg("value"), py::arg("unit"));
  m.def("sinc", &sinc);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("omega_g", &SystemParams::omega_g)
      .def_readwrite("omega_0", &SystemParams::omega_0)
      .def_readwrite("omega_e", &SystemParams::omega_e)
      .def_readwrite("omega_ep", &SystemParams::omega_ep)
      .def_readwrite("omega_1", &SystemParams::omega_1)
      .def_readwrite("omega_2", &SystemParams::omega_2)
      .def_readwrite("gamma_2", &SystemParams::gamma_2)
      .def_readwrite("gamma_c", &SystemParams::gamma_c)
      .def_readwrite("gamma_e", &SystemParams::gamma_e)
      .def_readwrite("n_2", &SystemParams::n_2)
      .def_readwrite("n_c", &SystemParams::n_c)
      .def_readwrite("n_e", &SystemParams::n_e)
      .def_readwrite("T_2", &SystemParams::T_2)
      .def_readwrite("T_c", &SystemParams::T_c)
      .def("omega_21", &SystemParams::omega_21)
      .def("omega_c", &SystemParams::omega_c)
      .def("omega_h", &SystemParams::omega_h)
      .def("omega_2g", &SystemParams::omega_2g)
      .def("delta", &SystemParams::delta)
      .def("delta_tilde", &SystemParams::delta_tilde)
      .def("validate", &SystemParams::validate);

  py::enum_<PumpKind>(m, "PumpKind")
      .value("classical", PumpKind::ClassicalTwoPhoton)
      .value("entangled", PumpKind::EntangledTwoPhoton);

  py::class_<PumpSpec>(m, "PumpSpec")
      .def(py::init<>())
      .def_readwrite("kind", &PumpSpec::kind)
      .def_readwrite("omega_p", &PumpSpec::omega_p)
      .def_readwrite("Omega_p", &PumpSpec::Omega_p)
      .def_readwrite("Omega_1p", &PumpSpec::Omega_1p)
      .def_readwrite("Omega_2p", &PumpSpec::Omega_2p)
      .def_readwrite("sigma_p", &PumpSpec::sigma_p)
      .def_readwrite("T_ent", &PumpSpec::T_ent)
      .def_readwrite("lambda_", &PumpSpec::lambda)
      .def_readwrite("sigma_pr", &PumpSpec::sigma_pr)
      .def("amplitude2", &PumpSpec::amplitude2)
      .def("validate", &PumpSpec::validate);

  py::class_<DimensionlessSet>(m, "DimensionlessSet")
      .def(py::init<>())
      .def_readwrite("tau", &DimensionlessSet::tau)
      .def_readwrite("c_p", &DimensionlessSet::c_p)
      .def_readwrite("c_21", &DimensionlessSet::c_21)
      .def_readwrite("lambda_prime", &DimensionlessSet::lambda_prime)
      .def_readwrite("sigma_p_prime", &DimensionlessSet::sigma_p_prime)
      .def_readwrite("u", &DimensionlessSet::u)
      .def_readwrite("v", &DimensionlessSet::v)
      .def_readwrite("alpha", &DimensionlessSet::alpha)
      .def_readwrite("theta", &DimensionlessSet::theta);

  m.def("preset_system", &preset_system, py::arg("name"));
  m.def("preset_pump", &preset_pump, py::arg("name"), py::arg("kind"));
  m.def("effective_hot_temperature", &effective_hot_temperature);
  m.def("reduce", &qhe::reduce, py::arg("system"), py::arg("pump"));
  m.def("theta_factor", &theta_factor);

  // effective bath
  py::enum_<BathFitMode>(m, "BathFitMode")
      .value("consistency_fit", BathFitMode::ConsistencyFit)
      .value("literal_form", BathFitMode::LiteralForm);
  py::class_<EffectiveBath>(m, "EffectiveBath")
      .def(py::init<>())
      .def_readwrite("n_h", &EffectiveBath::n_h)
      .def_readwrite("gamma_h", &EffectiveBath::gamma_h)
      .def_readwrite("T_h", &EffectiveBath::T_h);
  py::class_<PopulationPair>(m, "PopulationPair")
      .def_readonly("rho_11", &PopulationPair::rho_11)
      .def_readonly("rho_gg", &PopulationPair::rho_gg);
  m.def("coherent_population_classical", &coherent_population_classical);
  m.def("coherent_population_entangled", &coherent_population_entangled);
  m.def("thermal_population", &thermal_population);
  m.def("coherent_asymptote", &coherent_asymptote);
  m.def("fit_bath_classical", &fit_bath_classical, py::arg("system"), py::arg("pump"),
        py::arg("mode") = BathFitMode::ConsistencyFit);
  m.def("fit_bath_entangled", &fit_bath_entangled, py::arg("system"), py::arg("pump"),
        py::arg("mode") = BathFitMode::ConsistencyFit);
  m.def("default_mismatch_grid", &default_mismatch_grid);
  py::class_<MismatchReport>(m, "MismatchReport")
      .def_readonly("max_abs_diff", &MismatchReport::max_abs_diff)
      .def_readonly("t", &MismatchReport::t)
      .def_readonly("diff_11", &MismatchReport::diff_11)
      .def_readonly("diff_gg", &MismatchReport::diff_gg);
  m.def("population_mismatch", &population_mismatch, py::arg("system"), py::arg("pump"),
        py::arg("t_grid"), py::arg("mode") = BathFitMode::ConsistencyFit);

  // dynamics oracle
  py::class_<EomOptions>(m, "EomOptions")
      .def(py::init<>())
      .def_readwrite("Omega_1", &EomOptions::Omega_1)
      .def_readwrite("Omega_2", &EomOptions::Omega_2)
      .def_readwrite("lambda_", &EomOptions::lambda)
      .def_readwrite("det_1", &EomOptions::det_1)
      .def_readwrite("det_2", &EomOptions::det_2)
      .def_readwrite("det_pr", &EomOptions::det_pr)
      .def_readwrite("literal_terms", &EomOptions::literal_terms)
      .def_readwrite("ee_prime_channel", &EomOptions::ee_prime_channel);
  m.def("cw_drive", &cw_drive);
  m.def("eom_rhs", &eom_rhs);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("t", &Trajectory::t)
      .def_readonly("rho", &Trajectory::rho)
      .def_readonly("max_trace_drift", &Trajectory::max_trace_drift);
  m.def("integrate", &integrate, py::arg("rho0"), py::arg("system"), py::arg("options"),
        py::arg("t_end"), py::arg("dt0"), py::arg("n_samples") = 64,
        py::arg("local_tol") = 1e-10);
  py::class_<TransportMatrix>(m, "TransportMatrix")
      .def_readonly("kappa", &TransportMatrix::kappa)
      .def("validate", &TransportMatrix::validate, py::arg("tol") = 1e-12);
  m.def("transport_from_params", &transport_from_params, py::arg("system"),
        py::arg("ee_prime_channel") = true);
  py::enum_<GreenPair>(m, "GreenPair")
      .value("zero_g", GreenPair::ZeroG)
      .value("e_eprime", GreenPair::EEPrime)
      .value("one_two", GreenPair::OneTwo);
  m.def("population_green_closed", &population_green_closed);
  m.def("population_green_eigen", &population_green_eigen);
  m.def("steady_state", &steady_state, py::arg("system"), py::arg("options"),
        py::arg("residual_tol") = 1e-10);
  py::class_<ThreeLevelEngine>(m, "ThreeLevelEngine")
      .def(py::init<>())
      .def_readwrite("n_h", &ThreeLevelEngine::n_h)
      .def_readwrite("gamma_h", &ThreeLevelEngine::gamma_h)
      .def_readwrite("n_c", &ThreeLevelEngine::n_c)
      .def_readwrite("gamma_c", &ThreeLevelEngine::gamma_c)
      .def_readwrite("lambda_", &ThreeLevelEngine::lambda)
      .def_readwrite("det_pr", &ThreeLevelEngine::det_pr);
  m.def("engine_steady_state", &engine_steady_state);
  m.def("engine_power_from_state", &engine_power_from_state);

  // engine observables and maximization
  py::class_<EngineResult>(m, "EngineResult")
      .def_readonly("power", &EngineResult::power)
      .def_readonly("heat_flux_h", &EngineResult::heat_flux_h)
      .def_readonly("efficiency", &EngineResult::efficiency)
      .def_readonly("c21_star", &EngineResult::c21_star)
      .def_readonly("region", &EngineResult::region)
      .def_readonly("engine_regime", &EngineResult::engine_regime);
  m.def("engine_observables", &engine_observables);
  py::enum_<PowerVariant>(m, "PowerVariant")
      .value("literal", PowerVariant::Literal)
      .value("sign_consistent", PowerVariant::SignConsistent);
  m.def("power_dimensionless", &power_dimensionless, py::arg("kind"), py::arg("set"),
        py::arg("variant") = PowerVariant::Literal);
  m.def("max_power_analytic", &max_power_analytic, py::arg("kind"), py::arg("set"),
        py::arg("m") = 1.0);
  py::class_<MaxPowerResult>(m, "MaxPowerResult")
      .def_readonly("p_max", &MaxPowerResult::p_max)
      .def_readonly("c21_star", &MaxPowerResult::c21_star)
      .def_readonly("p_max_analytic", &MaxPowerResult::p_max_analytic)
      .def_readonly("stationarity", &MaxPowerResult::stationarity)
      .def_readonly("flagged", &MaxPowerResult::flagged)
      .def_readonly("rel_disagreement", &MaxPowerResult::rel_disagreement);
  m.def("maximize_power", &maximize_power, py::arg("kind"), py::arg("set"),
        py::arg("rel_tol") = 1e-6, py::arg("scan_points") = 256,
        py::arg("variant") = PowerVariant::Literal);
  py::enum_<EfficiencyForm>(m, "EfficiencyForm")
      .value("full", EfficiencyForm::Full)
      .value("weak", EfficiencyForm::Weak)
      .value("table_closure", EfficiencyForm::TableClosure);
  m.def("efficiency_at_max_power", &efficiency_at_max_power, py::arg("kind"), py::arg("set"),
        py::arg("form") = EfficiencyForm::Weak);
  py::enum_<BoundRegion>(m, "BoundRegion")
      .value("I", BoundRegion::I)
      .value("I_II", BoundRegion::I_II)
      .value("II_III", BoundRegion::II_III)
      .value("III_IV", BoundRegion::III_IV)
      .value("IV", BoundRegion::IV);
  m.def("bound_efficiency", &bound_efficiency);
  m.def("bound_cp", &bound_cp);
  m.def("bound_bandwidth", &bound_bandwidth);
  m.def("classify_region", &classify_region, py::arg("eta_star"), py::arg("tau"),
        py::arg("boundary_tol") = 1e-9);
  py::class_<PowerRatio>(m, "PowerRatio")
      .def_readonly("asymptotic", &PowerRatio::asymptotic)
      .def_readonly("exact", &PowerRatio::exact);
  m.def("max_power_ratio_qhe", &max_power_ratio_qhe);
  m.def("find_crossover", &find_crossover, py::arg("f"), py::arg("tau_lo"), py::arg("tau_hi"),
        py::arg("grid") = 600);

  // spectroscopy
  m.def("coherence_classical", &coherence_classical);
  m.def("coherence_entangled", &coherence_entangled);
  py::enum_<QuantumSpectroForm>(m, "QuantumSpectroForm")
      .value("ratio_consistent", QuantumSpectroForm::RatioConsistent)
      .value("quadratic_tau", QuantumSpectroForm::QuadraticTau);
  m.def("spectro_power", &spectro_power, py::arg("kind"), py::arg("set"), py::arg("sigma_pr"),
        py::arg("form") = QuantumSpectroForm::RatioConsistent);
  py::class_<SpectroMax>(m, "SpectroMax")
      .def_readonly("p_max", &SpectroMax::p_max)
      .def_readonly("c21_star", &SpectroMax::c21_star)
      .def_readonly("p_max_analytic", &SpectroMax::p_max_analytic)
      .def_readonly("stationarity", &SpectroMax::stationarity)
      .def_readonly("flagged", &SpectroMax::flagged)
      .def_readonly("rel_disagreement", &SpectroMax::rel_disagreement);
  m.def("spectro_max_power", &spectro_max_power, py::arg("kind"), py::arg("set"),
        py::arg("sigma_pr"), py::arg("rel_tol") = 1e-6,
        py::arg("form") = QuantumSpectroForm::RatioConsistent);
  m.def("spectro_ratio", &spectro_ratio);

  // SPDC twin-photon state
  py::class_<JointAmplitude>(m, "JointAmplitude")
      .def(py::init<>())
      .def_readwrite("A0", &JointAmplitude::A0)
      .def_readwrite("omega_p", &JointAmplitude::omega_p)
      .def_readwrite("sigma", &JointAmplitude::sigma)
      .def_readwrite("T_ent", &JointAmplitude::T_ent);
  m.def("pump_envelope", &pump_envelope);
  m.def("phase_matching", &phase_matching);
  m.def("joint_amplitude", &joint_amplitude);
  m.def("two_photon_correlation", &two_photon_correlation, py::arg("omega_1"),
        py::arg("omega_2"), py::arg("ja"), py::arg("dipole_scale") = 1.0);
  py::class_<JsaGrid>(m, "JsaGrid")
      .def_readonly("omega_i", &JsaGrid::omega_i)
      .def_readonly("omega_s", &JsaGrid::omega_s)
      .def_readonly("magnitude2", &JsaGrid::magnitude2);
  m.def("jsa_grid", &jsa_grid, py::arg("ja"), py::arg("half_width"), py::arg("n") = 512);

  // verification suite
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail)
      .def_readonly("seconds", &CheckResult::seconds);
  m.def("run_acceptance_suite", &run_acceptance_suite);
}
