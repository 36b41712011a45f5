#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abmodel/constants.hpp"
#include "abmodel/interferometry.hpp"
#include "abmodel/model.hpp"
#include "abmodel/quadrature.hpp"

namespace py = pybind11;
using namespace abmodel;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Relativistic dipole model of the solenoid fringe-shift effect: "
      "momentum transfer, interferometry observables and quadrature oracles.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);

  py::class_<PhysConsts>(m, "PhysConsts")
      .def(py::init<>())
      .def_static("codata2018", &PhysConsts::codata2018)
      .def_readwrite("c0", &PhysConsts::c0)
      .def_readwrite("mu0", &PhysConsts::mu0)
      .def_readwrite("eps0", &PhysConsts::eps0)
      .def_readwrite("h", &PhysConsts::h)
      .def_readwrite("e_mag", &PhysConsts::e_mag)
      .def_readwrite("m_e", &PhysConsts::m_e)
      .def("validate", &PhysConsts::validate);

  py::enum_<BeamSide>(m, "BeamSide")
      .value("plus_x", BeamSide::plus_x)
      .value("minus_x", BeamSide::minus_x);

  py::class_<SolenoidConfig>(m, "SolenoidConfig")
      .def(py::init([](double R, double n, double Z, double q_mag, double v_q) {
             return SolenoidConfig{R, n, Z, q_mag, v_q};
           }),
           py::arg("R"), py::arg("n"), py::arg("Z"), py::arg("q_mag"),
           py::arg("v_q"))
      .def_readwrite("R", &SolenoidConfig::R)
      .def_readwrite("n", &SolenoidConfig::n)
      .def_readwrite("Z", &SolenoidConfig::Z)
      .def_readwrite("q_mag", &SolenoidConfig::q_mag)
      .def_readwrite("v_q", &SolenoidConfig::v_q)
      .def("cross_section", &SolenoidConfig::cross_section)
      .def("internal_field", &SolenoidConfig::internal_field);

  py::class_<BeamConfig>(m, "BeamConfig")
      .def(py::init([](double v_e, double b, BeamSide side) {
             return BeamConfig{v_e, b, side};
           }),
           py::arg("v_e"), py::arg("b"), py::arg("side") = BeamSide::plus_x)
      .def_readwrite("v_e", &BeamConfig::v_e)
      .def_readwrite("b", &BeamConfig::b)
      .def_readwrite("side", &BeamConfig::side);

  py::class_<SidePair>(m, "SidePair")
      .def_readonly("minus", &SidePair::minus)
      .def_readonly("plus", &SidePair::plus);

  py::class_<MomentumBreakdown>(m, "MomentumBreakdown")
      .def_readonly("b_eff_minus", &MomentumBreakdown::b_eff_minus)
      .def_readonly("b_eff_plus", &MomentumBreakdown::b_eff_plus)
      .def_readonly("mean_vqy", &MomentumBreakdown::mean_vqy)
      .def_readonly("gamma", &MomentumBreakdown::gamma)
      .def_readonly("gamma_minus", &MomentumBreakdown::gamma_minus)
      .def_readonly("gamma_plus", &MomentumBreakdown::gamma_plus)
      .def_readonly("dq_eff_minus", &MomentumBreakdown::dq_eff_minus)
      .def_readonly("dq_eff_plus", &MomentumBreakdown::dq_eff_plus)
      .def_readonly("q_eff_minus", &MomentumBreakdown::q_eff_minus)
      .def_readonly("q_eff_plus", &MomentumBreakdown::q_eff_plus)
      .def_readonly("p_minus", &MomentumBreakdown::p_minus)
      .def_readonly("p_plus", &MomentumBreakdown::p_plus)
      .def_readonly("p_total", &MomentumBreakdown::p_total)
      .def_readonly("p_total_closed_form",
                    &MomentumBreakdown::p_total_closed_form)
      .def_readonly("pole_proximity", &MomentumBreakdown::pole_proximity)
      .def_readonly("warnings", &MomentumBreakdown::warnings);

  m.def("coil_current", &coil_current);
  m.def("cg_offsets", [](double R) {
    const CgOffsets o = cg_offsets(R);
    return py::make_tuple(o.xi_plus, o.xi_minus);
  });
  m.def("effective_impact_parameters", &effective_impact_parameters,
        py::arg("b"), py::arg("R"));
  m.def("mean_parallel_speed", &mean_parallel_speed);
  m.def("momentum_kernel", &momentum_kernel, py::arg("Q1"), py::arg("Q2"),
        py::arg("b"), py::arg("v"), py::arg("consts"));
  m.def("lorentz_factor", &lorentz_factor, py::arg("v"), py::arg("consts"));
  m.def("shifted_lorentz_factors", &shifted_lorentz_factors, py::arg("v_e"),
        py::arg("v_q"), py::arg("consts"));
  m.def("effective_charge_exact", &effective_charge_exact);
  m.def("effective_charge_approx", &effective_charge_approx);
  m.def("winding_integrated_charge", &winding_integrated_charge,
        py::arg("dq_eff"), py::arg("n"), py::arg("b"));
  m.def("side_momentum", &side_momentum, py::arg("q_eff"), py::arg("b_eff"),
        py::arg("v_e"), py::arg("consts"));
  m.def("total_transverse_momentum", &total_transverse_momentum, py::arg("s"),
        py::arg("beam"), py::arg("consts"));

  py::class_<ElectronKinematics>(m, "ElectronKinematics")
      .def_readonly("kinetic_energy", &ElectronKinematics::kinetic_energy)
      .def_readonly("v_e", &ElectronKinematics::v_e)
      .def_readonly("gamma", &ElectronKinematics::gamma)
      .def_readonly("p_e", &ElectronKinematics::p_e)
      .def_readonly("lambda_e", &ElectronKinematics::lambda_e);

  py::class_<FringePrediction>(m, "FringePrediction")
      .def_readonly("delta", &FringePrediction::delta)
      .def_readonly("order_shift", &FringePrediction::order_shift)
      .def_readonly("unit_shift_field", &FringePrediction::unit_shift_field)
      .def_readonly("canonical_unit_field",
                    &FringePrediction::canonical_unit_field)
      .def_readonly("ratio", &FringePrediction::ratio);

  py::class_<FringeProfile>(m, "FringeProfile")
      .def_readonly("screen_positions", &FringeProfile::screen_positions)
      .def_readonly("intensities", &FringeProfile::intensities)
      .def_readonly("shift_orders", &FringeProfile::shift_orders);

  m.def("kinematics_from_energy", &kinematics_from_energy, py::arg("T"),
        py::arg("consts"));
  m.def("kinematics_from_speed", &kinematics_from_speed, py::arg("v_e"),
        py::arg("consts"));
  m.def("deflection_angle", &deflection_angle, py::arg("p_total"),
        py::arg("p_e"));
  m.def("fringe_order_shift", &fringe_order_shift, py::arg("delta"),
        py::arg("b"), py::arg("lambda_e"));
  m.def("unit_shift_field", &unit_shift_field, py::arg("s"), py::arg("beam"),
        py::arg("kin"), py::arg("consts"));
  m.def("canonical_unit_field", &canonical_unit_field, py::arg("S"),
        py::arg("consts"));
  m.def("model_to_canonical_ratio", &model_to_canonical_ratio, py::arg("s"),
        py::arg("beam"), py::arg("kin"), py::arg("consts"));
  m.def("drift_speed_for_field", &drift_speed_for_field, py::arg("s"),
        py::arg("B_i"), py::arg("consts"));
  m.def("fringe_profile", &fringe_profile, py::arg("shift_orders"),
        py::arg("n_periods"), py::arg("samples"));
  m.def("predict_fringes", &predict_fringes);

  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("abs_error_estimate", &QuadResult::abs_error_estimate)
      .def_readonly("evaluations", &QuadResult::evaluations);

  m.def("oracle_half_circle_weight", &oracle_half_circle_weight, py::arg("R"),
        py::arg("v_q"));
  m.def("oracle_cg", &oracle_cg, py::arg("R"));
  m.def("oracle_winding_integral", &oracle_winding_integral, py::arg("n"),
        py::arg("b"), py::arg("dq"));
  m.def("oracle_phi_resolved_charge", &oracle_phi_resolved_charge,
        py::arg("s"), py::arg("v_e"), py::arg("consts"));
}
