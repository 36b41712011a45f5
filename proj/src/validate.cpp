#include "abmodel/validate.hpp"

#include <cmath>
#include <numbers>

#include "abmodel/interferometry.hpp"
#include "abmodel/quadrature.hpp"

namespace abmodel {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult make_check(std::string name, double value, double reference,
                       double rel_tol) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.abs_error = std::abs(value - reference);
  const double scale = std::max(std::abs(reference), 1e-300);
  c.rel_error = c.abs_error / scale;
  c.tolerance = rel_tol;
  c.passed = c.rel_error <= rel_tol;
  return c;
}

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig& cfg) {
  std::vector<CheckResult> checks;
  const PhysConsts& consts = cfg.consts;
  const SolenoidConfig& s = cfg.solenoid;

  checks.push_back(make_check("constants_consistency",
                              consts.eps0 * consts.mu0 * consts.c0 * consts.c0,
                              1.0, 1e-9));
  if (!checks.back().passed) return checks;  // everything downstream depends on it

  const ElectronKinematics kin =
      cfg.v_e ? kinematics_from_speed(*cfg.v_e, consts)
              : kinematics_from_energy(*cfg.kinetic_energy_eV * consts.e_mag,
                                       consts);
  const BeamConfig beam{kin.v_e, cfg.b, cfg.side};

  // smooth half-circle oracles
  const QuadResult weight = oracle_half_circle_weight(s.R, s.v_q);
  checks.push_back(make_check("half_circle_weight_quadrature", weight.value,
                              2.0 * s.R * s.v_q, 1e-12));
  const QuadResult cg = oracle_cg(s.R);
  checks.push_back(
      make_check("semicircle_centroid_quadrature", cg.value, kPi * s.R / 4.0, 1e-12));

  // improper winding integral
  const SidePair dq = effective_charge_approx(s, kin.v_e, consts);
  const QuadResult winding = oracle_winding_integral(s.n, cfg.b, dq.minus);
  checks.push_back(make_check("winding_integral_quadrature", winding.value,
                              winding_integrated_charge(dq.minus, s.n, cfg.b),
                              1e-9));

  // angle-averaged charge oracle vs the mean-velocity shortcut
  const auto [phi_minus, phi_plus] =
      oracle_phi_resolved_charge(s, kin.v_e, consts);
  const double charge_tol = 10.0 * std::abs(s.v_q) / kin.v_e;
  checks.push_back(make_check("phi_resolved_charge_minus", phi_minus.value,
                              dq.minus, charge_tol));
  checks.push_back(make_check("phi_resolved_charge_plus", phi_plus.value,
                              dq.plus, charge_tol));

  // per-side sum vs closed form
  const MomentumBreakdown mb = total_transverse_momentum(s, beam, consts);
  checks.push_back(make_check("per_side_sum_vs_closed_form", mb.p_total,
                              mb.p_total_closed_form, 1e-12));

  // round trip: drive the coil at the one-order field, expect |shift| = 1
  const double unit_field = unit_shift_field(s, beam, kin, consts);
  SolenoidConfig driven = s;
  driven.v_q = drift_speed_for_field(s, -unit_field, consts);
  const MomentumBreakdown mb1 = total_transverse_momentum(driven, beam, consts);
  const double shift = fringe_order_shift(
      deflection_angle(mb1.p_total, kin.p_e), cfg.b, kin.lambda_e);
  checks.push_back(
      make_check("unit_field_round_trip", std::abs(shift), 1.0, 1e-9));

  return checks;
}

}  // namespace abmodel
