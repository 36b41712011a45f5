#include "abmodel/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace abmodel {

namespace {
constexpr double kPi = std::numbers::pi;
}

void SolenoidConfig::validate(const PhysConsts& consts) const {
  if (!(R > 0)) throw DomainError("solenoid radius R must be > 0");
  if (!(n > 0)) throw DomainError("winding density n must be > 0");
  if (!(Z > 0)) throw DomainError("charge count Z must be > 0");
  if (!(q_mag > 0)) throw DomainError("carrier charge magnitude must be > 0");
  if (!(std::abs(v_q) < consts.c0))
    throw DomainError("carrier drift speed |v_q| must be < c0");
}

double SolenoidConfig::cross_section() const { return kPi * R * R; }

double SolenoidConfig::internal_field(const PhysConsts& consts) const {
  return consts.mu0 * n * coil_current(*this);
}

void BeamConfig::validate(const SolenoidConfig& s,
                          const PhysConsts& consts) const {
  if (!(v_e > 0 && v_e < consts.c0))
    throw DomainError("electron speed v_e must satisfy 0 < v_e < c0");
  if (!(b > s.R)) {
    std::ostringstream msg;
    msg << "impact parameter b = " << b << " must exceed the coil radius R = "
        << s.R << " (the electron passes outside the coil; this also excludes "
        << "the pole of the closed form at b = pi R/4 = " << kPi * s.R / 4
        << ")";
    throw DomainError(msg.str());
  }
  if (v_e < 10.0 * std::abs(s.v_q)) {
    std::ostringstream msg;
    msg << "regime violation: v_e = " << v_e << " < 10 |v_q| = "
        << 10.0 * std::abs(s.v_q)
        << "; the approximate charge model requires v_e >> v_q";
    throw RegimeError(msg.str());
  }
}

double coil_current(const SolenoidConfig& s) {
  return -s.Z * s.q_mag * s.v_q / (2.0 * kPi * s.R);
}

CgOffsets cg_offsets(double R) {
  if (!(R > 0)) throw DomainError("cg_offsets: R must be > 0");
  const double xi = kPi * R / 4.0;
  return {xi, -xi};
}

SidePair effective_impact_parameters(double b, double R) {
  if (!(R > 0)) throw DomainError("effective_impact_parameters: R must be > 0");
  if (!(b > R)) {
    std::ostringstream msg;
    msg << "effective_impact_parameters: b = " << b
        << " must exceed R = " << R
        << " (excludes the pole at b = pi R/4 = " << kPi * R / 4.0 << ")";
    throw DomainError(msg.str());
  }
  const double xi = kPi * R / 4.0;
  return {b - xi, b + xi};
}

double mean_parallel_speed(double v_q) { return 2.0 * v_q / kPi; }

double momentum_kernel(double Q1, double Q2, double b, double v,
                       const PhysConsts& consts) {
  if (!(b > 0)) throw DomainError("momentum_kernel: b must be > 0 (kernel diverges at b = 0)");
  if (!(v > 0)) throw DomainError("momentum_kernel: v must be > 0 (kernel diverges at v = 0)");
  return Q1 * Q2 / (2.0 * kPi * consts.eps0 * b * v);
}

double lorentz_factor(double v, const PhysConsts& consts) {
  const double beta = v / consts.c0;
  if (!(std::abs(beta) < 1.0))
    throw DomainError("lorentz_factor: |v| must be < c0");
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

double lorentz_factor_difference(double v_e, double shift,
                                 const PhysConsts& consts) {
  const double c2 = consts.c0 * consts.c0;
  const double v_shifted = v_e - shift;
  if (!(v_e * v_e < c2) || !(v_shifted * v_shifted < c2))
    throw DomainError("lorentz_factor_difference: speeds must be < c0");
  // gamma - gamma_sh = (beta_e^2 - beta_sh^2) / (A B (A + B)), exact algebra.
  // The numerator beta_e^2 - beta_sh^2 = shift (2 v_e - shift) / c0^2 is
  // formed as a product, and B^2 = A^2 + numerator reuses it, so the shifted
  // speed itself never has to be rounded into a double.
  const double numerator = shift * (2.0 * v_e - shift) / c2;
  const double inv_gamma_e2 = (1.0 - v_e / consts.c0) * (1.0 + v_e / consts.c0);
  const double inv_gamma_e = std::sqrt(inv_gamma_e2);
  const double inv_gamma_sh = std::sqrt(inv_gamma_e2 + numerator);
  return numerator / (inv_gamma_e * inv_gamma_sh * (inv_gamma_e + inv_gamma_sh));
}

SidePair shifted_lorentz_factors(double v_e, double v_q,
                                 const PhysConsts& consts) {
  const double shift = std::abs(mean_parallel_speed(v_q));
  return {lorentz_factor(v_e - shift, consts),
          lorentz_factor(v_e + shift, consts)};
}

SidePair effective_charge_exact(const SolenoidConfig& s, double v_e,
                                const PhysConsts& consts) {
  const double shift = mean_parallel_speed(s.v_q);
  const double half_zq = 0.5 * s.Z * s.q_mag;
  return {half_zq * lorentz_factor_difference(v_e, shift, consts),
          half_zq * lorentz_factor_difference(v_e, -shift, consts)};
}

SidePair effective_charge_approx(const SolenoidConfig& s, double v_e,
                                 const PhysConsts& consts) {
  if (v_e < 10.0 * std::abs(s.v_q)) {
    std::ostringstream msg;
    msg << "effective_charge_approx: v_e = " << v_e << " < 10 |v_q| = "
        << 10.0 * std::abs(s.v_q) << "; outside the v_e >> v_q regime";
    throw RegimeError(msg.str());
  }
  const double dq = s.Z * s.q_mag * v_e * s.v_q / (kPi * consts.c0 * consts.c0);
  return {dq, -dq};
}

double winding_integrated_charge(double dq_eff, double n, double b) {
  if (!(b > 0)) throw DomainError("winding_integrated_charge: b must be > 0");
  if (!(n > 0)) throw DomainError("winding_integrated_charge: n must be > 0");
  return kPi * n * b * dq_eff;
}

double side_momentum(double q_eff, double b_eff, double v_e,
                     const PhysConsts& consts) {
  return momentum_kernel(-consts.e_mag, q_eff, b_eff, v_e, consts);
}

std::vector<std::string> regime_warnings(const SolenoidConfig& s,
                                         const BeamConfig& beam) {
  std::vector<std::string> warnings;
  const double vq = std::abs(s.v_q);
  if (beam.v_e >= 10.0 * vq && beam.v_e < 100.0 * vq) {
    std::ostringstream msg;
    msg << "v_e/|v_q| = " << beam.v_e / vq
        << " is below 100; the v_e >> v_q approximation is marginal";
    warnings.push_back(msg.str());
  }
  const double pole = kPi * kPi * s.R * s.R / (16.0 * beam.b * beam.b);
  if (1.0 - pole < 0.05) {
    std::ostringstream msg;
    msg << "near-pole geometry: 1 - (pi R)^2/(16 b^2) = " << 1.0 - pole
        << " < 0.05; the closed form is close to its singularity";
    warnings.push_back(msg.str());
  }
  return warnings;
}

MomentumBreakdown total_transverse_momentum(const SolenoidConfig& s,
                                            const BeamConfig& beam,
                                            const PhysConsts& consts) {
  consts.validate();
  s.validate(consts);
  beam.validate(s, consts);

  MomentumBreakdown out;
  // The result is mirror symmetric in the beam side: for side = minus_x the
  // near and far semicircles swap together with the sign of their mean
  // carrier velocity, leaving every product below unchanged. The pipeline is
  // therefore evaluated in the plus_x frame for either side.
  const SidePair b_eff = effective_impact_parameters(beam.b, s.R);
  out.b_eff_minus = b_eff.minus;
  out.b_eff_plus = b_eff.plus;
  out.mean_vqy = mean_parallel_speed(s.v_q);
  out.gamma = lorentz_factor(beam.v_e, consts);
  const SidePair gammas = shifted_lorentz_factors(beam.v_e, s.v_q, consts);
  out.gamma_minus = gammas.minus;
  out.gamma_plus = gammas.plus;

  const SidePair dq = effective_charge_approx(s, beam.v_e, consts);
  out.dq_eff_minus = dq.minus;
  out.dq_eff_plus = dq.plus;
  out.q_eff_minus = winding_integrated_charge(dq.minus, s.n, beam.b);
  out.q_eff_plus = winding_integrated_charge(dq.plus, s.n, beam.b);
  out.p_minus = side_momentum(out.q_eff_minus, b_eff.minus, beam.v_e, consts);
  out.p_plus = side_momentum(out.q_eff_plus, b_eff.plus, beam.v_e, consts);
  out.p_total = out.p_minus + out.p_plus;

  out.pole_proximity =
      kPi * kPi * s.R * s.R / (16.0 * beam.b * beam.b);
  const double e_signed = -consts.e_mag;
  const double B_i = s.internal_field(consts);
  out.p_total_closed_form = -e_signed * s.cross_section() * B_i /
                            (2.0 * beam.b * (1.0 - out.pole_proximity));
  out.warnings = regime_warnings(s, beam);
  return out;
}

}  // namespace abmodel
