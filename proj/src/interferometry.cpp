#include "abmodel/interferometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "abmodel/errors.hpp"

namespace abmodel {

namespace {
constexpr double kPi = std::numbers::pi;
}

ElectronKinematics kinematics_from_energy(double T, const PhysConsts& consts) {
  if (!(T > 0)) throw DomainError("kinematics_from_energy: T must be > 0");
  const double rest_energy = consts.m_e * consts.c0 * consts.c0;
  const double gamma = 1.0 + T / rest_energy;
  // beta = sqrt(gamma^2 - 1)/gamma with gamma^2 - 1 = (gamma-1)(gamma+1);
  // gamma - 1 = T/(m c^2) is exact, so beta keeps full precision as T -> 0.
  const double gm1 = T / rest_energy;
  const double beta = std::sqrt(gm1 * (gamma + 1.0)) / gamma;
  ElectronKinematics kin;
  kin.kinetic_energy = T;
  kin.gamma = gamma;
  kin.v_e = beta * consts.c0;
  kin.p_e = gamma * consts.m_e * kin.v_e;
  kin.lambda_e = consts.h / kin.p_e;
  return kin;
}

ElectronKinematics kinematics_from_speed(double v_e, const PhysConsts& consts) {
  if (!(v_e > 0 && v_e < consts.c0))
    throw DomainError("kinematics_from_speed: need 0 < v_e < c0");
  const double beta = v_e / consts.c0;
  const double inv_gamma = std::sqrt((1.0 - beta) * (1.0 + beta));
  const double gamma = 1.0 / inv_gamma;
  // gamma - 1 = beta^2 / (inv_gamma (1 + inv_gamma)), cancellation-free
  const double gm1 = beta * beta / (inv_gamma * (1.0 + inv_gamma));
  ElectronKinematics kin;
  kin.gamma = gamma;
  kin.kinetic_energy = gm1 * consts.m_e * consts.c0 * consts.c0;
  kin.v_e = v_e;
  kin.p_e = gamma * consts.m_e * v_e;
  kin.lambda_e = consts.h / kin.p_e;
  return kin;
}

double deflection_angle(double p_total, double p_e) {
  if (!(p_e > 0)) throw DomainError("deflection_angle: p_e must be > 0");
  return std::atan(-p_total / p_e);
}

double fringe_order_shift(double delta, double b, double lambda_e) {
  if (!(b > 0)) throw DomainError("fringe_order_shift: b must be > 0");
  if (!(lambda_e > 0))
    throw DomainError("fringe_order_shift: lambda_e must be > 0");
  return 2.0 * b * std::sin(delta) / lambda_e;
}

double unit_shift_field_closed_form(const SolenoidConfig& s,
                                    const BeamConfig& beam,
                                    const PhysConsts& consts) {
  if (!(beam.b > s.R))
    throw DomainError("unit_shift_field: requires b > R");
  const double pole = kPi * kPi * s.R * s.R / (16.0 * beam.b * beam.b);
  return (consts.h / consts.e_mag) * (1.0 - pole) / s.cross_section();
}

double drift_speed_for_field(const SolenoidConfig& s, double B_i,
                             const PhysConsts& consts) {
  // B_i = -mu0 n Z q_mag v_q / (2 pi R)
  return -B_i * 2.0 * kPi * s.R / (consts.mu0 * s.n * s.Z * s.q_mag);
}

double canonical_unit_field(double S, const PhysConsts& consts) {
  if (!(S > 0)) throw DomainError("canonical_unit_field: S must be > 0");
  return consts.h / consts.e_mag / S;
}

double unit_shift_field(const SolenoidConfig& s, const BeamConfig& beam,
                        const ElectronKinematics& kin,
                        const PhysConsts& consts) {
  const double closed = unit_shift_field_closed_form(s, beam, consts);

  auto shift_at = [&](double field_mag) {
    SolenoidConfig driven = s;
    driven.v_q = drift_speed_for_field(s, -field_mag, consts);
    const MomentumBreakdown mb =
        total_transverse_momentum(driven, beam, consts);
    const double delta = deflection_angle(mb.p_total, kin.p_e);
    return std::abs(fringe_order_shift(delta, beam.b, kin.lambda_e));
  };

  // The shift is linear in the field up to the sin/atan correction, so a
  // fixed-point rescale converges in a couple of steps.
  double field = closed;
  double shift = shift_at(field);
  for (int iter = 0; iter < 64 && std::abs(shift - 1.0) > 1e-13; ++iter) {
    field /= shift;
    shift = shift_at(field);
  }
  if (std::abs(shift - 1.0) > 1e-10)
    throw ConsistencyError(
        "unit_shift_field: pipeline inversion failed to converge");
  if (std::abs(field - closed) > 1e-9 * closed) {
    std::ostringstream msg;
    msg << "unit_shift_field: inverted pipeline value " << field
        << " and closed form " << closed
        << " disagree beyond relative 1e-9";
    throw ConsistencyError(msg.str());
  }
  return field;
}

double model_to_canonical_ratio(const SolenoidConfig& s,
                                const BeamConfig& beam,
                                const ElectronKinematics& kin,
                                const PhysConsts& consts) {
  return canonical_unit_field(s.cross_section(), consts) /
         unit_shift_field(s, beam, kin, consts);
}

FringeProfile fringe_profile(double shift_orders, int n_periods, int samples) {
  if (n_periods < 1) throw DomainError("fringe_profile: n_periods must be >= 1");
  if (samples < 2 * n_periods * 8) {
    std::ostringstream msg;
    msg << "fringe_profile: " << samples << " samples undersample "
        << n_periods << " periods; need at least " << 2 * n_periods * 8;
    throw DomainError(msg.str());
  }
  const double reduced = shift_orders - std::floor(shift_orders);
  FringeProfile profile;
  profile.shift_orders = shift_orders;
  profile.screen_positions.reserve(samples);
  profile.intensities.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double u = -n_periods + 2.0 * n_periods * i / (samples - 1);
    const double c = std::cos(kPi * (u - reduced));
    profile.screen_positions.push_back(u);
    profile.intensities.push_back(c * c);
  }
  return profile;
}

FringePrediction predict_fringes(const SolenoidConfig& s,
                                 const BeamConfig& beam,
                                 const ElectronKinematics& kin,
                                 const MomentumBreakdown& mb,
                                 const PhysConsts& consts) {
  FringePrediction fp;
  fp.delta = deflection_angle(mb.p_total, kin.p_e);
  fp.order_shift = fringe_order_shift(fp.delta, beam.b, kin.lambda_e);
  fp.unit_shift_field = unit_shift_field(s, beam, kin, consts);
  fp.canonical_unit_field = canonical_unit_field(s.cross_section(), consts);
  fp.ratio = fp.canonical_unit_field / fp.unit_shift_field;
  return fp;
}

}  // namespace abmodel
