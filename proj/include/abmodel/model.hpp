#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abmodel/constants.hpp"
#include "abmodel/errors.hpp"

namespace abmodel {

enum class BeamSide { plus_x, minus_x };

/// Geometry and drive of the solenoid. The current is carried by negative
/// charges -q_mag drifting with speed v_q along the windings; a negative v_q
/// means reversed drift direction.
struct SolenoidConfig {
  double R;      ///< coil radius [m]
  double n;      ///< winding density [1/m]
  double Z;      ///< number of mobile charges per winding
  double q_mag;  ///< magnitude of one mobile charge [C]
  double v_q;    ///< carrier drift speed, signed [m/s]

  /// Throws DomainError on R <= 0, n <= 0, Z <= 0, q_mag <= 0 or |v_q| >= c0.
  void validate(const PhysConsts& consts) const;

  double cross_section() const;                          ///< S = pi R^2 [m^2]
  double internal_field(const PhysConsts& consts) const; ///< B_i = mu0 n I [T]
};

/// Test-electron kinematics relative to a paired solenoid.
struct BeamConfig {
  double v_e;     ///< electron speed [m/s]
  double b;       ///< impact parameter [m]
  BeamSide side;  ///< which side of the coil the electron passes

  /// Throws DomainError unless 0 < v_e < c0 and b > R (keeps the electron
  /// outside the coil and away from the b = pi R/4 pole), RegimeError unless
  /// v_e >= 10 |v_q|.
  void validate(const SolenoidConfig& s, const PhysConsts& consts) const;
};

struct SidePair {
  double minus;
  double plus;
};

/// Semicircle centroid x coordinates, (+pi R/4, -pi R/4).
struct CgOffsets {
  double xi_plus;
  double xi_minus;
};

/// Every intermediate of the momentum-transfer pipeline, retained for audit.
struct MomentumBreakdown {
  double b_eff_minus = 0;   ///< near-side effective impact parameter [m]
  double b_eff_plus = 0;    ///< far-side effective impact parameter [m]
  double mean_vqy = 0;      ///< mean carrier speed along the beam, 2 v_q/pi [m/s]
  double gamma = 0;         ///< Lorentz factor of the electron
  double gamma_minus = 0;   ///< Lorentz factor at relative speed v_e - 2 v_q/pi
  double gamma_plus = 0;    ///< Lorentz factor at relative speed v_e + 2 v_q/pi
  double dq_eff_minus = 0;  ///< effective charge per turn, near semicircle [C]
  double dq_eff_plus = 0;   ///< effective charge per turn, far semicircle [C]
  double q_eff_minus = 0;   ///< winding-integrated effective charge, near [C]
  double q_eff_plus = 0;    ///< winding-integrated effective charge, far [C]
  double p_minus = 0;       ///< transverse momentum from the near side [kg m/s]
  double p_plus = 0;        ///< transverse momentum from the far side [kg m/s]
  double p_total = 0;       ///< p_minus + p_plus [kg m/s]
  double p_total_closed_form = 0;  ///< -e S B_i / (2 b [1 - (pi R)^2/(4 b)^2])
  double pole_proximity = 0;       ///< (pi R)^2 / (16 b^2)
  std::vector<std::string> warnings;
};

/// Current of one winding, I = -Z q_mag v_q / (2 pi R). Negative for
/// positive drift (negative carriers).
double coil_current(const SolenoidConfig& s);

/// Centroid x coordinates of the two current semicircles, +-pi R/4.
CgOffsets cg_offsets(double R);

/// b -+ pi R/4 for b > R > 0. Throws DomainError for b <= R.
SidePair effective_impact_parameters(double b, double R);

/// Mean beam-parallel carrier speed over one semicircle, 2 v_q / pi.
/// The far semicircle carries the opposite sign; callers apply it.
double mean_parallel_speed(double v_q);

/// Transverse momentum transferred between charges Q1 and Q2 passing at
/// distance b with relative speed v: Q1 Q2 / (2 pi eps0 b v).
double momentum_kernel(double Q1, double Q2, double b, double v,
                       const PhysConsts& consts);

/// (1 - v^2/c0^2)^(-1/2). Throws DomainError for |v| >= c0.
double lorentz_factor(double v, const PhysConsts& consts);

/// gamma(v_e) - gamma(v_e - shift) evaluated without cancellation. The
/// shifted speed is never formed explicitly (rounding v_e - shift would
/// perturb a small shift by ulp(v_e)); instead the identity
/// (beta_e^2 - beta_sh^2) / (A B (A + B)) with A = 1/gamma(v_e),
/// B = 1/gamma(v_sh) is used, where beta_e^2 - beta_sh^2 =
/// shift (2 v_e - shift) / c0^2 and B^2 = A^2 + that same product.
/// Exact Lorentz factors throughout.
double lorentz_factor_difference(double v_e, double shift,
                                 const PhysConsts& consts);

/// Lorentz factors at the shifted relative speeds v_e -+ 2 v_q / pi.
SidePair shifted_lorentz_factors(double v_e, double v_q,
                                 const PhysConsts& consts);

/// Per-turn effective charges (Z q_mag / 2)(gamma - gamma_-+) with exact
/// Lorentz factors (cancellation-safe evaluation).
SidePair effective_charge_exact(const SolenoidConfig& s, double v_e,
                                const PhysConsts& consts);

/// Per-turn effective charges in the v_e >> v_q regime,
/// +- Z q_mag v_e v_q / (pi c0^2); exactly antisymmetric.
/// Throws RegimeError when v_e < 10 |v_q|.
SidePair effective_charge_approx(const SolenoidConfig& s, double v_e,
                                 const PhysConsts& consts);

/// Integral of the per-turn charge over all windings: pi n b dq_eff.
double winding_integrated_charge(double dq_eff, double n, double b);

/// Transverse momentum from one winding-integrated charge: the pair kernel
/// with Q1 = -e_mag (the electron) and Q2 = q_eff at distance b_eff.
double side_momentum(double q_eff, double b_eff, double v_e,
                     const PhysConsts& consts);

/// Full pipeline from configuration to total transverse momentum. Also
/// evaluates the closed form -e S B_i / (2 b [1 - (pi R)^2/(4 b)^2]) with
/// signed e = -e_mag and signed B_i; both values are recorded.
MomentumBreakdown total_transverse_momentum(const SolenoidConfig& s,
                                            const BeamConfig& beam,
                                            const PhysConsts& consts);

/// Non-fatal regime notes: soft warning when 10 |v_q| <= v_e < 100 |v_q|,
/// near-pole warning when 1 - (pi R)^2/(16 b^2) < 0.05.
std::vector<std::string> regime_warnings(const SolenoidConfig& s,
                                         const BeamConfig& beam);

}  // namespace abmodel
