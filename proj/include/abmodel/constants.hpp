#pragma once

namespace abmodel {

/// SI constants used throughout the pipeline. All magnitudes; signs are
/// applied explicitly at each use site (electron charge = -e_mag, coil
/// carriers = -q_mag).
struct PhysConsts {
  double c0;     ///< speed of light in vacuum [m/s]
  double mu0;    ///< magnetic constant [H/m]
  double eps0;   ///< electric constant [F/m]
  double h;      ///< Planck constant [J s]
  double e_mag;  ///< elementary charge magnitude [C]
  double m_e;    ///< electron rest mass [kg]

  /// CODATA 2018 values. eps0 is derived as 1/(mu0 c0^2), matching the
  /// published value to all quoted digits, so that mu0*eps0*c0^2 == 1 holds
  /// to machine precision.
  static PhysConsts codata2018();

  /// Throws DomainError unless all constants are strictly positive and
  /// eps0*mu0*c0^2 == 1 to relative 1e-9.
  void validate() const;

  /// Relative deviation of eps0*mu0*c0^2 from 1.
  double consistency_residual() const;
};

}  // namespace abmodel
