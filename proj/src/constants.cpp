#include "abmodel/constants.hpp"

#include <cmath>

#include "abmodel/errors.hpp"

namespace abmodel {

PhysConsts PhysConsts::codata2018() {
  PhysConsts c{};
  c.c0 = 299792458.0;           // exact
  c.mu0 = 1.25663706212e-6;     // CODATA 2018
  c.eps0 = 1.0 / (c.mu0 * c.c0 * c.c0);  // derived, keeps eps0 mu0 c0^2 == 1
  c.h = 6.62607015e-34;         // exact
  c.e_mag = 1.602176634e-19;    // exact
  c.m_e = 9.1093837015e-31;     // CODATA 2018
  return c;
}

double PhysConsts::consistency_residual() const {
  return std::abs(eps0 * mu0 * c0 * c0 - 1.0);
}

void PhysConsts::validate() const {
  if (!(c0 > 0 && mu0 > 0 && eps0 > 0 && h > 0 && e_mag > 0 && m_e > 0))
    throw DomainError("physical constants must all be strictly positive");
  if (consistency_residual() > 1e-9)
    throw DomainError(
        "inconsistent constants: eps0 * mu0 * c0^2 deviates from 1 by more "
        "than relative 1e-9");
}

}  // namespace abmodel
