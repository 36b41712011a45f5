#include <doctest.h>

#include "abmodel/constants.hpp"
#include "abmodel/errors.hpp"

using namespace abmodel;

TEST_CASE("codata2018 values") {
  const PhysConsts c = PhysConsts::codata2018();
  CHECK(c.c0 == 299792458.0);
  CHECK(c.h == 6.62607015e-34);
  CHECK(c.e_mag == 1.602176634e-19);
  CHECK(c.mu0 == doctest::Approx(1.25663706212e-6).epsilon(1e-12).scale(0.0));
  // eps0 is derived from mu0 and c0 but must match the published value
  CHECK(c.eps0 == doctest::Approx(8.8541878128e-12).epsilon(1e-10).scale(0.0));
  CHECK(c.m_e == doctest::Approx(9.1093837015e-31).epsilon(1e-12).scale(0.0));
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("constant-set consistency") {
  const PhysConsts c = PhysConsts::codata2018();
  CHECK(c.consistency_residual() < 1e-12);

  PhysConsts bad = c;
  bad.mu0 *= 1.0 + 1e-6;
  CHECK_THROWS_AS(bad.validate(), DomainError);

  PhysConsts negative = c;
  negative.h = -negative.h;
  CHECK_THROWS_AS(negative.validate(), DomainError);
}
