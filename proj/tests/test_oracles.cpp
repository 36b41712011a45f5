#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abmodel/quadrature.hpp"
#include "test_support.hpp"

using namespace abmodel;
using abmodel::testing::log_uniform;
using abmodel::testing::random_scenario;
using abmodel::testing::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
const PhysConsts kConsts = PhysConsts::codata2018();
}  // namespace

TEST_CASE("quadrature result contract") {
  const QuadResult r = oracle_half_circle_weight(1.0, 1.0);
  CHECK(r.abs_error_estimate >= 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("adaptive integrator reports non-convergence") {
  auto spike = [](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); };
  CHECK_THROWS_AS(integrate_adaptive(spike, -1.0, 1.0, 1e-15, 0.0, 8),
                  ConsistencyError);
}

TEST_CASE("half-circle weight oracle") {
  CHECK(oracle_half_circle_weight(1.0, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-12).scale(0.0));
  CHECK(oracle_half_circle_weight(1.0, 0.0).value == 0.0);
  CHECK(oracle_half_circle_weight(0.37, 5.1).value ==
        doctest::Approx(3.774).epsilon(1e-12).scale(0.0));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const double R = log_uniform(rng, 1e-6, 1e3);
    const double v_q = log_uniform(rng, 1e-9, 1e7);
    CHECK(rel_diff(oracle_half_circle_weight(R, v_q).value, 2.0 * R * v_q) <
          1e-12);
  }
}

TEST_CASE("semicircle centroid oracle") {
  CHECK(oracle_cg(1.0).value == doctest::Approx(kPi / 4.0).epsilon(1e-12).scale(0.0));
  CHECK(oracle_cg(0.01).value ==
        doctest::Approx(7.8539816339744831e-3).epsilon(1e-12).scale(0.0));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const double R = log_uniform(rng, 1e-6, 1e3);
    CHECK(rel_diff(oracle_cg(R).value, kPi * R / 4.0) < 1e-12);
    // linear in R
    CHECK(rel_diff(oracle_cg(2.0 * R).value, 2.0 * oracle_cg(R).value) < 1e-12);
  }
}

TEST_CASE("winding integral oracle") {
  CHECK(oracle_winding_integral(1.0, 1.0, 0.0).value == 0.0);
  CHECK(oracle_winding_integral(1.0, 1.0, 1.0).value ==
        doctest::Approx(kPi).epsilon(1e-9).scale(0.0));
  CHECK(rel_diff(oracle_winding_integral(1.0, 0.5, 1.0).value,
                 0.5 * oracle_winding_integral(1.0, 1.0, 1.0).value) < 1e-9);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const double n = log_uniform(rng, 1.0, 1e6);
    const double b = log_uniform(rng, 1e-3, 1e2);
    const double dq = log_uniform(rng, 1e-25, 1e-15);
    CHECK(rel_diff(oracle_winding_integral(n, b, dq).value,
                   winding_integrated_charge(dq, n, b)) < 1e-9);
  }
}

TEST_CASE("axial components cancel over symmetric winding limits") {
  // the axis-parallel projection weights each winding by sin(psi) cos(psi),
  // an odd integrand whose symmetric integral must vanish relative to the
  // transverse momentum scale
  SolenoidConfig s{0.01, 1e5, 1e10, kConsts.e_mag, 1e-3};
  BeamConfig beam{9.844e7, 0.02, BeamSide::plus_x};
  const MomentumBreakdown mb = total_transverse_momentum(s, beam, kConsts);

  const double dq = mb.dq_eff_minus;
  auto axial = [&](double psi) {
    return s.n * dq * beam.b * std::sin(psi) * std::cos(psi);
  };
  const double q_scale = std::abs(mb.q_eff_minus);
  const QuadResult r = integrate_adaptive(axial, -kPi / 2.0 * (1 - 1e-14),
                                          kPi / 2.0 * (1 - 1e-14), 1e-9,
                                          1e-14 * q_scale);
  const double p_axial =
      std::abs(side_momentum(r.value, mb.b_eff_minus, beam.v_e, kConsts));
  CHECK(p_axial <= 1e-12 * std::abs(mb.p_total));
}

TEST_CASE("angle-averaged charge oracle") {
  SolenoidConfig s{0.01, 1e5, 1e10, kConsts.e_mag, 1e-3};
  const double v_e = 1e8;

  SUBCASE("zero drift") {
    SolenoidConfig still = s;
    still.v_q = 0.0;
    const auto [lo, hi] = oracle_phi_resolved_charge(still, v_e, kConsts);
    CHECK(lo.value == 0.0);
    CHECK(hi.value == 0.0);
  }
  SUBCASE("agrees with the mean-velocity shortcut to first order") {
    const auto [lo, hi] = oracle_phi_resolved_charge(s, v_e, kConsts);
    const SidePair approx = effective_charge_approx(s, v_e, kConsts);
    CHECK(rel_diff(lo.value, approx.minus) <= 1e-10);
    CHECK(rel_diff(hi.value, approx.plus) <= 1e-10);
  }
  SUBCASE("antisymmetric between semicircles") {
    const auto [lo, hi] = oracle_phi_resolved_charge(s, v_e, kConsts);
    CHECK(rel_diff(lo.value, -hi.value) <= 1e-10);
  }
  SUBCASE("regime guard") {
    SolenoidConfig fast = s;
    fast.v_q = v_e / 2.0;
    CHECK_THROWS_AS(oracle_phi_resolved_charge(fast, v_e, kConsts),
                    RegimeError);
  }
}

TEST_CASE("angle-averaged oracle deviation is bounded by 10 v_q / v_e") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 40; ++i) {
    auto sc = random_scenario(rng, kConsts, 1.5, 50.0, 1e-12, 1e-4);
    const auto [lo, hi] =
        oracle_phi_resolved_charge(sc.solenoid, sc.beam.v_e, kConsts);
    const SidePair approx =
        effective_charge_approx(sc.solenoid, sc.beam.v_e, kConsts);
    const double bound = 10.0 * std::abs(sc.solenoid.v_q) / sc.beam.v_e;
    CHECK(rel_diff(lo.value, approx.minus) <= bound);
    CHECK(rel_diff(hi.value, approx.plus) <= bound);
  }
}
