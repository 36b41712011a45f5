#pragma once

#include <cmath>
#include <random>

#include "abmodel/constants.hpp"
#include "abmodel/model.hpp"

namespace abmodel::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

struct RandomScenario {
  SolenoidConfig solenoid;
  BeamConfig beam;
};

/// Valid configuration with b/R in [b_over_R_lo, b_over_R_hi] and
/// v_q/v_e in [vq_ratio_lo, vq_ratio_hi].
inline RandomScenario random_scenario(std::mt19937_64& rng,
                                      const PhysConsts& consts,
                                      double b_over_R_lo = 1.05,
                                      double b_over_R_hi = 100.0,
                                      double vq_ratio_lo = 1e-12,
                                      double vq_ratio_hi = 1e-2) {
  RandomScenario sc;
  sc.solenoid.R = log_uniform(rng, 1e-3, 1.0);
  sc.solenoid.n = log_uniform(rng, 1e3, 1e6);
  sc.solenoid.Z = log_uniform(rng, 1e6, 1e12);
  sc.solenoid.q_mag = consts.e_mag;
  sc.beam.v_e = log_uniform(rng, 1e5, 0.95 * consts.c0);
  sc.solenoid.v_q =
      sc.beam.v_e * log_uniform(rng, vq_ratio_lo, vq_ratio_hi);
  sc.beam.b = sc.solenoid.R * uniform(rng, b_over_R_lo, b_over_R_hi);
  sc.beam.side = BeamSide::plus_x;
  return sc;
}

}  // namespace abmodel::testing
