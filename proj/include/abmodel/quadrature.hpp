#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "abmodel/constants.hpp"
#include "abmodel/errors.hpp"
#include "abmodel/model.hpp"

namespace abmodel {

/// Result of one adaptive quadrature run.
struct QuadResult {
  double value = 0;
  double abs_error_estimate = 0;
  std::size_t evaluations = 0;
};

namespace quad_detail {

// Gauss-Kronrod 15(7) abscissae and weights on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class Real, class F>
void gk15(const F& f, Real a, Real b, Real& kronrod, Real& err) {
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  Real gauss = 0;
  kronrod = 0;
  for (int i = 0; i < 8; ++i) {
    const Real node = half * Real(kKronrodNodes[i]);
    const Real w = Real(kKronrodWeights[i]);
    if (i == 7) {
      const Real fc = f(mid);
      kronrod += w * fc;
      gauss += Real(kGaussWeights[3]) * fc;
    } else {
      const Real sum = f(mid - node) + f(mid + node);
      kronrod += w * sum;
      if (i % 2 == 1) gauss += Real(kGaussWeights[i / 2]) * sum;
    }
  }
  kronrod *= half;
  gauss *= half;
  using std::abs;
  err = abs(kronrod - gauss);
}

}  // namespace quad_detail

/// Adaptive Gauss-Kronrod 15(7) with interval bisection. Accepts an interval
/// once the embedded-rule error estimate drops below its share of the
/// tolerance budget. Throws ConsistencyError when max_depth subdivision still
/// leaves the estimate above tolerance.
template <class Real, class F>
QuadResult integrate_adaptive(const F& f, Real a, Real b, double rel_tol,
                              double abs_tol = 0.0, int max_depth = 48) {
  struct Interval {
    Real a, b, value, err;
    int depth;
  };
  using std::abs;

  std::size_t evals = 0;
  auto evaluate = [&](Real lo, Real hi, int depth) {
    Interval iv{lo, hi, Real(0), Real(0), depth};
    quad_detail::gk15(f, lo, hi, iv.value, iv.err);
    evals += 15;
    return iv;
  };

  // The relative tolerance is scaled by the running global estimate
  // (accepted plus pending intervals), not the single coarse pass; a sharp
  // feature can inflate the coarse value by many orders of magnitude, which
  // would silently loosen the tolerance on every interval.
  Real accepted_sum = 0, pending_sum = 0, total_err = 0;
  std::vector<Interval> stack{evaluate(a, b, 0)};
  pending_sum = stack.front().value;
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    pending_sum -= iv.value;
    const Real scale = abs(accepted_sum + pending_sum + iv.value);
    const Real scale_tol = (Real(abs_tol) + Real(rel_tol) * scale) *
                           abs(iv.b - iv.a) / abs(b - a);
    if (iv.err <= scale_tol) {
      accepted_sum += iv.value;
      total_err += iv.err;
    } else if (iv.depth >= max_depth) {
      throw ConsistencyError(
          "integrate_adaptive: subdivision limit reached before the error "
          "estimate met tolerance");
    } else {
      const Real mid = (iv.a + iv.b) / 2;
      const Interval left = evaluate(iv.a, mid, iv.depth + 1);
      const Interval right = evaluate(mid, iv.b, iv.depth + 1);
      pending_sum += left.value + right.value;
      stack.push_back(left);
      stack.push_back(right);
    }
  }
  return {static_cast<double>(accepted_sum), static_cast<double>(total_err),
          evals};
}

/// Integral of R v_q sin(phi) over [0, pi]; converges to 2 R v_q.
QuadResult oracle_half_circle_weight(double R, double v_q);

/// Semicircle centroid offset (R^2 v_q / M) * integral of sin^2(phi) over
/// [0, pi] with M = 2 R v_q; converges to pi R / 4.
QuadResult oracle_cg(double R);

/// Winding integral of n dq b^2/(b^2 + z^2) over the whole axis, evaluated
/// through the substitution z = b tan(psi) on (-pi/2, pi/2); converges to
/// pi n b dq.
QuadResult oracle_winding_integral(double n, double b, double dq);

/// Per-turn effective charges recomputed by averaging the quadratic
/// time-dilation factor 1 + v^2/(2 c0^2) over the winding angle instead of
/// using the mean-velocity shortcut:
///   (Z q_mag / 2 pi) * integral of [g(v_e) - g(v_e - v_q sin(phi))] d(phi)
/// over [0, pi] and [pi, 2 pi]. Evaluated in 50-digit arithmetic because the
/// factor difference cancels ~19 leading digits at realistic v_q.
std::pair<QuadResult, QuadResult> oracle_phi_resolved_charge(
    const SolenoidConfig& s, double v_e, const PhysConsts& consts);

}  // namespace abmodel
