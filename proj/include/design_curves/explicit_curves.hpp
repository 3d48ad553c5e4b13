#pragma once

#include <numeric>

#include "design_curves/lift.hpp"

namespace design_curves {

/// The explicit weighted (2t-1)-design curve on S^2:
///   alpha_1(s) = (-1)^floor(2ts) (4ts - 2 floor(2ts) - 1),
///   alpha_2 + i alpha_3 = sqrt(1 - alpha_1^2) e^{i(pi floor(2ts)/t + theta1(alpha_1))}.
/// Length is 2 pi t when theta1 is constant.
inline Curve explicit_s2(int t, const PhaseFn& theta1) {
  if (t < 1) throw Error(ErrorKind::InvariantViolation, "explicit_s2 needs t >= 1");
  int n = 2 * t;
  std::vector<NodeId> nodes(n);
  for (auto& id : nodes) id = next_node_id();
  std::vector<Segment> segs(n);
  for (int k = 0; k < n; ++k) {
    Segment& s = segs[k];
    s.kind = SegmentKind{ExplicitS2Piece{t, k, theta1}};
    s.weight = 1.0 / n;
    s.start_node = nodes[k];
    s.end_node = nodes[(k + 1) % n];
  }
  return Curve(std::move(segs), true);
}

/// theta1(0) = m pi - 2 n pi / t for integers m, n is rejected; the reachable
/// values m t - 2 n form gcd(t,2) Z, so the test reduces to a nearest-multiple
/// check of t theta1(0) / pi.
inline void require_phase_exclusion(int t, const PhaseFn& theta1) {
  double x = t * theta1(0.0) / kPi;
  double g = (t % 2 == 0) ? 2.0 : 1.0;
  double nearest = g * std::round(x / g);
  if (std::abs(x - nearest) < 1e-9)
    throw Error(ErrorKind::PhaseExclusionViolation,
                "theta1(0) hits the excluded set m pi - 2 n pi / t");
}

/// The explicit weighted (4t-1)-design curve on S^3: the lift of the
/// coordinate-permuted explicit S^2 curve, alpha = (alpha_3, alpha_2, alpha_1),
/// with t+1 -> 4t wraps and global phase e^{2 pi i s + i theta2(r)}.
inline Curve explicit_s3(int t, const PhaseFn& theta1, const PhaseFn& theta2) {
  if (t < 1) throw Error(ErrorKind::InvariantViolation, "explicit_s3 needs t >= 1");
  require_phase_exclusion(t, theta1);
  Curve base = explicit_s2(t, theta1);
  return lift_s3(base, theta2, 4 * t - 1, {2, 1, 0});
}

/// Pointwise evaluator of the strict published formula with
/// r := 4 pi t s - floor(4 pi t s). Kept for inspection only: the curve it
/// defines is not closed (the base cycles an irrational number of times) and
/// fails certification, while the composition above passes; see explicit_s3.
inline Vec explicit_s3_strict_formula(int t, const PhaseFn& theta1, const PhaseFn& theta2,
                                      double s) {
  Curve base = explicit_s2(t, theta1);
  double rr = 4.0 * kPi * t * s;
  double r = rr - std::floor(rr);
  Vec a = base.eval(r);
  double A = a[2];
  std::complex<double> C(a[1], a[0]);
  double f = std::sqrt(0.5 * (1.0 + A));
  double phi = 2.0 * kPi * s + theta2(r);
  std::complex<double> e(std::cos(phi), std::sin(phi));
  std::complex<double> z0 = f * e;
  std::complex<double> z1 = std::conj(C) / (2.0 * f) * e;
  Vec out(4);
  out << z0.real(), z0.imag(), z1.real(), z1.imag();
  return out;
}

}  // namespace design_curves
