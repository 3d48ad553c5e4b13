#pragma once

#include <memory>

#include "design_curves/curve.hpp"
#include "design_curves/design_set.hpp"
#include "design_curves/quadrature.hpp"

namespace design_curves {

/// The w_{X,M} construction: given a weighted design set X = {x_i} of even
/// size on S^{d-1} and a smooth path M : [-1,1] -> O(d), segment i sweeps the
/// first coordinate across [-1,1] (alternating direction, starting -1 -> +1)
/// while the remaining coordinates follow sqrt(1-u^2) M(u) x_i. Segment i
/// occupies the parameter window [Lambda_{i-1}, Lambda_i].
inline Curve build_wxm(const WeightedDesignSet& x, const RotationPath& m) {
  x.validate();
  if (x.size() % 2 != 0)
    throw Error(ErrorKind::OddSetSize, "w_{X,M} needs an even number of points");
  int d = x.ambient_dim();
  if (m.dim() != d)
    throw Error(ErrorKind::DimensionMismatch, "rotation path dimension does not match set");
  auto path = std::make_shared<RotationPath>(m);
  size_t n = x.size();
  std::vector<NodeId> nodes(n);
  for (auto& id : nodes) id = next_node_id();
  std::vector<Segment> segs(n);
  for (size_t k = 0; k < n; ++k) {
    Segment& s = segs[k];
    s.kind = SegmentKind{WxmPiece{path, x.points[k].coords, (k % 2 == 0) ? 1 : -1}};
    s.weight = x.weights[k];
    s.start_node = nodes[k];
    s.end_node = nodes[(k + 1) % n];
  }
  return Curve(std::move(segs), true);
}

/// Single-plane spin rate chosen by bisection so that the measured length of
/// w_{X,M} hits the target C >= pi |X| (within 1e-8).
struct TargetedWxm {
  Curve curve;
  double spin_rate;
  double length;
};

inline TargetedWxm build_wxm_with_length(const WeightedDesignSet& x, double target_length,
                                         int plane_i = 0, int plane_j = 1) {
  int d = x.ambient_dim();
  double base = kPi * static_cast<double>(x.size());
  if (target_length < base - 1e-12)
    throw Error(ErrorKind::InvariantViolation,
                "target below the minimum length pi*|X| of the construction");
  auto curve_at = [&](double omega) {
    return build_wxm(x, RotationPath::plane_spin(d, plane_i, plane_j, PhaseFn::linear(0.0, omega)));
  };
  double lo = 0.0, hi = 1.0;
  while (curve_length(curve_at(hi)) < target_length) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw Error(ErrorKind::InvariantViolation, "spin bisection diverged");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double len = curve_length(curve_at(mid));
    if (std::abs(len - target_length) < 1e-8) {
      return {curve_at(mid), mid, len};
    }
    (len < target_length ? lo : hi) = mid;
  }
  double mid = 0.5 * (lo + hi);
  Curve c = curve_at(mid);
  double len = curve_length(c);
  if (std::abs(len - target_length) > 1e-6)
    throw Error(ErrorKind::QuadratureNonconvergence, "length targeting did not converge");
  return {std::move(c), mid, len};
}

}  // namespace design_curves
