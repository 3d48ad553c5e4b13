#pragma once

#include "design_curves/common.hpp"

namespace design_curves {

/// Unit vector in R^D on the sphere S^{D-1}.
struct Point {
  Vec coords;

  Point() = default;
  explicit Point(Vec c, double tol = 1e-12) : coords(std::move(c)) {
    if (coords.size() < 2)
      throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be >= 2");
    if (std::abs(coords.norm() - 1.0) > tol)
      throw Error(ErrorKind::InvariantViolation,
                  "point norm deviates from 1 by " + std::to_string(std::abs(coords.norm() - 1.0)));
  }

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[i]; }
};

inline Point normalized_point(Vec c) {
  double n = c.norm();
  if (n < 1e-14) throw Error(ErrorKind::InvariantViolation, "cannot normalize zero vector");
  return Point(c / n);
}

}  // namespace design_curves
