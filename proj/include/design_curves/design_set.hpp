#pragma once

#include <string>
#include <vector>

#include "design_curves/multi_index.hpp"
#include "design_curves/point.hpp"
#include "design_curves/report.hpp"

namespace design_curves {

/// Weighted t-design set: points x_i on a sphere with positive weights
/// lambda(x_i) summing to 1.
struct WeightedDesignSet {
  std::vector<Point> points;
  std::vector<double> weights;
  int claimed_strength = 0;

  WeightedDesignSet() = default;
  WeightedDesignSet(std::vector<Point> pts, std::vector<double> ws, int strength)
      : points(std::move(pts)), weights(std::move(ws)), claimed_strength(strength) {
    validate();
  }

  int ambient_dim() const { return points.front().dim(); }
  int sphere_dim() const { return ambient_dim() - 1; }
  size_t size() const { return points.size(); }

  void validate() const {
    if (points.empty() || points.size() != weights.size())
      throw Error(ErrorKind::InvariantViolation, "points/weights size mismatch");
    double total = 0.0;
    for (double w : weights) {
      if (w <= 0.0) throw Error(ErrorKind::WeightInvariantViolation, "weights must be positive");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw Error(ErrorKind::WeightInvariantViolation,
                  "weights sum to " + std::to_string(total) + ", expected 1");
    int D = points.front().dim();
    for (const auto& p : points)
      if (p.dim() != D) throw Error(ErrorKind::DimensionMismatch, "mixed point dimensions");
  }
};

namespace detail {

inline std::vector<Point> regular_polygon(int s) {
  std::vector<Point> pts;
  pts.reserve(s);
  for (int k = 0; k < s; ++k) {
    Vec v(2);
    v << std::cos(2.0 * kPi * k / s), std::sin(2.0 * kPi * k / s);
    pts.emplace_back(v);
  }
  return pts;
}

/// Regular simplex on S^{d-1}: d+1 unit vertices with pairwise dot -1/d,
/// realized through the Helmert orthonormal basis of the hyperplane sum x=0.
inline std::vector<Point> regular_simplex(int d) {
  int n = d + 1;
  Mat h(d, n);  // rows: orthonormal basis of {x in R^n : sum x = 0}
  for (int k = 1; k <= d; ++k) {
    double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int j = 0; j < n; ++j) {
      if (j < k)
        h(k - 1, j) = 1.0 / norm;
      else if (j == k)
        h(k - 1, j) = -static_cast<double>(k) / norm;
      else
        h(k - 1, j) = 0.0;
    }
  }
  std::vector<Point> pts;
  double scale = std::sqrt(static_cast<double>(n) / d);  // maps centered e_j to unit length
  for (int j = 0; j < n; ++j) {
    Vec e = Vec::Zero(n);
    e[j] = 1.0;
    Vec centered = e - Vec::Constant(n, 1.0 / n);
    Vec v = scale * (h * centered);
    pts.push_back(normalized_point(v));
  }
  return pts;
}

/// Cross-polytope vertices, ordered e_1..e_d, -e_1..-e_d so that consecutive
/// vertices are never antipodal.
inline std::vector<Point> cross_polytope(int d) {
  std::vector<Point> pts;
  for (int sgn : {1, -1})
    for (int i = 0; i < d; ++i) {
      Vec v = Vec::Zero(d);
      v[i] = sgn;
      pts.emplace_back(v);
    }
  return pts;
}

/// Tetrahedron on S^2 with apex at the south pole; the other three vertices
/// sit on the circle at height 1/3 (the configuration behind Ehler's first
/// hybrid example).
inline std::vector<Point> tetrahedron_apex_down() {
  std::vector<Point> pts;
  Vec apex(3);
  apex << 0.0, 0.0, -1.0;
  pts.emplace_back(apex);
  double r = 2.0 * std::sqrt(2.0) / 3.0;
  for (int k = 0; k < 3; ++k) {
    Vec v(3);
    v << r * std::cos(2.0 * kPi * k / 3), r * std::sin(2.0 * kPi * k / 3), 1.0 / 3.0;
    pts.push_back(normalized_point(v));
  }
  return pts;
}

}  // namespace detail

/// Built-in design set families. `param` is the vertex count for polygon and
/// the sphere dimension for simplex / cross_polytope; octahedron and
/// tetrahedron live on S^2.
inline WeightedDesignSet builtin_set(const std::string& name, int param = 0) {
  std::vector<Point> pts;
  int strength = 0;
  if (name == "polygon") {
    if (param < 2) throw Error(ErrorKind::UnknownFamily, "polygon needs vertex count >= 2");
    pts = detail::regular_polygon(param);
    strength = param - 1;
  } else if (name == "simplex") {
    int d = param;
    if (d < 1) throw Error(ErrorKind::UnknownFamily, "simplex needs sphere dimension >= 1");
    pts = detail::regular_simplex(d + 1);
    strength = 2;
  } else if (name == "cross_polytope") {
    int d = param;
    if (d < 1) throw Error(ErrorKind::UnknownFamily, "cross_polytope needs sphere dimension >= 1");
    pts = detail::cross_polytope(d + 1);
    strength = 3;
  } else if (name == "octahedron") {
    pts = detail::cross_polytope(3);
    strength = 3;
  } else if (name == "tetrahedron") {
    pts = detail::tetrahedron_apex_down();
    strength = 2;
  } else {
    throw Error(ErrorKind::UnknownFamily, "no builtin family named '" + name + "'");
  }
  std::vector<double> ws(pts.size(), 1.0 / pts.size());
  return WeightedDesignSet(std::move(pts), std::move(ws), strength);
}

/// Defect of every monomial of degree <= t against the sphere average.
inline DesignReport verify_weighted_design_set(const WeightedDesignSet& x, int t,
                                               double tol = kPassTol) {
  int D = x.ambient_dim();
  int d = D - 1;
  DesignReport rep;
  rep.strength = t;
  rep.tol = tol;
  rep.basis = monomial_basis(D, t);
  rep.defects.reserve(rep.basis.size());
  for (const auto& alpha : rep.basis) {
    double acc = 0.0;
    for (size_t i = 0; i < x.points.size(); ++i) acc += x.weights[i] * alpha.eval(x.points[i].coords);
    double defect = std::abs(acc - sphere_average(alpha, d));
    rep.defects.push_back(defect);
    rep.max_defect = std::max(rep.max_defect, defect);
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

}  // namespace design_curves
