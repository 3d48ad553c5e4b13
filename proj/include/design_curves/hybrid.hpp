#pragma once

#include "design_curves/accounting.hpp"
#include "design_curves/design_set.hpp"

namespace design_curves {

/// Hybrid design triple (X, gamma, rho): the mixed functional
/// rho/|X| sum f(x) + (1-rho)/l(gamma) int_gamma f must average polynomials.
struct HybridDesign {
  std::vector<Point> points;  // may be empty (then rho must be 0)
  Curve curve;
  double rho = 0.0;
  int claimed_strength = 0;

  void validate() const {
    if (rho < 0.0 || rho > 1.0)
      throw Error(ErrorKind::InvariantViolation, "balancing constant must lie in [0, 1]");
    if (points.empty() && rho != 0.0)
      throw Error(ErrorKind::InvariantViolation, "empty point set requires rho = 0");
    if (!curve.closed()) throw Error(ErrorKind::InvariantViolation, "hybrid curve must be closed");
    for (const auto& p : points)
      if (p.dim() != curve.dim())
        throw Error(ErrorKind::DimensionMismatch, "set and curve ambient dimensions differ");
  }
};

inline DesignReport verify_hybrid(const HybridDesign& h, int t, double tol = kPassTol) {
  h.validate();
  int D = h.curve.dim();
  DesignReport rep;
  rep.strength = t;
  rep.tol = tol;
  rep.basis = monomial_basis(D, t);
  std::vector<std::function<double(const Vec&)>> fs;
  fs.reserve(rep.basis.size());
  for (const auto& alpha : rep.basis)
    fs.emplace_back([&alpha](const Vec& p) { return alpha.eval(p); });
  Vec integrals = batched_integral(h.curve, fs, /*mode_param=*/false);
  double len = curve_length(h.curve);
  rep.length = len;
  rep.defects.resize(rep.basis.size());
  for (size_t i = 0; i < rep.basis.size(); ++i) {
    double set_part = 0.0;
    if (!h.points.empty()) {
      for (const auto& p : h.points) set_part += rep.basis[i].eval(p.coords);
      set_part *= h.rho / static_cast<double>(h.points.size());
    }
    double curve_part = (1.0 - h.rho) / len * integrals[static_cast<Eigen::Index>(i)];
    rep.defects[i] = std::abs(set_part + curve_part - sphere_average(rep.basis[i], D - 1));
    rep.max_defect = std::max(rep.max_defect, rep.defects[i]);
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

/// Koenig-style hybrid from a projective floor(t/2)-design set: regular
/// (t+1)-gons on the fibers over Y minus y0, the fiber circle over y0 as the
/// curve, and rho = 1 - 1/|Y|.
inline HybridDesign konig_hybrid(const ProjectiveDesignSet& y, size_t y0_index, int t,
                                 double tol = kPassTol) {
  if (y0_index >= y.size()) throw Error(ErrorKind::InvariantViolation, "root index out of range");
  if (y.size() < 2)
    throw Error(ErrorKind::StrengthViolation,
                "|Y| = 1 would require the bare fiber circle to be a t-design curve");
  DesignReport ver = verify_projective_design(y, t / 2, tol);
  if (!ver.pass)
    throw Error(ErrorKind::StrengthViolation,
                "Y fails projective verification at strength floor(t/2)");
  HybridDesign h;
  for (size_t i = 0; i < y.size(); ++i) {
    if (i == y0_index) continue;
    for (int j = 0; j <= t; ++j) {
      double th = 2.0 * kPi * j / (t + 1);
      CVec w = y.points[i].z * std::complex<double>(std::cos(th), std::sin(th));
      h.points.emplace_back(to_real(w), 1e-10);
    }
  }
  h.curve = fiber_curve(y.points[y0_index]);
  h.rho = 1.0 - 1.0 / static_cast<double>(y.size());
  h.claimed_strength = t;
  return h;
}

/// Affine 2-plane {center + span(e1, e2)} meeting S^d in the circle of
/// (chordal) radius sqrt(1 - |center|^2) about center.
struct CircleSpec {
  Vec center;  // orthogonal to e1, e2; |center| < 1 (zero for a great circle)
  Vec e1, e2;  // orthonormal plane directions

  void validate() const {
    if (center.size() != e1.size() || center.size() != e2.size())
      throw Error(ErrorKind::DimensionMismatch, "circle spec dimensions disagree");
    if (std::abs(e1.norm() - 1.0) > 1e-10 || std::abs(e2.norm() - 1.0) > 1e-10 ||
        std::abs(e1.dot(e2)) > 1e-10 || std::abs(center.dot(e1)) > 1e-10 ||
        std::abs(center.dot(e2)) > 1e-10)
      throw Error(ErrorKind::InvariantViolation, "circle frame must be orthonormal");
    if (center.norm() >= 1.0 - 1e-12)
      throw Error(ErrorKind::InvariantViolation, "plane misses the sphere");
  }
  double radius() const { return std::sqrt(1.0 - center.squaredNorm()); }

  /// The full circle as a closed two-piece constant-speed curve.
  Curve curve() const {
    validate();
    double r = radius();
    NodeId n0 = next_node_id(), n1 = next_node_id();
    Segment s0, s1;
    s0.kind = SegmentKind{CirclePiece{center, e1, e2, r, 0.0, kPi}};
    s0.weight = 0.5;
    s0.start_node = n0;
    s0.end_node = n1;
    s1.kind = SegmentKind{CirclePiece{center, e1, e2, r, kPi, 2.0 * kPi}};
    s1.weight = 0.5;
    s1.start_node = n1;
    s1.end_node = n0;
    return Curve({s0, s1}, true);
  }
};

/// Removes an explicitly named regular s-gon (s > t) lying on S^d cap P from
/// a design set and replaces it by the constant-speed circle curve, with
/// rho = 1 - s/|X|.
inline HybridDesign gon_split_hybrid(const WeightedDesignSet& x, const CircleSpec& circle,
                                     const std::vector<size_t>& gon_indices, int t,
                                     double tol = kPassTol) {
  if (static_cast<int>(gon_indices.size()) <= t)
    throw Error(ErrorKind::InvariantViolation, "gon order must exceed the strength t");
  DesignReport ver = verify_weighted_design_set(x, t, tol);
  if (!ver.pass) throw Error(ErrorKind::StrengthViolation, "X fails verification at strength t");
  circle.validate();
  int D = x.ambient_dim();
  if (circle.center.size() != D) throw Error(ErrorKind::DimensionMismatch, "plane dimension");
  double r = circle.radius();

  std::vector<double> angles;
  for (size_t idx : gon_indices) {
    if (idx >= x.size()) throw Error(ErrorKind::GonNotSubset, "gon index out of range");
    const Vec& p = x.points[idx].coords;
    Vec q = p - circle.center;
    double a = std::atan2(q.dot(circle.e2), q.dot(circle.e1));
    Vec on_circle = circle.center + r * (std::cos(a) * circle.e1 + std::sin(a) * circle.e2);
    if ((p - on_circle).norm() > 1e-9)
      throw Error(ErrorKind::GonNotSubset, "named point does not lie on the circle");
    angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  size_t s = angles.size();
  for (size_t i = 0; i < s; ++i) {
    double gap = (i + 1 < s) ? angles[i + 1] - angles[i] : angles[0] + 2.0 * kPi - angles[i];
    if (std::abs(gap - 2.0 * kPi / s) > 1e-9)
      throw Error(ErrorKind::GonNotSubset, "named points are not a regular gon");
  }

  HybridDesign out;
  std::vector<bool> in_gon(x.size(), false);
  for (size_t idx : gon_indices) in_gon[idx] = true;
  for (size_t i = 0; i < x.size(); ++i)
    if (!in_gon[i]) out.points.push_back(x.points[i]);
  out.curve = circle.curve();
  out.rho = 1.0 - static_cast<double>(s) / static_cast<double>(x.size());
  out.claimed_strength = t;
  return out;
}

}  // namespace design_curves
