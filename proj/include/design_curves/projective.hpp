#pragma once

#include <complex>

#include "design_curves/curve.hpp"
#include "design_curves/multi_index.hpp"
#include "design_curves/point.hpp"
#include "design_curves/report.hpp"

namespace design_curves {

namespace detail {
/// Hermitian inner product sum_k a_k conj(b_k).
inline std::complex<double> hermitian(const CVec& a, const CVec& b) {
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}
}  // namespace detail

/// Point of CP^n held as a canonical-phase unit representative in C^{n+1}:
/// the first nonzero coordinate is made real positive.
struct ProjPoint {
  CVec z;

  ProjPoint() = default;
  explicit ProjPoint(CVec rep) : z(std::move(rep)) {
    if (std::abs(z.norm() - 1.0) > 1e-12)
      throw Error(ErrorKind::InvariantViolation, "projective representative must be unit");
    canonicalize();
  }

  int n() const { return static_cast<int>(z.size()) - 1; }

  void canonicalize() {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (std::abs(z[i]) > 1e-9) {
        std::complex<double> phase = std::conj(z[i]) / std::abs(z[i]);
        z *= phase;
        z[i] = std::complex<double>(std::abs(z[i]), 0.0);  // pin exactly real
        return;
      }
    }
    throw Error(ErrorKind::InvariantViolation, "zero representative");
  }

  /// Real coordinates (Re z_0, Im z_0, Re z_1, ...) of the representative.
  Point real_point() const { return Point(to_real(z), 1e-10); }
};

/// The complex projective map: quotient of S^{2n+1} by the unit-scalar action.
inline ProjPoint proj(const Point& omega) {
  if (omega.dim() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "point must lie on an odd sphere S^{2n+1}");
  return ProjPoint(to_complex(omega.coords));
}

/// Fubini-Study distance, arccos |<w1, w2>|, with diameter pi/2.
inline double cp_distance(const ProjPoint& p, const ProjPoint& q) {
  double m = std::abs(detail::hermitian(p.z, q.z));
  return std::acos(std::clamp(m, 0.0, 1.0));
}

inline bool proj_equal(const ProjPoint& p, const ProjPoint& q, double tol = 1e-9) {
  return std::abs(std::abs(detail::hermitian(p.z, q.z)) - 1.0) < tol;
}

/// The fiber great circle {rep e^{i theta}} as a closed two-arc curve.
inline Curve fiber_curve(const ProjPoint& p) {
  Vec u = to_real(p.z);
  CVec iz = std::complex<double>(0.0, 1.0) * p.z;
  Vec w = to_real(iz);
  NodeId n0 = next_node_id(), n1 = next_node_id();
  Segment s0, s1;
  s0.kind = SegmentKind{ArcPiece{u, w, 0.0, kPi}};
  s0.weight = 0.5;
  s0.start_node = n0;
  s0.end_node = n1;
  s1.kind = SegmentKind{ArcPiece{u, w, kPi, 2.0 * kPi}};
  s1.weight = 0.5;
  s1.start_node = n1;
  s1.end_node = n0;
  return Curve({s0, s1}, true);
}

/// (1/2pi) * integral of a degree-k monomial over the fiber of p, by the
/// uniform rule with 2k+3 nodes (exact for trigonometric degree <= 2k+2).
inline double fiber_average(const MultiIndex& alpha, const ProjPoint& p) {
  int nodes = 2 * alpha.degree() + 3;
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    double th = 2.0 * kPi * j / nodes;
    CVec w = p.z * std::complex<double>(std::cos(th), std::sin(th));
    acc += alpha.eval(to_real(w));
  }
  return acc / nodes;
}

/// CP^1 <-> S^2 bridge: h([z0 : z1]) = (|z0|^2 - |z1|^2, 2 Re z0 conj z1, 2 Im z0 conj z1).
inline Point s2_from_cp1(const ProjPoint& q) {
  if (q.n() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a CP^1 point");
  std::complex<double> z0 = q.z[0], z1 = q.z[1];
  std::complex<double> c = z0 * std::conj(z1);
  Vec v(3);
  v << std::norm(z0) - std::norm(z1), 2.0 * c.real(), 2.0 * c.imag();
  return normalized_point(v);
}

inline ProjPoint cp1_from_s2(const Point& p) {
  if (p.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a point of S^2");
  double a = p[0], b = p[1], c = p[2];
  CVec z(2);
  if (a > -0.5) {
    double z0 = std::sqrt(0.5 * (1.0 + a));
    z[0] = z0;
    z[1] = std::complex<double>(b, -c) / (2.0 * z0);
  } else {
    double z1 = std::sqrt(0.5 * (1.0 - a));
    z[1] = z1;
    z[0] = std::complex<double>(b, c) / (2.0 * z1);
  }
  z /= z.norm();
  return ProjPoint(z);
}

/// Finite subset of CP^n with pairwise distinct members.
struct ProjectiveDesignSet {
  std::vector<ProjPoint> points;
  int claimed_strength = 0;

  ProjectiveDesignSet() = default;
  ProjectiveDesignSet(std::vector<ProjPoint> pts, int strength)
      : points(std::move(pts)), claimed_strength(strength) {
    validate();
  }

  int n() const { return points.front().n(); }
  size_t size() const { return points.size(); }

  void validate() const {
    if (points.empty()) throw Error(ErrorKind::InvariantViolation, "empty projective set");
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        if (cp_distance(points[i], points[j]) <= 1e-9)
          throw Error(ErrorKind::DuplicatePoints, "projective points must be pairwise distinct");
  }
};

/// The octahedron vertices carried to CP^1 through the inverse bridge map,
/// ordered (e1, e2, e3, -e1, -e2, -e3).
inline ProjectiveDesignSet cp1_octahedron() {
  std::vector<ProjPoint> pts;
  for (int sgn : {1, -1})
    for (int i = 0; i < 3; ++i) {
      Vec v = Vec::Zero(3);
      v[i] = sgn;
      pts.push_back(cp1_from_s2(Point(v)));
    }
  return ProjectiveDesignSet(std::move(pts), 3);
}

/// The standard-basis lines {[e_i]} in CP^n (a projective 1-design).
inline ProjectiveDesignSet cp_basis_lines(int n) {
  std::vector<ProjPoint> pts;
  for (int i = 0; i <= n; ++i) {
    CVec z = CVec::Zero(n + 1);
    z[i] = 1.0;
    pts.push_back(ProjPoint(z));
  }
  return ProjectiveDesignSet(std::move(pts), 1);
}

/// Projective design check through the pullback definition: Y-averaged fiber
/// averages of every real monomial of degree <= 2t+1 on R^{2n+2} must match
/// the S^{2n+1} average. Degree 2t certifies the t-design property; the odd
/// degree comes free by fiber symmetry.
inline DesignReport verify_projective_design(const ProjectiveDesignSet& y, int t,
                                             double tol = kPassTol) {
  int n = y.n();
  int D = 2 * n + 2;
  DesignReport rep;
  rep.strength = t;
  rep.tol = tol;
  rep.basis = monomial_basis(D, 2 * t + 1);
  rep.defects.reserve(rep.basis.size());
  for (const auto& alpha : rep.basis) {
    double acc = 0.0;
    for (const auto& p : y.points) acc += fiber_average(alpha, p);
    acc /= static_cast<double>(y.size());
    double defect = std::abs(acc - sphere_average(alpha, D - 1));
    rep.defects.push_back(defect);
    rep.max_defect = std::max(rep.max_defect, defect);
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

/// Horizontal great-circle lift: the arc from z_start to the phase-aligned
/// representative of q (Hermitian product real positive). Its length equals
/// the Fubini-Study distance and it projects onto the base geodesic.
inline Segment horizontal_lift(const Point& z_start, const ProjPoint& q) {
  CVec zs = to_complex(z_start.coords);
  std::complex<double> h = detail::hermitian(zs, q.z);
  double m = std::abs(h);
  double dist = std::acos(std::clamp(m, 0.0, 1.0));
  if (dist <= 1e-9) throw Error(ErrorKind::SameFiber, "start point already lies over q");
  if (dist >= kPi / 2.0 - 1e-9)
    throw Error(ErrorKind::OrthogonalFibers, "orthogonal fibers: lift endpoint phase not unique");
  CVec zq = q.z * (h / m);
  return great_arc(z_start, Point(to_real(zq), 1e-10));
}

}  // namespace design_curves
