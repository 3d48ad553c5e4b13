#pragma once

#include <Eigen/Dense>
#include <optional>

#include "design_curves/curve.hpp"

namespace design_curves {

/// Intersection of two great-circle arcs in S^d.
struct ArcIntersection {
  enum class Kind { Empty, Points, SubArc };
  Kind kind = Kind::Empty;
  std::vector<Vec> points;                          // isolated intersection points
  std::vector<std::pair<double, double>> windows;   // shared sub-arcs, angles in arc-1 frame

  bool empty() const { return kind == Kind::Empty; }
};

namespace detail {

/// Angle of x in the (u, w) frame wrapped into [a, a + 2 pi).
inline double frame_angle_from(const Vec& u, const Vec& w, const Vec& x, double a) {
  double th = std::atan2(x.dot(w), x.dot(u));
  double rel = std::fmod(th - a, 2.0 * kPi);
  if (rel < 0) rel += 2.0 * kPi;
  return a + rel;
}

inline bool angle_in_window(double th, double a, double b, double tol) {
  double rel = std::fmod(th - a, 2.0 * kPi);
  if (rel < 0) rel += 2.0 * kPi;
  return rel <= (b - a) + tol || rel >= 2.0 * kPi - tol;
}

}  // namespace detail

inline ArcIntersection arcs_intersect(const ArcPiece& a1, const ArcPiece& a2,
                                      double coplanar_tol = 1e-9) {
  const double ang_tol = 1e-9;
  Eigen::Index D = a1.u.size();
  if (a2.u.size() != D) throw Error(ErrorKind::DimensionMismatch, "arcs in different ambients");
  Mat b(D, 4);
  b.col(0) = a1.u;
  b.col(1) = a1.w;
  b.col(2) = -a2.u;
  b.col(3) = -a2.w;
  Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] >= coplanar_tol) ++rank;
  int nullity = 4 - rank;  // null space of the D x 4 frame matrix

  ArcIntersection out;
  if (nullity == 0) return out;

  if (nullity == 1) {
    Eigen::Vector4d c = svd.matrixV().col(3);
    Vec x = c[0] * a1.u + c[1] * a1.w;
    double nx = x.norm();
    if (nx < 1e-12) return out;
    x /= nx;
    for (int sgn : {1, -1}) {
      Vec cand = sgn * x;
      double t1 = std::atan2(cand.dot(a1.w), cand.dot(a1.u));
      double t2 = std::atan2(cand.dot(a2.w), cand.dot(a2.u));
      if (detail::angle_in_window(t1, a1.a, a1.b, ang_tol) &&
          detail::angle_in_window(t2, a2.a, a2.b, ang_tol)) {
        out.kind = ArcIntersection::Kind::Points;
        out.points.push_back(cand);
      }
    }
    return out;
  }

  // Coplanar: same great circle. Map arc 2's window into arc 1's frame and
  // intersect circular intervals (up to two components).
  double c = a2.u.dot(a1.u), s = a2.u.dot(a1.w);
  double psi0 = std::atan2(s, c);
  // orientation: +1 if (u2, w2) is a rotation of (u1, w1), -1 if a reflection
  double orient = (a2.w.dot(-a1.u * std::sin(psi0) + a1.w * std::cos(psi0)) > 0) ? 1.0 : -1.0;
  double lo2, hi2;
  if (orient > 0) {
    lo2 = psi0 + a2.a;
    hi2 = psi0 + a2.b;
  } else {
    lo2 = psi0 - a2.b;
    hi2 = psi0 - a2.a;
  }
  // slide window 2 near window 1 and clip; repeat shifted by 2 pi to catch wrap
  for (int shift = -2; shift <= 2; ++shift) {
    double lo = lo2 + 2.0 * kPi * shift, hi = hi2 + 2.0 * kPi * shift;
    double l = std::max(a1.a, lo), h = std::min(a1.b, hi);
    if (h > l + ang_tol) {
      out.windows.emplace_back(l, h);
    } else if (h > l - ang_tol) {
      out.points.push_back(a1.eval((0.5 * (l + h) - a1.a) / (a1.b - a1.a)));
    }
  }
  if (!out.windows.empty())
    out.kind = ArcIntersection::Kind::SubArc;
  else if (!out.points.empty())
    out.kind = ArcIntersection::Kind::Points;
  return out;
}

/// Simplicity verdict for a cycle.
struct SimplicityResult {
  bool simple = true;
  bool heuristic = false;  // set when dense sampling was used (formula curves)
  std::optional<std::pair<size_t, size_t>> witness;  // offending segment pair
};

namespace detail {

inline bool arcs_only(const Curve& gamma) {
  for (const auto& seg : gamma.segments())
    if (!std::holds_alternative<ArcPiece>(seg.kind.k)) return false;
  return true;
}

}  // namespace detail

/// True iff no pair of non-adjacent segments intersects and adjacent segments
/// meet only at their shared node. Exact for geodesic cycles; dense-sampling
/// heuristic for formula curves.
inline SimplicityResult is_simple(const Curve& gamma) {
  SimplicityResult res;
  const auto& segs = gamma.segments();
  size_t n = segs.size();

  if (detail::arcs_only(gamma)) {
    const double tol = 1e-9;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        const auto& ai = std::get<ArcPiece>(segs[i].kind.k);
        const auto& aj = std::get<ArcPiece>(segs[j].kind.k);
        ArcIntersection inter = arcs_intersect(ai, aj);
        if (inter.empty()) continue;
        // shared node coordinates
        std::vector<Vec> allowed;
        for (NodeId a : {segs[i].start_node, segs[i].end_node})
          for (NodeId b : {segs[j].start_node, segs[j].end_node})
            if (a == b)
              allowed.push_back(a == segs[i].start_node ? segs[i].start_coord()
                                                        : segs[i].end_coord());
        bool bad = false;
        if (inter.kind == ArcIntersection::Kind::SubArc) {
          bad = true;
        } else {
          for (const auto& p : inter.points) {
            bool at_allowed = false;
            for (const auto& q : allowed)
              if ((p - q).norm() < tol) at_allowed = true;
            if (!at_allowed) bad = true;
          }
        }
        if (bad) {
          res.simple = false;
          res.witness = {i, j};
          return res;
        }
      }
    }
    return res;
  }

  // Formula curves: dense sampling heuristic.
  res.heuristic = true;
  const int N = 4096;
  std::vector<Vec> pts(N);
  for (int i = 0; i < N; ++i) pts[i] = gamma.eval((i + 0.5) / N);
  // neighbor scale: maximal gap between consecutive samples
  double step = 0.0;
  for (int i = 0; i < N; ++i) step = std::max(step, (pts[(i + 1) % N] - pts[i]).norm());
  double close = 0.45 * step;
  int guard = N / 64;
  for (int i = 0; i < N; ++i) {
    for (int j = i + guard; j < N; ++j) {
      if (i + N - j < guard) continue;  // cyclically adjacent
      if ((pts[i] - pts[j]).norm() < close) {
        res.simple = false;
        res.witness = {static_cast<size_t>(i), static_cast<size_t>(j)};
        return res;
      }
    }
  }
  return res;
}

}  // namespace design_curves
