#pragma once

#include "design_curves/quadrature.hpp"

namespace design_curves {

namespace detail {

inline Vec sphere_exp(const Vec& p, const Vec& unit_tangent, double dist) {
  return p * std::cos(dist) + unit_tangent * std::sin(dist);
}

/// Oriented unit tangent of a segment at its traversal start / end.
inline Vec tangent_at(const Segment& seg, bool at_end) {
  double v = (seg.reversed != at_end) ? 1.0 : 0.0;
  Vec d = seg.kind.deriv(v);
  if (seg.reversed) d = -d;
  return d / d.norm();
}

struct TrimmedPiece {
  Segment seg;
  double length;
};

/// Shortens an arc/circle segment by arc length cut0 at its traversal start
/// and cut1 at its traversal end.
inline TrimmedPiece trim_segment(const Segment& seg, double cut0, double cut1) {
  double lo = seg.reversed ? cut1 : cut0;
  double hi = seg.reversed ? cut0 : cut1;
  Segment out = seg;
  if (auto* arc = std::get_if<ArcPiece>(&out.kind.k)) {
    if (arc->b - arc->a <= (lo + hi) + 1e-12)
      throw Error(ErrorKind::BudgetTooSmall, "smoothing windows would overlap");
    arc->a += lo;
    arc->b -= hi;
    out.start_node = next_node_id();
    out.end_node = next_node_id();
    return {out, arc->b - arc->a};
  }
  if (auto* cir = std::get_if<CirclePiece>(&out.kind.k)) {
    double r = cir->r;
    if (r * (cir->b - cir->a) <= (lo + hi) + 1e-12)
      throw Error(ErrorKind::BudgetTooSmall, "smoothing windows would overlap");
    cir->a += lo / r;
    cir->b -= hi / r;
    out.start_node = next_node_id();
    out.end_node = next_node_id();
    return {out, r * (cir->b - cir->a)};
  }
  throw Error(ErrorKind::InvariantViolation,
              "corner smoothing supports geodesic and circle segments only");
}

}  // namespace detail

/// Corner smoothing: every corner is replaced by a pair of quadratic
/// spherical Bezier blends meeting C^1, supported on windows that remove
/// delta/2 of the original length in total; the blends' control extension is
/// bisected so the inserted length is 3*delta/2. Net length gain is exactly
/// delta and the approximate-design error grows by at most
/// c * (removed + inserted) = 2 delta c. A curve without corners is returned
/// unchanged.
inline Curve smooth_curve(const Curve& gamma, double delta) {
  if (delta <= 0.0) throw Error(ErrorKind::InvariantViolation, "length budget must be positive");
  const auto& segs = gamma.segments();
  size_t n = segs.size();

  // corner = junction where one-sided tangent directions disagree
  std::vector<bool> corner(n, false);  // corner[i]: between seg i and seg i+1 (cyclic)
  size_t n_corners = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    if (j == 0 && !gamma.closed()) break;
    Vec t_in = detail::tangent_at(segs[i], true);
    Vec t_out = detail::tangent_at(segs[j], false);
    double ang = std::acos(std::clamp(t_in.dot(t_out), -1.0, 1.0));
    if (ang > 1e-7) {
      corner[i] = true;
      ++n_corners;
    }
  }
  if (n_corners == 0) return gamma;

  double h = delta / (4.0 * static_cast<double>(n_corners));  // half-window per corner

  // trim every segment at its corner ends
  std::vector<detail::TrimmedPiece> trimmed(n);
  for (size_t i = 0; i < n; ++i) {
    double cut0 = corner[(i + n - 1) % n] ? h : 0.0;
    double cut1 = corner[i] ? h : 0.0;
    trimmed[i] = detail::trim_segment(segs[i], cut0, cut1);
  }

  struct Blend {
    Vec p_in, t_in, p_out, t_out;
  };
  std::vector<Blend> blends;
  for (size_t i = 0; i < n; ++i) {
    if (!corner[i]) continue;
    size_t j = (i + 1) % n;
    Blend b;
    b.p_in = trimmed[i].seg.at_tau(1.0);
    b.t_in = detail::tangent_at(trimmed[i].seg, true);
    b.p_out = trimmed[j].seg.at_tau(0.0);
    b.t_out = detail::tangent_at(trimmed[j].seg, false);
    blends.push_back(std::move(b));
  }

  auto blend_pieces = [&](const Blend& b, double m) -> std::pair<BezierPiece, BezierPiece> {
    Vec c1 = detail::sphere_exp(b.p_in, b.t_in, m);
    Vec c2 = detail::sphere_exp(b.p_out, -b.t_out, m);
    Vec mid = slerp(c1, c2, 0.5);
    return {BezierPiece{b.p_in, c1, mid}, BezierPiece{mid, c2, b.p_out}};
  };
  auto piece_length = [](const BezierPiece& p) {
    return detail::adaptive_gl([&](double v) { return p.deriv(v).norm(); }, 1e-11);
  };
  auto inserted_length = [&](double m) {
    double total = 0.0;
    for (const auto& b : blends) {
      auto [b1, b2] = blend_pieces(b, m);
      total += piece_length(b1) + piece_length(b2);
    }
    return total;
  };

  double target = 1.5 * delta;
  double lo = h, hi = std::max(4.0 * h, 0.1);
  while (inserted_length(hi) < target) {
    hi *= 2.0;
    if (hi > kPi) throw Error(ErrorKind::BudgetTooSmall, "blend extension out of range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    (inserted_length(mid) < target ? lo : hi) = mid;
  }
  double m_star = 0.5 * (lo + hi);

  // stitch: trimmed segment, then its corner blend (if any)
  std::vector<Segment> out;
  size_t blend_idx = 0;
  for (size_t i = 0; i < n; ++i) {
    out.push_back(trimmed[i].seg);
    out.back().weight = trimmed[i].length;
    if (!corner[i]) {
      // consecutive smooth junction keeps shared ids
      continue;
    }
    auto [b1, b2] = blend_pieces(blends[blend_idx], m_star);
    ++blend_idx;
    Segment s1, s2;
    s1.kind = SegmentKind{b1};
    s1.weight = piece_length(b1);
    s2.kind = SegmentKind{b2};
    s2.weight = piece_length(b2);
    s1.start_node = out.back().reversed ? out.back().start_node : out.back().end_node;
    s1.end_node = next_node_id();
    s2.start_node = s1.end_node;
    s2.end_node = next_node_id();
    out.push_back(std::move(s1));
    out.push_back(std::move(s2));
  }
  // rethread node ids along the chain
  for (size_t i = 0; i < out.size(); ++i) {
    Segment& cur = out[i];
    Segment& nxt = out[(i + 1) % out.size()];
    NodeId shared = cur.reversed ? cur.start_node : cur.end_node;
    if (nxt.reversed)
      nxt.end_node = shared;
    else
      nxt.start_node = shared;
  }
  return Curve::with_normalized_weights(std::move(out), gamma.closed());
}

}  // namespace design_curves
