#pragma once

#include <memory>

#include "design_curves/curve.hpp"

namespace design_curves {

/// Hopf-style lift of a closed base curve alpha = (alpha_R, alpha_C) on
/// S^2 c R x C to S^3 c C^2:
///   gamma(s) = 2^{-1/2} (sqrt(1+aR(r)), conj(aC(r))/sqrt(1+aR(r))) e^{i(2 pi s + theta(r))},
///   r = (t+1) s - floor((t+1) s).
/// A weighted floor(t/2)-design base yields a weighted t-design on S^3.
/// `comp` maps base coordinates onto (alpha_R, Re alpha_C, Im alpha_C).
inline Curve lift_s3(const Curve& base, const PhaseFn& theta, int t,
                     std::array<int, 3> comp = {0, 1, 2}) {
  if (base.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "lift base must live on S^2");
  if (!base.closed()) throw Error(ErrorKind::InvariantViolation, "lift base must be closed");
  if (t < 0) throw Error(ErrorKind::InvariantViolation, "strength must be >= 0");
  require_phase_closure(theta);

  // alpha_R must stay clear of the south pole (margin 1e-6) on a dense sample.
  const int samples = 512;
  for (const auto& seg : base.segments()) {
    if (seg.reversed)
      throw Error(ErrorKind::InvariantViolation, "lift of reversed base segments unsupported");
    for (int i = 0; i <= samples; ++i) {
      double v = static_cast<double>(i) / samples;
      double a = seg.kind.eval(v)[comp[0]];
      if (a <= -1.0 + 1e-6)
        throw Error(ErrorKind::SouthPoleViolation,
                    "base curve reaches alpha_R = -1 (within margin 1e-6)");
    }
  }

  int wraps = t + 1;
  const auto& bsegs = base.segments();
  const auto& bbreaks = base.breakpoints();
  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(wraps) * bsegs.size());
  NodeId first = next_node_id();
  NodeId prev = first;
  for (int k = 0; k < wraps; ++k) {
    for (size_t j = 0; j < bsegs.size(); ++j) {
      LiftPiece piece;
      piece.base = std::make_shared<const SegmentKind>(bsegs[j].kind);
      piece.r_lo = bbreaks[j];
      piece.r_w = bsegs[j].weight;
      piece.wrap_k = k;
      piece.wraps = wraps;
      piece.theta = theta;
      piece.iR = comp[0];
      piece.iRe = comp[1];
      piece.iIm = comp[2];
      Segment s;
      s.kind = SegmentKind{piece};
      s.weight = bsegs[j].weight / wraps;
      s.start_node = prev;
      bool last = (k == wraps - 1) && (j == bsegs.size() - 1);
      s.end_node = last ? first : next_node_id();
      prev = s.end_node;
      segs.push_back(std::move(s));
    }
  }
  return Curve(std::move(segs), true);
}

}  // namespace design_curves
