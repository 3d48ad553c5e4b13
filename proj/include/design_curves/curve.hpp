#pragma once

#include <algorithm>
#include <vector>

#include "design_curves/segment.hpp"

namespace design_curves {

/// Continuous, piecewise smooth curve [0,1] -> S^d given by ordered segments
/// with parameter shares (weights) summing to 1.
class Curve {
 public:
  Curve() = default;
  Curve(std::vector<Segment> segments, bool closed) : segs_(std::move(segments)), closed_(closed) {
    if (segs_.empty()) throw Error(ErrorKind::InvariantViolation, "curve needs segments");
    double total = 0.0;
    for (const auto& s : segs_) {
      if (s.weight <= 0.0)
        throw Error(ErrorKind::InvariantViolation, "segment parameter weight must be positive");
      total += s.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw Error(ErrorKind::InvariantViolation,
                  "segment weights sum to " + std::to_string(total) + ", expected 1");
    breaks_.resize(segs_.size() + 1);
    breaks_[0] = 0.0;
    for (size_t i = 0; i < segs_.size(); ++i) breaks_[i + 1] = breaks_[i] + segs_[i].weight;
    breaks_.back() = 1.0;
    validate_continuity();
  }

  /// Normalizes weights to sum to 1 before constructing.
  static Curve with_normalized_weights(std::vector<Segment> segments, bool closed) {
    double total = 0.0;
    for (const auto& s : segments) total += s.weight;
    if (total <= 0.0) throw Error(ErrorKind::InvariantViolation, "non-positive total weight");
    for (auto& s : segments) s.weight /= total;
    return Curve(std::move(segments), closed);
  }

  int dim() const { return segs_.front().dim(); }
  bool closed() const { return closed_; }
  size_t size() const { return segs_.size(); }
  const std::vector<Segment>& segments() const { return segs_; }
  const std::vector<double>& breakpoints() const { return breaks_; }

  /// Segment index and local traversal fraction for global parameter s.
  std::pair<size_t, double> locate(double s) const {
    s = std::clamp(s, 0.0, 1.0);
    size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), s) - breaks_.begin();
    i = (i == 0) ? 0 : i - 1;
    if (i >= segs_.size()) i = segs_.size() - 1;
    double tau = (s - breaks_[i]) / segs_[i].weight;
    return {i, std::clamp(tau, 0.0, 1.0)};
  }

  Vec eval(double s) const {
    auto [i, tau] = locate(s);
    return segs_[i].at_tau(tau);
  }

  /// d gamma / ds where defined (unbounded near pole passages of w-pieces).
  Vec deriv(double s) const {
    auto [i, tau] = locate(s);
    const Segment& seg = segs_[i];
    double t = seg.reversed ? 1.0 - tau : tau;
    double v = seg.kind.v_from_tau(t);
    double dtdv = seg.kind.dtau_dv(v);
    double sign = seg.reversed ? -1.0 : 1.0;
    return seg.kind.deriv(v) * (sign / (dtdv * seg.weight));
  }

 private:
  void validate_continuity() const {
    const double tol = 1e-9;
    for (size_t i = 0; i + 1 < segs_.size(); ++i) {
      if (segs_[i].to() != segs_[i + 1].from())
        throw Error(ErrorKind::InvariantViolation, "segment node ids do not chain");
      if ((segs_[i].at_tau(1.0) - segs_[i + 1].at_tau(0.0)).norm() > tol)
        throw Error(ErrorKind::InvariantViolation, "consecutive segment endpoints disagree");
    }
    if (closed_) {
      if (segs_.back().to() != segs_.front().from())
        throw Error(ErrorKind::InvariantViolation, "closed curve does not return to start node");
      if ((segs_.back().at_tau(1.0) - segs_.front().at_tau(0.0)).norm() > tol)
        throw Error(ErrorKind::InvariantViolation, "closed curve endpoint coordinates disagree");
    }
  }

  std::vector<Segment> segs_;
  bool closed_ = false;
  std::vector<double> breaks_;
};

}  // namespace design_curves
