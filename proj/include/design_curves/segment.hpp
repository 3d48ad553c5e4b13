#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <variant>

#include "design_curves/phase.hpp"
#include "design_curves/point.hpp"
#include "design_curves/rotation_path.hpp"

namespace design_curves {

// Every segment family exposes a smooth auxiliary parameter v in [0,1] in
// which both the point and its derivative are bounded and smooth, plus the
// map tau(v) to the traversal fraction of the segment. The w_{X,M}-style
// families use tau = (1 - cos(pi v))/2, which absorbs the inverse-square-root
// speed blowup at the poles, so Gauss-Legendre panels converge spectrally.

inline Vec slerp(const Vec& p, const Vec& q, double u) {
  double d = std::clamp(p.dot(q), -1.0, 1.0);
  double omega = std::acos(d);
  if (omega < 1e-9) {
    Vec r = (1.0 - u) * p + u * q;
    return r / r.norm();
  }
  return (std::sin((1.0 - u) * omega) * p + std::sin(u * omega) * q) / std::sin(omega);
}

/// Great-circle arc: p(theta) = u cos(theta) + w sin(theta), theta in [a, b].
struct ArcPiece {
  Vec u, w;
  double a, b;

  int dim() const { return static_cast<int>(u.size()); }
  double theta_at(double v) const { return a + (b - a) * v; }
  Vec eval(double v) const {
    double t = theta_at(v);
    return u * std::cos(t) + w * std::sin(t);
  }
  Vec deriv(double v) const {
    double t = theta_at(v);
    return (b - a) * (-u * std::sin(t) + w * std::cos(t));
  }
  double tau_of_v(double v) const { return v; }
  double dtau_dv(double) const { return 1.0; }
  double v_from_tau(double tau) const { return tau; }
  std::optional<double> exact_length() const { return b - a; }
};

/// Circle of (chordal) radius r about an off-center plane:
/// p(theta) = c + r (e1 cos(theta) + e2 sin(theta)); |c|^2 + r^2 = 1.
struct CirclePiece {
  Vec center, e1, e2;
  double r;
  double a, b;

  int dim() const { return static_cast<int>(center.size()); }
  Vec eval(double v) const {
    double t = a + (b - a) * v;
    return center + r * (e1 * std::cos(t) + e2 * std::sin(t));
  }
  Vec deriv(double v) const {
    double t = a + (b - a) * v;
    return (b - a) * r * (-e1 * std::sin(t) + e2 * std::cos(t));
  }
  double tau_of_v(double v) const { return v; }
  double dtau_dv(double) const { return 1.0; }
  double v_from_tau(double tau) const { return tau; }
  std::optional<double> exact_length() const { return r * (b - a); }
};

/// One piece of the w_{X,M} construction: first coordinate sweeps between the
/// poles, the rest follows sqrt(1-u^2) M(u) x.
struct WxmPiece {
  std::shared_ptr<const RotationPath> path;
  Vec x;       // design point on S^{d-1}
  int sign;    // +1: sweep -1 -> +1, -1: sweep +1 -> -1

  int dim() const { return static_cast<int>(x.size()) + 1; }
  double sweep(double v) const { return -sign * std::cos(kPi * v); }
  Vec eval(double v) const {
    double u = sweep(v);
    double s = std::sin(kPi * v);
    Vec out(dim());
    out[0] = u;
    out.tail(x.size()) = s * (path->eval(u) * x);
    return out;
  }
  Vec deriv(double v) const {
    double u = sweep(v);
    double s = std::sin(kPi * v);
    double du = sign * kPi * s;
    Vec mx = path->eval(u) * x;
    Vec dmx = path->deriv(u) * x;
    Vec out(dim());
    out[0] = du;
    out.tail(x.size()) = kPi * std::cos(kPi * v) * mx + s * du * dmx;
    return out;
  }
  double tau_of_v(double v) const { return 0.5 * (1.0 - std::cos(kPi * v)); }
  double dtau_dv(double v) const { return 0.5 * kPi * std::sin(kPi * v); }
  double v_from_tau(double tau) const { return std::acos(1.0 - 2.0 * std::clamp(tau, 0.0, 1.0)) / kPi; }
  std::optional<double> exact_length() const { return std::nullopt; }
};

/// Segment k of the explicit weighted (2t-1)-design curve on S^2.
struct ExplicitS2Piece {
  int t;
  int k;  // 0-based segment index, k in {0, ..., 2t-1}
  PhaseFn theta1;

  int dim() const { return 3; }
  int par() const { return (k % 2 == 0) ? 1 : -1; }  // sweep direction
  Vec eval(double v) const {
    double a1 = -par() * std::cos(kPi * v);
    double s = std::sin(kPi * v);
    double ph = kPi * k / t + theta1(a1);
    Vec out(3);
    out << a1, s * std::cos(ph), s * std::sin(ph);
    return out;
  }
  Vec deriv(double v) const {
    double a1 = -par() * std::cos(kPi * v);
    double s = std::sin(kPi * v);
    double da1 = par() * kPi * s;
    double ph = kPi * k / t + theta1(a1);
    double dph = theta1.deriv(a1) * da1;
    double c = kPi * std::cos(kPi * v);
    Vec out(3);
    out << da1, c * std::cos(ph) - s * std::sin(ph) * dph,
        c * std::sin(ph) + s * std::cos(ph) * dph;
    return out;
  }
  double tau_of_v(double v) const { return 0.5 * (1.0 - std::cos(kPi * v)); }
  double dtau_dv(double v) const { return 0.5 * kPi * std::sin(kPi * v); }
  double v_from_tau(double tau) const { return std::acos(1.0 - 2.0 * std::clamp(tau, 0.0, 1.0)) / kPi; }
  std::optional<double> exact_length() const { return std::nullopt; }
};

struct SegmentKind;

/// One wrap-piece of the S^3 lift of a base S^2 curve segment (eq. of
/// Theorem 2.2): gamma(s) = 2^{-1/2} (sqrt(1+aR), conj(aC)/sqrt(1+aR)) e^{i(2 pi s + theta(r))}
/// with r = (t+1) s - wrap index.
struct LiftPiece {
  std::shared_ptr<const SegmentKind> base;  // base curve segment geometry
  double r_lo, r_w;                         // base segment spans r in [r_lo, r_lo + r_w]
  int wrap_k;                               // which of the t+1 wraps
  int wraps;                                // t+1
  PhaseFn theta;
  int iR, iRe, iIm;                         // base components giving (alpha_R, Re aC, Im aC)

  int dim() const { return 4; }
  Vec eval(double v) const;
  Vec deriv(double v) const;
  double tau_of_v(double v) const;
  double dtau_dv(double v) const;
  double v_from_tau(double tau) const;
  std::optional<double> exact_length() const { return std::nullopt; }
};

/// Quadratic spherical Bezier (two-level slerp); used by corner smoothing.
struct BezierPiece {
  Vec p0, p1, p2;

  int dim() const { return static_cast<int>(p0.size()); }
  Vec eval(double v) const { return slerp(slerp(p0, p1, v), slerp(p1, p2, v), v); }
  Vec deriv(double v) const {
    double h = 1e-6;
    if (v < h) return (-3.0 * eval(v) + 4.0 * eval(v + h) - eval(v + 2 * h)) / (2.0 * h);
    if (v > 1.0 - h) return (3.0 * eval(v) - 4.0 * eval(v - h) + eval(v - 2 * h)) / (2.0 * h);
    return (eval(v + h) - eval(v - h)) / (2.0 * h);
  }
  double tau_of_v(double v) const { return v; }
  double dtau_dv(double) const { return 1.0; }
  double v_from_tau(double tau) const { return tau; }
  std::optional<double> exact_length() const { return std::nullopt; }
};

struct SegmentKind {
  std::variant<ArcPiece, CirclePiece, WxmPiece, ExplicitS2Piece, LiftPiece, BezierPiece> k;

  int dim() const {
    return std::visit([](const auto& p) { return p.dim(); }, k);
  }
  Vec eval(double v) const {
    return std::visit([&](const auto& p) { return p.eval(v); }, k);
  }
  Vec deriv(double v) const {
    return std::visit([&](const auto& p) { return p.deriv(v); }, k);
  }
  double tau_of_v(double v) const {
    return std::visit([&](const auto& p) { return p.tau_of_v(v); }, k);
  }
  double dtau_dv(double v) const {
    return std::visit([&](const auto& p) { return p.dtau_dv(v); }, k);
  }
  double v_from_tau(double tau) const {
    return std::visit([&](const auto& p) { return p.v_from_tau(tau); }, k);
  }
  std::optional<double> exact_length() const {
    return std::visit([](const auto& p) { return p.exact_length(); }, k);
  }
};

inline Vec LiftPiece::eval(double v) const {
  Vec c = base->eval(v);
  double A = c[iR];
  std::complex<double> C(c[iRe], c[iIm]);
  double r = r_lo + r_w * base->tau_of_v(v);
  double s = (wrap_k + r) / wraps;
  double phi = 2.0 * kPi * s + theta(r);
  double f = std::sqrt(0.5 * (1.0 + A));
  std::complex<double> e(std::cos(phi), std::sin(phi));
  std::complex<double> z0 = f * e;
  std::complex<double> z1 = std::conj(C) / (2.0 * f) * e;
  Vec out(4);
  out << z0.real(), z0.imag(), z1.real(), z1.imag();
  return out;
}

inline Vec LiftPiece::deriv(double v) const {
  Vec c = base->eval(v);
  Vec dc = base->deriv(v);
  double A = c[iR], dA = dc[iR];
  std::complex<double> C(c[iRe], c[iIm]), dC(dc[iRe], dc[iIm]);
  double dtau = base->dtau_dv(v);
  double r = r_lo + r_w * base->tau_of_v(v);
  double dr = r_w * dtau;
  double s = (wrap_k + r) / wraps;
  double phi = 2.0 * kPi * s + theta(r);
  double dphi = (2.0 * kPi / wraps) * dr + theta.deriv(r) * dr;
  double f = std::sqrt(0.5 * (1.0 + A));
  double df = dA / (4.0 * f);
  std::complex<double> e(std::cos(phi), std::sin(phi));
  std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> w0 = f * e;
  std::complex<double> w1 = std::conj(C) / (2.0 * f) * e;
  std::complex<double> dw0 = df * e + i_unit * dphi * w0;
  std::complex<double> dw1 =
      (std::conj(dC) / (2.0 * f) - std::conj(C) * df / (2.0 * f * f)) * e + i_unit * dphi * w1;
  Vec out(4);
  out << dw0.real(), dw0.imag(), dw1.real(), dw1.imag();
  return out;
}

inline double LiftPiece::tau_of_v(double v) const { return base->tau_of_v(v); }
inline double LiftPiece::dtau_dv(double v) const { return base->dtau_dv(v); }
inline double LiftPiece::v_from_tau(double tau) const { return base->v_from_tau(tau); }

/// A piece of a curve: geometry, parameter share, and endpoint identity.
struct Segment {
  SegmentKind kind;
  double weight = 0.0;  // parameter-measure length in [0,1]
  NodeId start_node = 0;
  NodeId end_node = 0;
  bool reversed = false;

  int dim() const { return kind.dim(); }
  NodeId from() const { return reversed ? end_node : start_node; }
  NodeId to() const { return reversed ? start_node : end_node; }

  /// Point at traversal fraction tau in [0,1] (respects orientation).
  Vec at_tau(double tau) const {
    double t = reversed ? 1.0 - tau : tau;
    return kind.eval(kind.v_from_tau(t));
  }

  /// Coordinates of start_node / end_node (independent of orientation).
  Vec start_coord() const { return kind.eval(0.0); }
  Vec end_coord() const { return kind.eval(1.0); }
};

/// Minimal great-circle arc between two non-antipodal, distinct points.
inline ArcPiece great_arc_piece(const Point& p, const Point& q) {
  double d = std::clamp(p.coords.dot(q.coords), -1.0, 1.0);
  if (d > 1.0 - 1e-12) throw Error(ErrorKind::CoincidentPoints, "zero-length arc");
  if (d < -1.0 + 1e-12) throw Error(ErrorKind::AntipodalPoints, "antipodal endpoints, arc not unique");
  double ang = std::acos(d);
  Vec w = q.coords - d * p.coords;
  w /= w.norm();
  return ArcPiece{p.coords, w, 0.0, ang};
}

inline Segment great_arc(const Point& p, const Point& q, NodeId start = 0, NodeId end = 0) {
  ArcPiece arc = great_arc_piece(p, q);
  Segment s;
  s.kind = SegmentKind{arc};
  s.weight = arc.b - arc.a;
  s.start_node = start ? start : next_node_id();
  s.end_node = end ? end : next_node_id();
  return s;
}

}  // namespace design_curves
