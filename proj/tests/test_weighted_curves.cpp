#include <doctest.h>

#include <random>

#include "design_curves/accounting.hpp"
#include "design_curves/curve_verify.hpp"
#include "design_curves/explicit_curves.hpp"
#include "design_curves/gauss_legendre.hpp"
#include "design_curves/smoothing.hpp"
#include "design_curves/wxm.hpp"

using namespace design_curves;

namespace {

Vec e(int i, int d = 3) {
  Vec v = Vec::Zero(d);
  v[i] = 1.0;
  return v;
}

/// Tilted great circle on S^2 avoiding first coordinate -1.
Curve tilted_circle(double beta) {
  Vec u(3), w(3);
  u << std::cos(beta), std::sin(beta), 0.0;
  w << 0.0, 0.0, 1.0;
  NodeId n0 = next_node_id(), n1 = next_node_id();
  Segment s0, s1;
  s0.kind = SegmentKind{ArcPiece{u, w, 0.0, kPi}};
  s0.weight = 0.5;
  s0.start_node = n0;
  s0.end_node = n1;
  s1.kind = SegmentKind{ArcPiece{u, w, kPi, 2 * kPi}};
  s1.weight = 0.5;
  s1.start_node = n1;
  s1.end_node = n0;
  return Curve({s0, s1}, true);
}

/// 1-D quadrature in the angle variable with s = cos(theta); smooth for the
/// slice integrands of the w_{X,M} identity.
double slice_integral(const std::function<double(double)>& g) {
  static const GaussLegendre<32> rule;
  double acc = 0.0;
  const int panels = 8;
  for (int p = 0; p < panels; ++p) {
    double lo = kPi * p / panels, hi = kPi * (p + 1) / panels;
    double mid = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    for (int i = 0; i < 32; ++i) {
      double th = mid + hw * rule.nodes[i];
      acc += hw * rule.weights[i] * g(std::cos(th)) * std::sin(th);
    }
  }
  return acc;  // equals int_{-1}^{1} g(s) ds after u = cos theta
}

}  // namespace

TEST_CASE("build_wxm basics: polar circle, V4, octahedron") {
  auto v2 = builtin_set("polygon", 2);
  Curve polar = build_wxm(v2, RotationPath::identity(2));
  CHECK(curve_length(polar) == doctest::Approx(2 * kPi).epsilon(1e-10));
  CHECK(verify_weighted_curve(polar, 1).pass);

  auto v4 = builtin_set("polygon", 4);
  Curve w4 = build_wxm(v4, RotationPath::identity(2));
  CHECK(curve_length(w4) == doctest::Approx(4 * kPi).epsilon(1e-10));
  auto rep3 = verify_weighted_curve(w4, 3);
  CHECK(rep3.pass);
  CHECK_FALSE(verify_weighted_curve(w4, 4).pass);

  auto octa = builtin_set("octahedron");
  Curve w6 = build_wxm(octa, RotationPath::identity(3));
  CHECK(w6.dim() == 4);
  CHECK(std::abs(curve_length(w6) - 6 * kPi) < 1e-9);
  CHECK(verify_weighted_curve(w6, 3).pass);
}

TEST_CASE("build_wxm rejects odd sets and bad weights") {
  Vec a = e(0, 2), b = e(1, 2), c = -e(0, 2);
  WeightedDesignSet odd({Point(a), Point(b), Point(c)}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1);
  try {
    build_wxm(odd, RotationPath::identity(2));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::OddSetSize);
  }
}

TEST_CASE("theorem integral identity against independent slice quadrature") {
  auto v4 = builtin_set("polygon", 4);
  RotationPath spin = RotationPath::plane_spin(2, 0, 1, PhaseFn::linear(0.2, 0.9));
  Curve w = build_wxm(v4, spin);
  for (const auto& alpha : monomial_basis(3, 3)) {
    double lhs = param_integral(w, [&](const Vec& p) { return alpha.eval(p); });
    double rhs = 0.5 * slice_integral([&](double s) {
      double acc = 0.0;
      double rt = std::sqrt(std::max(0.0, 1.0 - s * s));
      Mat m = spin.eval(s);
      for (size_t i = 0; i < v4.size(); ++i) {
        Vec circle = m * v4.points[i].coords;
        Vec p(3);
        p << s, rt * circle[0], rt * circle[1];
        acc += v4.weights[i] * alpha.eval(p);
      }
      return acc;
    });
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("explicit_s2 equals build_wxm(V_2t, spin) pointwise") {
  int t = 2;
  PhaseFn theta1 = PhaseFn::linear(0.3, 0.8);
  Curve ex = explicit_s2(t, theta1);
  Curve wx = build_wxm(builtin_set("polygon", 2 * t), RotationPath::plane_spin(2, 0, 1, theta1));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double s = unif(rng);
    worst = std::max(worst, (ex.eval(s) - wx.eval(s)).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("explicit_s2 lengths and strengths") {
  Curve c1 = explicit_s2(1, PhaseFn::constant(0.0));
  CHECK(curve_length(c1) == doctest::Approx(2 * kPi).epsilon(1e-10));
  CHECK(verify_weighted_curve(c1, 1).pass);

  Curve c2 = explicit_s2(2, PhaseFn::constant(0.0));
  CHECK(std::abs(curve_length(c2) - 4 * kPi) < 1e-9);
  CHECK(verify_weighted_curve(c2, 3).pass);
  CHECK_FALSE(verify_weighted_curve(c2, 4).pass);

  // non-constant theta1 lengthens the curve; oracle by independent quadrature
  Curve c2lin = explicit_s2(2, PhaseFn::linear(0.0, 1.0));
  double len = curve_length(c2lin);
  CHECK(len > 4 * kPi);
  CHECK(std::abs(len - 14.610134128412) < 1e-8);
  CHECK(verify_weighted_curve(c2lin, 3).pass);
}

TEST_CASE("lift_s3 of a tilted circle is a weighted 2-design") {
  Curve alpha = tilted_circle(0.4);
  CHECK(verify_weighted_curve(alpha, 1).pass);
  Curve lifted = lift_s3(alpha, PhaseFn::constant(0.0), 2);
  CHECK(lifted.dim() == 4);
  auto rep = verify_weighted_curve(lifted, 2);
  CHECK(rep.pass);
  CHECK(rep.max_defect < 1e-9);
  CHECK_FALSE(verify_weighted_curve(lifted, 3).pass);
}

TEST_CASE("lift_s3 preconditions") {
  // polar circle passes through alpha_R = -1
  auto v2 = builtin_set("polygon", 2);
  Curve polar = build_wxm(v2, RotationPath::identity(2));
  try {
    lift_s3(polar, PhaseFn::constant(0.0), 2);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SouthPoleViolation);
  }

  Curve alpha = tilted_circle(0.4);
  try {
    lift_s3(alpha, PhaseFn::linear(0.0, -kPi), 2);  // theta(0)-theta(1) = pi
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PhaseClosureViolation);
  }
}

TEST_CASE("explicit_s3: certification, independent formula, and lengths") {
  Curve c = explicit_s3(1, PhaseFn::constant(kPi / 3), PhaseFn::constant(0.0));
  auto rep = verify_weighted_curve(c, 3);
  CHECK(rep.basis.size() == 35);
  CHECK(rep.pass);
  CHECK(rep.max_defect < 1e-9);
  CHECK_FALSE(verify_weighted_curve(c, 4).pass);

  // direct formula evaluator (composition spelled out) at random parameters
  auto direct = [&](double s) {
    int t = 1;
    double rr = 4.0 * t * s;
    double r = rr - std::floor(rr);
    int k = std::min(static_cast<int>(std::floor(2.0 * t * r)), 2 * t - 1);
    double a1 = ((k % 2 == 0) ? 1.0 : -1.0) * (4.0 * t * r - 2.0 * k - 1.0);
    a1 = std::clamp(a1, -1.0, 1.0);
    double ph = kPi * k / t + kPi / 3;
    double rt = std::sqrt(std::max(0.0, 1.0 - a1 * a1));
    double A = rt * std::sin(ph);
    std::complex<double> C(rt * std::cos(ph), a1);
    double f = std::sqrt(0.5 * (1.0 + A));
    std::complex<double> eph(std::cos(2 * kPi * s), std::sin(2 * kPi * s));
    std::complex<double> z0 = f * eph;
    std::complex<double> z1 = std::conj(C) / (2.0 * f) * eph;
    Vec out(4);
    out << z0.real(), z0.imag(), z1.real(), z1.imag();
    return out;
  };
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double s = unif(rng);
    worst = std::max(worst, (c.eval(s) - direct(s)).norm());
  }
  CHECK(worst < 1e-10);

  // quadrature-oracle lengths (see the notes on the published closed form)
  CHECK(std::abs(curve_length(c) - 16.8290767732) < 5e-9);
  Curve c2 = explicit_s3(2, PhaseFn::constant(kPi / 5), PhaseFn::constant(0.0));
  CHECK(verify_weighted_curve(c2, 7).pass);
  CHECK(std::abs(curve_length(c2) - 75.964834272) < 1e-8);
}

TEST_CASE("explicit_s3 phase exclusion") {
  try {
    explicit_s3(1, PhaseFn::constant(0.0), PhaseFn::constant(0.0));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PhaseExclusionViolation);
  }
  try {
    explicit_s3(2, PhaseFn::constant(kPi), PhaseFn::constant(0.0));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PhaseExclusionViolation);
  }
  // strict published formula does not close up
  Vec a = explicit_s3_strict_formula(1, PhaseFn::constant(kPi / 3), PhaseFn::constant(0.0), 0.0);
  Vec b = explicit_s3_strict_formula(1, PhaseFn::constant(kPi / 3), PhaseFn::constant(0.0),
                                     1.0 - 1e-12);
  CHECK((a - b).norm() > 0.1);
}

TEST_CASE("verify_weighted_curve on the equator: passes t=1, fails t=2 on x3^2") {
  Curve eq = tilted_circle(0.0);  // unit-speed circle in the (x1,x2)-plane
  CHECK(verify_weighted_curve(eq, 1).pass);
  auto rep = verify_weighted_curve(eq, 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_defect == doctest::Approx(1.0 / 3).epsilon(1e-10));
  const auto& worst = rep.basis[rep.argmax_defect()];
  CHECK(worst.exponents == std::vector<int>{0, 0, 2});
}

TEST_CASE("w_{X,M} singularities sit exactly at the breakpoints") {
  auto v4 = builtin_set("polygon", 4);
  Curve w = build_wxm(v4, RotationPath::identity(2));
  const double h = 1e-6;
  for (size_t i = 1; i < w.breakpoints().size() - 1; ++i) {
    double s = w.breakpoints()[i];
    Vec din = (w.eval(s) - w.eval(s - h)).normalized();
    Vec dout = (w.eval(s + h) - w.eval(s)).normalized();
    double ang = std::acos(std::clamp(din.dot(dout), -1.0, 1.0));
    CHECK(ang > 1e-3);  // genuine corner
  }
  // speed is continuous (and smooth) inside open segments
  for (double s : {0.1, 0.35, 0.6, 0.85}) {
    double sp1 = w.deriv(s - 1e-7).norm();
    double sp2 = w.deriv(s + 1e-7).norm();
    CHECK(std::abs(sp1 - sp2) / sp1 < 1e-5);
  }
}

TEST_CASE("length targeting by spin-rate bisection") {
  auto octa = builtin_set("octahedron");
  double target = 6 * kPi + 1.0;
  TargetedWxm res = build_wxm_with_length(octa, target);
  CHECK(std::abs(res.length - target) < 1e-6);
  CHECK(verify_weighted_curve(res.curve, 3).pass);
}

TEST_CASE("smooth_curve: geodesic quadrilateral gains exactly delta") {
  double b = 0.5, a = std::sqrt(1.0 - b * b);
  std::vector<Point> corners;
  for (int k = 0; k < 4; ++k) {
    Vec v(3);
    v << a * std::cos(kPi * k / 2), a * std::sin(kPi * k / 2), b;
    corners.emplace_back(v);
  }
  std::vector<NodeId> ids = {next_node_id(), next_node_id(), next_node_id(), next_node_id()};
  std::vector<Segment> segs;
  for (int i = 0; i < 4; ++i)
    segs.push_back(great_arc(corners[i], corners[(i + 1) % 4], ids[i], ids[(i + 1) % 4]));
  Curve quad = assemble_cycle(segs);
  double len0 = curve_length(quad);

  double delta = 0.01;
  Curve smoothed = smooth_curve(quad, delta);
  double len1 = curve_length(smoothed);
  CHECK(std::abs(len1 - (len0 + delta)) < 1e-6);

  // C^1: finite-difference tangents agree across every junction
  for (size_t i = 1; i < smoothed.breakpoints().size() - 1; ++i) {
    double s = smoothed.breakpoints()[i];
    const double h = 1e-7;
    Vec din = (smoothed.eval(s) - smoothed.eval(s - h)).normalized();
    Vec dout = (smoothed.eval(s + h) - smoothed.eval(s)).normalized();
    CHECK(std::acos(std::clamp(din.dot(dout), -1.0, 1.0)) < 1e-3);
  }

  // unmodified portion coincides pointwise: segment midpoints of the original
  for (int i = 0; i < 4; ++i) {
    double s_mid = (quad.breakpoints()[i] + quad.breakpoints()[i + 1]) / 2;
    Vec p = quad.eval(s_mid);
    double best = 1e9;
    for (int j = 0; j < 4096; ++j)
      best = std::min(best, (smoothed.eval(j / 4096.0) - p).norm());
    CHECK(best < 2e-3);
  }

  // defect growth <= 2 delta c (empirical comparison at c = 1/len0)
  double c0 = 1.0 / len0;
  double eps_before = empirical_defect(quad, 2, c0).eps_empirical;
  double eps_after = empirical_defect(smoothed, 2, c0).eps_empirical;
  CHECK(eps_after <= eps_before + 2.0 * delta * c0 + 1e-9);
}

TEST_CASE("smooth_curve edge cases") {
  // smooth circle input is returned unchanged
  Curve circ = tilted_circle(0.3);
  Curve same = smooth_curve(circ, 0.05);
  for (double s : {0.0, 0.2, 0.5, 0.77}) CHECK((circ.eval(s) - same.eval(s)).norm() < 1e-15);

  // budget larger than the curve itself
  double b = 0.5, a = std::sqrt(1.0 - b * b);
  std::vector<Point> corners;
  for (int k = 0; k < 4; ++k) {
    Vec v(3);
    v << a * std::cos(kPi * k / 2), a * std::sin(kPi * k / 2), b;
    corners.emplace_back(v);
  }
  std::vector<NodeId> ids = {next_node_id(), next_node_id(), next_node_id(), next_node_id()};
  std::vector<Segment> segs;
  for (int i = 0; i < 4; ++i)
    segs.push_back(great_arc(corners[i], corners[(i + 1) % 4], ids[i], ids[(i + 1) % 4]));
  Curve quad = assemble_cycle(segs);
  try {
    smooth_curve(quad, 100.0);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BudgetTooSmall);
  }
}
