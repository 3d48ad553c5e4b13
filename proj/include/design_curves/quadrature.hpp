#pragma once

#include <functional>

#include "design_curves/curve.hpp"
#include "design_curves/gauss_legendre.hpp"

namespace design_curves {

namespace detail {

/// Adaptive panel-doubling Gauss-Legendre over [0,1]: 32 nodes per panel,
/// panels 1, 2, 4, ... until successive estimates agree to rel_tol.
template <typename F>
double adaptive_gl(F&& g, double rel_tol = kQuadTol, int max_panels = 1024) {
  const auto& rule = gl32();
  double prev = 0.0;
  bool have_prev = false;
  for (int panels = 1; panels <= max_panels; panels *= 2) {
    double total = 0.0;
    double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
      double mid = (p + 0.5) * h, hw = 0.5 * h;
      double acc = 0.0;
      for (int i = 0; i < 32; ++i) acc += rule.weights[i] * g(mid + hw * rule.nodes[i]);
      total += acc * hw;
    }
    if (have_prev && std::abs(total - prev) <= rel_tol * std::max(1.0, std::abs(total)))
      return total;
    prev = total;
    have_prev = true;
  }
  throw Error(ErrorKind::QuadratureNonconvergence, "panel doubling exhausted");
}

/// Vector-valued variant with max-norm convergence across components.
template <typename F>
Vec adaptive_gl_vec(F&& g, Eigen::Index n, double rel_tol = kQuadTol, int max_panels = 1024) {
  const auto& rule = gl32();
  Vec prev = Vec::Zero(n);
  bool have_prev = false;
  for (int panels = 1; panels <= max_panels; panels *= 2) {
    Vec total = Vec::Zero(n);
    double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
      double mid = (p + 0.5) * h, hw = 0.5 * h;
      Vec acc = Vec::Zero(n);
      for (int i = 0; i < 32; ++i) acc += rule.weights[i] * g(mid + hw * rule.nodes[i]);
      total += acc * hw;
    }
    if (have_prev) {
      bool ok = true;
      for (Eigen::Index k = 0; k < n; ++k)
        if (std::abs(total[k] - prev[k]) > rel_tol * std::max(1.0, std::abs(total[k]))) {
          ok = false;
          break;
        }
      if (ok) return total;
    }
    prev = total;
    have_prev = true;
  }
  throw Error(ErrorKind::QuadratureNonconvergence, "panel doubling exhausted");
}

}  // namespace detail

/// Arc length of the curve; Arc and Circle segments contribute exactly.
inline double curve_length(const Curve& gamma, double rel_tol = kQuadTol) {
  double total = 0.0;
  for (const auto& seg : gamma.segments()) {
    if (auto ex = seg.kind.exact_length()) {
      total += *ex;
    } else {
      total += detail::adaptive_gl([&](double v) { return seg.kind.deriv(v).norm(); }, rel_tol);
    }
  }
  return total;
}

/// Integral of f(gamma(s)) ds over the curve parameter (no speed factor).
inline double param_integral(const Curve& gamma, const std::function<double(const Vec&)>& f,
                             double rel_tol = kQuadTol) {
  double total = 0.0;
  for (const auto& seg : gamma.segments()) {
    total += seg.weight * detail::adaptive_gl(
                              [&](double v) { return f(seg.kind.eval(v)) * seg.kind.dtau_dv(v); },
                              rel_tol);
  }
  return total;
}

/// Integral of f along the curve against arc length: int f(gamma)|gamma'| ds.
inline double arclength_integral(const Curve& gamma, const std::function<double(const Vec&)>& f,
                                 double rel_tol = kQuadTol) {
  double total = 0.0;
  for (const auto& seg : gamma.segments()) {
    total += detail::adaptive_gl(
        [&](double v) { return f(seg.kind.eval(v)) * seg.kind.deriv(v).norm(); }, rel_tol);
  }
  return total;
}

/// Batched integrals of many functions over one curve with shared nodes.
/// mode_param = true integrates ds, otherwise against arc length.
inline Vec batched_integral(const Curve& gamma, const std::vector<std::function<double(const Vec&)>>& fs,
                            bool mode_param, double rel_tol = kQuadTol) {
  Eigen::Index n = static_cast<Eigen::Index>(fs.size());
  Vec total = Vec::Zero(n);
  for (const auto& seg : gamma.segments()) {
    auto g = [&](double v) {
      Vec p = seg.kind.eval(v);
      double jac = mode_param ? seg.weight * seg.kind.dtau_dv(v) : seg.kind.deriv(v).norm();
      Vec out(n);
      for (Eigen::Index k = 0; k < n; ++k) out[k] = fs[k](p) * jac;
      return out;
    };
    total += detail::adaptive_gl_vec(g, n, rel_tol);
  }
  return total;
}

}  // namespace design_curves
