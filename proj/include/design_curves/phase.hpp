#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "design_curves/common.hpp"

namespace design_curves {

/// Continuous, piecewise smooth scalar phase with its derivative.
struct PhaseFn {
  std::function<double(double)> f;
  std::function<double(double)> df;

  double operator()(double x) const { return f(x); }
  double deriv(double x) const { return df(x); }

  static PhaseFn constant(double v) {
    return {[v](double) { return v; }, [](double) { return 0.0; }};
  }
  /// theta(x) = a + b*x
  static PhaseFn linear(double a, double b) {
    return {[a, b](double x) { return a + b * x; }, [b](double) { return b; }};
  }
};

/// theta(0) - theta(1) must be an integer multiple of 2*pi (tol 1e-10).
inline void require_phase_closure(const PhaseFn& theta) {
  double gap = theta(0.0) - theta(1.0);
  double cycles = gap / (2.0 * kPi);
  if (std::abs(cycles - std::round(cycles)) > 1e-10)
    throw Error(ErrorKind::PhaseClosureViolation,
                "theta(0) - theta(1) = " + std::to_string(gap) + " not in 2*pi*Z");
}

}  // namespace design_curves
