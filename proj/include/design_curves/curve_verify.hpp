#pragma once

#include "design_curves/curve.hpp"
#include "design_curves/multi_index.hpp"
#include "design_curves/quadrature.hpp"
#include "design_curves/report.hpp"

namespace design_curves {

/// Weighted t-design check: parameter integral of every monomial of degree
/// <= t must equal the sphere average (Definition of a weighted design curve).
inline DesignReport verify_weighted_curve(const Curve& gamma, int t, double tol = kPassTol) {
  if (!gamma.closed())
    throw Error(ErrorKind::InvariantViolation, "weighted design verification needs a closed curve");
  int D = gamma.dim();
  DesignReport rep;
  rep.strength = t;
  rep.tol = tol;
  rep.basis = monomial_basis(D, t);
  std::vector<std::function<double(const Vec&)>> fs;
  fs.reserve(rep.basis.size());
  for (const auto& alpha : rep.basis)
    fs.emplace_back([&alpha](const Vec& p) { return alpha.eval(p); });
  Vec integrals = batched_integral(gamma, fs, /*mode_param=*/true);
  rep.defects.resize(rep.basis.size());
  for (size_t i = 0; i < rep.basis.size(); ++i) {
    rep.defects[i] = std::abs(integrals[static_cast<Eigen::Index>(i)] -
                              sphere_average(rep.basis[i], D - 1));
    rep.max_defect = std::max(rep.max_defect, rep.defects[i]);
  }
  rep.length = curve_length(gamma);
  rep.pass = rep.max_defect <= tol;
  return rep;
}

}  // namespace design_curves
