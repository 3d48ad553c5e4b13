#pragma once

#include "design_curves/assembly.hpp"
#include "design_curves/curve_verify.hpp"

namespace design_curves {

/// Theorem constants: the assembled cycle is a
/// ((W + delta) / (2 pi |Y|), 1 / (2 pi |Y|))-approximate t-design cycle.
inline std::pair<double, double> a_priori_eps(size_t y_size, double w, double delta) {
  double denom = 2.0 * kPi * static_cast<double>(y_size);
  return {(w + delta) / denom, 1.0 / denom};
}

/// Changing the scaling constant: an (eps, c)-approximate curve of length l
/// is an (eps + |c~ - c| l, c~)-approximate curve.
inline double rescale_c(double eps, double c, double length, double c_new) {
  if (length <= 0.0 || c_new <= 0.0)
    throw Error(ErrorKind::InvariantViolation, "rescale needs positive length and constant");
  return eps + std::abs(c_new - c) * length;
}

/// Overlap accounting: eps_gamma = eps + c (|L| + l(gamma) - 2 l(shared)).
inline double overlap_bound(double eps, double c, double manifold_length, double curve_length,
                            double shared_length) {
  if (shared_length > std::min(manifold_length, curve_length) + 1e-12)
    throw Error(ErrorKind::InvariantViolation, "shared length exceeds a total length");
  return eps + c * (manifold_length + curve_length - 2.0 * shared_length);
}

/// Empirical (eps, c) defect: max over monomials of degree <= t of
/// |c int_gamma f - sphere average| / sup f. A certified lower bound on the
/// true eps of the curve.
inline DesignReport empirical_defect(const Curve& gamma, int t, double c,
                                     double eps_claimed = 0.0, double tol = kPassTol) {
  if (!gamma.closed())
    throw Error(ErrorKind::InvariantViolation, "empirical defect needs a closed curve");
  int D = gamma.dim();
  DesignReport rep;
  rep.strength = t;
  rep.tol = tol;
  rep.c = c;
  rep.eps_claimed = eps_claimed;
  rep.basis = monomial_basis(D, t);
  std::vector<std::function<double(const Vec&)>> fs;
  fs.reserve(rep.basis.size());
  for (const auto& alpha : rep.basis)
    fs.emplace_back([&alpha](const Vec& p) { return alpha.eval(p); });
  Vec integrals = batched_integral(gamma, fs, /*mode_param=*/false);
  rep.defects.resize(rep.basis.size());
  for (size_t i = 0; i < rep.basis.size(); ++i) {
    double dev = std::abs(c * integrals[static_cast<Eigen::Index>(i)] -
                          sphere_average(rep.basis[i], D - 1));
    rep.defects[i] = dev / monomial_sup(rep.basis[i]);
    rep.eps_empirical = std::max(rep.eps_empirical, rep.defects[i]);
  }
  rep.max_defect = rep.eps_empirical;
  rep.length = curve_length(gamma);
  rep.pass = (eps_claimed > 0.0) ? (rep.eps_empirical <= eps_claimed + 1e-9)
                                 : (rep.eps_empirical <= tol);
  return rep;
}

/// One row of the asymptotic table for the delta_t = min(1, W_t)/t pipeline.
struct PipelineRow {
  int t = 0;
  size_t y_size = 0;
  bool valid = false;     // Y certified at floor(t/2)
  double w = 0.0;
  double delta = 0.0;
  double length = 0.0;
  double eps = 0.0;            // W / (pi |Y|)
  double eps_empirical = 0.0;  // at c = 1 / (2 pi |Y|)
};

inline std::vector<PipelineRow> asymptotic_pipeline(
    const std::vector<std::pair<int, ProjectiveDesignSet>>& entries, std::uint64_t seed = 0) {
  std::vector<PipelineRow> rows;
  for (const auto& [t, y] : entries) {
    PipelineRow row;
    row.t = t;
    row.y_size = y.size();
    DesignReport ver = verify_projective_design(y, t / 2);
    row.valid = ver.pass;
    if (row.valid) {
      SpanningTree tree = build_mst(y);
      double w = 2.0 * tree.total_weight;
      double delta = std::min(1.0, w) / std::max(1, t);
      AssemblyResult asmres = assemble_gamma(y, tree, delta, nullptr, seed);
      row.w = w;
      row.delta = delta;
      row.length = asmres.length;
      row.eps = w / (kPi * static_cast<double>(y.size()));
      double c = 1.0 / (2.0 * kPi * static_cast<double>(y.size()));
      row.eps_empirical = empirical_defect(asmres.cycle, t, c).eps_empirical;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace design_curves
