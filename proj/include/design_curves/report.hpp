#pragma once

#include <vector>

#include "design_curves/multi_index.hpp"

namespace design_curves {

/// Certification record for a design set, curve, or assembly.
struct DesignReport {
  int strength = 0;
  std::vector<MultiIndex> basis;
  std::vector<double> defects;  // one per basis element
  double max_defect = 0.0;
  double length = 0.0;          // meaningful for curve reports
  double eps_claimed = 0.0;
  double eps_empirical = 0.0;
  double c = 0.0;
  bool pass = false;
  double tol = kPassTol;
  std::uint64_t seed = 0;

  /// Index of the worst basis element.
  int argmax_defect() const {
    int best = 0;
    for (size_t i = 0; i < defects.size(); ++i)
      if (defects[i] > defects[best]) best = static_cast<int>(i);
    return best;
  }
};

}  // namespace design_curves
