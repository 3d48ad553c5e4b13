#pragma once

#include <numeric>
#include <vector>

#include "design_curves/common.hpp"

namespace design_curves {

/// Exponent vector naming the monomial x^alpha on R^D.
struct MultiIndex {
  std::vector<int> exponents;

  int dim() const { return static_cast<int>(exponents.size()); }
  int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

  double eval(const Vec& x) const {
    double out = 1.0;
    for (int i = 0; i < dim(); ++i) {
      double xi = x[i];
      for (int e = 0; e < exponents[i]; ++e) out *= xi;
    }
    return out;
  }
};

/// All multi-indices on R^D of degree <= t in graded lexicographic order.
/// Count is C(t + D, D).
inline std::vector<MultiIndex> monomial_basis(int D, int t) {
  if (D < 2) throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be >= 2");
  if (t < 0) throw Error(ErrorKind::InvariantViolation, "strength must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> alpha(D, 0);
  for (int deg = 0; deg <= t; ++deg) {
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[0] = deg;
    while (true) {
      out.push_back(MultiIndex{alpha});
      int i = D - 2;
      while (i >= 0 && alpha[i] == 0) --i;
      if (i < 0) break;
      int rest = 0;
      for (int j = i + 1; j < D; ++j) rest += alpha[j];
      alpha[i] -= 1;
      for (int j = i + 1; j < D; ++j) alpha[j] = 0;
      alpha[i + 1] = rest + 1;
    }
  }
  return out;
}

/// Normalized average of x^alpha over S^d: zero for any odd exponent,
/// otherwise prod (alpha_i - 1)!! / prod_{j=1}^{k} (d + 2j - 1) with |alpha| = 2k.
inline double sphere_average(const MultiIndex& alpha, int d) {
  if (alpha.dim() != d + 1)
    throw Error(ErrorKind::DimensionMismatch, "multi-index has wrong ambient dimension");
  for (int e : alpha.exponents)
    if (e % 2 != 0) return 0.0;
  int k = alpha.degree() / 2;
  // exact integer double factorials, promoted to double at the end
  long double num = 1.0L;
  for (int e : alpha.exponents)
    for (int m = e - 1; m > 0; m -= 2) num *= m;
  long double den = 1.0L;
  for (int j = 1; j <= k; ++j) den *= (d + 2 * j - 1);
  return static_cast<double>(num / den);
}

/// sup over the sphere of x^alpha: prod (alpha_i / k)^(alpha_i / 2), k = |alpha|.
inline double monomial_sup(const MultiIndex& alpha) {
  int k = alpha.degree();
  if (k == 0) return 1.0;
  double out = 1.0;
  for (int e : alpha.exponents)
    if (e > 0) out *= std::pow(static_cast<double>(e) / k, 0.5 * e);
  return out;
}

}  // namespace design_curves
