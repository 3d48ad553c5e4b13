#pragma once

#include <Eigen/Dense>
#include <memory>
#include <variant>
#include <vector>

#include "design_curves/phase.hpp"

namespace design_curves {

/// Piecewise smooth path M : [-1, 1] -> O(d).
///
/// Descriptors: constant matrix, a single-plane spin (rotation by angle(u) in
/// one coordinate plane), or linear interpolation of user-supplied orthogonal
/// matrices re-orthonormalized by polar decomposition.
class RotationPath {
 public:
  struct Constant {
    Mat m;
  };
  struct PlaneSpin {
    int dim;
    int axis_i, axis_j;
    PhaseFn angle;
  };
  struct InterpTable {
    std::vector<double> us;        // increasing, covering [-1, 1]
    std::vector<Mat> ms;           // orthogonal samples
  };

  static RotationPath identity(int dim) { return RotationPath(Constant{Mat::Identity(dim, dim)}); }
  static RotationPath constant(Mat m) {
    check_orthogonal(m);
    return RotationPath(Constant{std::move(m)});
  }
  static RotationPath plane_spin(int dim, int i, int j, PhaseFn angle) {
    if (i == j || i < 0 || j < 0 || i >= dim || j >= dim)
      throw Error(ErrorKind::InvariantViolation, "bad spin plane axes");
    return RotationPath(PlaneSpin{dim, i, j, std::move(angle)});
  }
  static RotationPath interp(std::vector<double> us, std::vector<Mat> ms) {
    if (us.size() != ms.size() || us.size() < 2)
      throw Error(ErrorKind::InvariantViolation, "interp table needs matching samples");
    for (const auto& m : ms) check_orthogonal(m);
    return RotationPath(InterpTable{std::move(us), std::move(ms)});
  }

  int dim() const {
    if (auto* c = std::get_if<Constant>(&desc_)) return static_cast<int>(c->m.rows());
    if (auto* s = std::get_if<PlaneSpin>(&desc_)) return s->dim;
    return static_cast<int>(std::get<InterpTable>(desc_).ms.front().rows());
  }

  Mat eval(double u) const {
    if (auto* c = std::get_if<Constant>(&desc_)) return c->m;
    if (auto* s = std::get_if<PlaneSpin>(&desc_)) {
      Mat m = Mat::Identity(s->dim, s->dim);
      double a = s->angle(u);
      m(s->axis_i, s->axis_i) = std::cos(a);
      m(s->axis_i, s->axis_j) = -std::sin(a);
      m(s->axis_j, s->axis_i) = std::sin(a);
      m(s->axis_j, s->axis_j) = std::cos(a);
      return m;
    }
    return interp_eval(std::get<InterpTable>(desc_), u);
  }

  /// dM/du. Analytic for constant and spin paths, central differences for tables.
  Mat deriv(double u) const {
    if (std::get_if<Constant>(&desc_)) {
      int d = dim();
      return Mat::Zero(d, d);
    }
    if (auto* s = std::get_if<PlaneSpin>(&desc_)) {
      Mat m = Mat::Zero(s->dim, s->dim);
      double a = s->angle(u), da = s->angle.deriv(u);
      m(s->axis_i, s->axis_i) = -std::sin(a) * da;
      m(s->axis_i, s->axis_j) = -std::cos(a) * da;
      m(s->axis_j, s->axis_i) = std::cos(a) * da;
      m(s->axis_j, s->axis_j) = -std::sin(a) * da;
      return m;
    }
    const double h = 1e-6;
    return (eval(u + h) - eval(u - h)) / (2.0 * h);
  }

  bool is_constant() const { return std::holds_alternative<Constant>(desc_); }

 private:
  explicit RotationPath(std::variant<Constant, PlaneSpin, InterpTable> d) : desc_(std::move(d)) {}

  static void check_orthogonal(const Mat& m) {
    Mat g = m.transpose() * m - Mat::Identity(m.rows(), m.cols());
    if (g.cwiseAbs().maxCoeff() > 1e-10)
      throw Error(ErrorKind::InvariantViolation, "rotation path sample not orthogonal");
  }

  static Mat polar_orthogonalize(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
  }

  static Mat interp_eval(const InterpTable& t, double u) {
    if (u <= t.us.front()) return t.ms.front();
    if (u >= t.us.back()) return t.ms.back();
    size_t hi = 1;
    while (t.us[hi] < u) ++hi;
    double w = (u - t.us[hi - 1]) / (t.us[hi] - t.us[hi - 1]);
    return polar_orthogonalize((1.0 - w) * t.ms[hi - 1] + w * t.ms[hi]);
  }

  std::variant<Constant, PlaneSpin, InterpTable> desc_;
};

}  // namespace design_curves
