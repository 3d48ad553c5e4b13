#pragma once

#include <Eigen/Core>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace design_curves {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform pass tolerance for all design certifications.
inline constexpr double kPassTol = 1e-9;
/// Relative tolerance for adaptive quadrature.
inline constexpr double kQuadTol = 1e-10;

enum class ErrorKind {
  AntipodalPoints,
  CoincidentPoints,
  QuadratureNonconvergence,
  DegreeViolation,
  Disconnected,
  UnknownFamily,
  DimensionMismatch,
  ParseError,
  InvariantViolation,
  OddSetSize,
  WeightInvariantViolation,
  SouthPoleViolation,
  PhaseClosureViolation,
  PhaseExclusionViolation,
  BudgetTooSmall,
  DuplicatePoints,
  DeltaOutOfRange,
  EdgeTooLong,
  EdgeInteriorBlocked,
  SimplicityFailure,
  OrthogonalFibers,
  SameFiber,
  StrengthViolation,
  GonNotSubset,
  IoError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::AntipodalPoints: return "AntipodalPoints";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::QuadratureNonconvergence: return "QuadratureNonconvergence";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::OddSetSize: return "OddSetSize";
    case ErrorKind::WeightInvariantViolation: return "WeightInvariantViolation";
    case ErrorKind::SouthPoleViolation: return "SouthPoleViolation";
    case ErrorKind::PhaseClosureViolation: return "PhaseClosureViolation";
    case ErrorKind::PhaseExclusionViolation: return "PhaseExclusionViolation";
    case ErrorKind::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorKind::EdgeTooLong: return "EdgeTooLong";
    case ErrorKind::EdgeInteriorBlocked: return "EdgeInteriorBlocked";
    case ErrorKind::SimplicityFailure: return "SimplicityFailure";
    case ErrorKind::OrthogonalFibers: return "OrthogonalFibers";
    case ErrorKind::SameFiber: return "SameFiber";
    case ErrorKind::StrengthViolation: return "StrengthViolation";
    case ErrorKind::GonNotSubset: return "GonNotSubset";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using NodeId = std::int64_t;

/// Fresh node identifiers for constructively built curve endpoints.
inline NodeId next_node_id() {
  static std::atomic<NodeId> counter{1};
  return counter.fetch_add(1);
}

// Interleaved real <-> complex views of points on S^{2n+1} in C^{n+1}:
// real layout (Re z_0, Im z_0, Re z_1, Im z_1, ...).
inline CVec to_complex(const Vec& x) {
  if (x.size() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "odd real dimension for complex view");
  CVec z(x.size() / 2);
  for (Eigen::Index i = 0; i < z.size(); ++i)
    z[i] = std::complex<double>(x[2 * i], x[2 * i + 1]);
  return z;
}

inline Vec to_real(const CVec& z) {
  Vec x(2 * z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    x[2 * i] = z[i].real();
    x[2 * i + 1] = z[i].imag();
  }
  return x;
}

}  // namespace design_curves
