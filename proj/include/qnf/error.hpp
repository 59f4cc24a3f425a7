#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qnf {

// Failure categories. Everything except InvalidArgument signals an input
// that is outside the generic set handled by the normal-form pipelines.
enum class ErrorKind {
  InvalidArgument,
  NonConvergence,
  NotSymmetric,
  RepeatedEigenvalues,
  IsotropicEigenvector,
  SparseSupport,
  ZeroAtOrigin,
  ZeroArgument,
  SingularMatrix,
  SingularReduction,
  NonFactorizable,
  ZeroTensor,
  UnknownRankPattern,
  DegenerateSpan,
  SpanViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<int> mode = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), mode_(mode) {}

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based mode (or pair) index the failure refers to, when there is one.
  std::optional<int> mode() const noexcept { return mode_; }

  bool non_generic() const noexcept { return kind_ != ErrorKind::InvalidArgument; }

 private:
  ErrorKind kind_;
  std::optional<int> mode_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::RepeatedEigenvalues: return "RepeatedEigenvalues";
    case ErrorKind::IsotropicEigenvector: return "IsotropicEigenvector";
    case ErrorKind::SparseSupport: return "SparseSupport";
    case ErrorKind::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularReduction: return "SingularReduction";
    case ErrorKind::NonFactorizable: return "NonFactorizable";
    case ErrorKind::ZeroTensor: return "ZeroTensor";
    case ErrorKind::UnknownRankPattern: return "UnknownRankPattern";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::SpanViolation: return "SpanViolation";
  }
  return "Unknown";
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace qnf
