#ifndef LOGHM_ERROR_HPP
#define LOGHM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace loghm {

enum class ErrorKind {
  ZeroOrder,
  ZeroConstantTerm,
  CoefficientOverflow,
  EvaluationFailure,
  DegenerateDerivative,
  DilatationNotVanishingAtZero,
  DilatationOnBoundary,
  OriginSingularity,
  OriginExcluded,
  AllPointsFailed,
  QuadratureNonConvergence,
  NotNormalized,
  ZeroOnCircle,
  WrongVariant,
  NoSeriesForm,
  InputError,
  IOFailure,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroOrder: return "ZeroOrder";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorKind::EvaluationFailure: return "EvaluationFailure";
    case ErrorKind::DegenerateDerivative: return "DegenerateDerivative";
    case ErrorKind::DilatationNotVanishingAtZero: return "DilatationNotVanishingAtZero";
    case ErrorKind::DilatationOnBoundary: return "DilatationOnBoundary";
    case ErrorKind::OriginSingularity: return "OriginSingularity";
    case ErrorKind::OriginExcluded: return "OriginExcluded";
    case ErrorKind::AllPointsFailed: return "AllPointsFailed";
    case ErrorKind::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ZeroOnCircle: return "ZeroOnCircle";
    case ErrorKind::WrongVariant: return "WrongVariant";
    case ErrorKind::NoSeriesForm: return "NoSeriesForm";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loghm

#endif  // LOGHM_ERROR_HPP
