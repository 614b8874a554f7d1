#include "nevlab/error.hpp"

namespace nevlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotAProbabilityMeasure: return "NotAProbabilityMeasure";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotAPole: return "NotAPole";
    case ErrorCode::MultiplePole: return "MultiplePole";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::NotAPositiveMeasure: return "NotAPositiveMeasure";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DistinctnessViolated: return "DistinctnessViolated";
    case ErrorCode::SupportExhausted: return "SupportExhausted";
    case ErrorCode::NonRealRoot: return "NonRealRoot";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace nevlab
