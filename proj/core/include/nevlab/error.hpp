#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nevlab {

enum class ErrorCode {
  EmptyInput,
  NonPositiveWeight,
  NonFiniteValue,
  LengthMismatch,
  DomainError,
  NotAProbabilityMeasure,
  ZeroPolynomial,
  NoConvergence,
  NotAPole,
  MultiplePole,
  PoleEvaluation,
  NotAPositiveMeasure,
  RankDeficient,
  ResidualTooLarge,
  NegativeWeight,
  DistinctnessViolated,
  SupportExhausted,
  NonRealRoot,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) map failures to exit statuses without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace nevlab
