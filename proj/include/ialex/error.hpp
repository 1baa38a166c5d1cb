#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ialex {

enum class ErrorCode {
  ParseError,
  ZeroPolynomial,
  BothZero,
  DegreeCapExceeded,
  NotTorsion,
  NotPrime,
  NotExactCompatible,
  MissingSplitting,
  NonDividingSplitting,
  InadmissibleSequence,
  InvalidPerversity,
  PerversityOutOfRange,
  SuperperversityNotAllowed,
  InadmissibleData,
  DivisibilityViolation,
  DegreeOutOfRange,
  MissingOrdinaryData,
  CocycleViolation,
  EmptyComplex,
  NotTorsionEntry,
  SchemaError,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {})
      : std::runtime_error(message), code_(code), path_(std::move(path)) {}

  ErrorCode code() const noexcept { return code_; }
  // JSON path of the offending input field, when known.
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace ialex
