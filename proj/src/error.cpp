#include "ialex/error.hpp"

namespace ialex {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotExactCompatible: return "NotExactCompatible";
    case ErrorCode::MissingSplitting: return "MissingSplitting";
    case ErrorCode::NonDividingSplitting: return "NonDividingSplitting";
    case ErrorCode::InadmissibleSequence: return "InadmissibleSequence";
    case ErrorCode::InvalidPerversity: return "InvalidPerversity";
    case ErrorCode::PerversityOutOfRange: return "PerversityOutOfRange";
    case ErrorCode::SuperperversityNotAllowed: return "SuperperversityNotAllowed";
    case ErrorCode::InadmissibleData: return "InadmissibleData";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::MissingOrdinaryData: return "MissingOrdinaryData";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::NotTorsionEntry: return "NotTorsionEntry";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ialex
