#include "hsw/error.hpp"

namespace hsw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCycle: return "MalformedCycle";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::ModeInfeasible: return "ModeInfeasible";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::IncompatibleInputs: return "IncompatibleInputs";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotRankThree: return "NotRankThree";
    case ErrorKind::EqualSubdegrees: return "EqualSubdegrees";
    case ErrorKind::CoefficientMismatch: return "CoefficientMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hsw
