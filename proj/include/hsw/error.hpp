#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsw {

enum class ErrorKind {
  MalformedCycle,
  PointOutOfRange,
  RepeatedPoint,
  DegreeMismatch,
  CapExceeded,
  NotTransitive,
  NotMember,
  NotPrime,
  DimensionMismatch,
  FieldMismatch,
  AxiomViolation,
  DegreeTooLarge,
  NotAssociative,
  ModeInfeasible,
  SearchSpaceTooLarge,
  InvalidPartition,
  NotRegular,
  NotAutomorphism,
  NotCyclic,
  IncompatibleInputs,
  GroupTooLarge,
  NotRankThree,
  EqualSubdegrees,
  CoefficientMismatch,
  BadParameter,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All domain failures surface as this exception; `kind()` is the stable
/// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by bounded closures; `lower_bound` is how many elements were
/// reached before giving up.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t lower_bound, std::uint64_t cap)
      : Error(ErrorKind::CapExceeded,
              "closure exceeded cap of " + std::to_string(cap) +
                  " elements (at least " + std::to_string(lower_bound) + ")"),
        lower_bound_(lower_bound) {}

  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

}  // namespace hsw
