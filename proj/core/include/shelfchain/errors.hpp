#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shelfchain {

/// Failure categories surfaced by the library. The CLI reports these by name
/// in its machine-readable error object.
enum class ErrorKind {
  CycleError,
  LabelingError,
  UnknownLabel,
  LabelClash,
  NotAnUpset,
  NotComparable,
  NotDecomposable,
  UnequalDepth,
  MissingLeafPoset,
  DuplicateLeafLabel,
  InvalidTree,
  InvalidState,
  InadmissibleSet,
  PositionOutOfRange,
  NotALinearExtension,
  GroundSetMismatch,
  InvalidPartition,
  MissingWeight,
  NegativeWeight,
  NotSquare,
  PairNotBreakable,
  NotAForest,
  UpsetPropertyViolation,
  CapExceeded,
  NonAbelian,
  CharacterDomainError,
  NonIntegerMultiplicity,
  NonRealEigenvalue,
  DimensionMismatch,
  NotStochastic,
  Reducible,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace shelfchain
