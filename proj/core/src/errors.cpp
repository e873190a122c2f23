#include "shelfchain/errors.hpp"

namespace shelfchain {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::LabelingError: return "LabelingError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::LabelClash: return "LabelClash";
    case ErrorKind::NotAnUpset: return "NotAnUpset";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::UnequalDepth: return "UnequalDepth";
    case ErrorKind::MissingLeafPoset: return "MissingLeafPoset";
    case ErrorKind::DuplicateLeafLabel: return "DuplicateLeafLabel";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InadmissibleSet: return "InadmissibleSet";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::NotALinearExtension: return "NotALinearExtension";
    case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::MissingWeight: return "MissingWeight";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::PairNotBreakable: return "PairNotBreakable";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::UpsetPropertyViolation: return "UpsetPropertyViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonAbelian: return "NonAbelian";
    case ErrorKind::CharacterDomainError: return "CharacterDomainError";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::NonRealEigenvalue: return "NonRealEigenvalue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

}  // namespace shelfchain
