#include "gcn/error.hpp"

namespace gcn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdenticalPoints: return "IdenticalPoints";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotCorrect: return "NotCorrect";
    case ErrorKind::NodeAbsent: return "NodeAbsent";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::TooManyCollinear: return "TooManyCollinear";
    case ErrorKind::NotFullyFactorable: return "NotFullyFactorable";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::CharacterizationViolated: return "CharacterizationViolated";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::TooFewNodes: return "TooFewNodes";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::InvalidProvenance: return "InvalidProvenance";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace gcn
