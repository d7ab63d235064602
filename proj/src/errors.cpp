#include "braidlift/errors.hpp"

namespace braidlift {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::StrandMismatch: return "StrandMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotTranspositions: return "NotTranspositions";
    case ErrorKind::NotIdentityProduct: return "NotIdentityProduct";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::InconsistentArcs: return "InconsistentArcs";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotKnotGroup: return "NotKnotGroup";
    case ErrorKind::NonPrimitiveLabel: return "NonPrimitiveLabel";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::NotATransvection: return "NotATransvection";
    case ErrorKind::BandColorsDiffer: return "BandColorsDiffer";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_parse_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedToken:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::MalformedPD:
    case ErrorKind::InconsistentArcs:
    case ErrorKind::NotCoprime:
      return true;
    default:
      return false;
  }
}

}  // namespace braidlift
