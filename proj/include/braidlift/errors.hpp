#ifndef BRAIDLIFT_ERRORS_HPP
#define BRAIDLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidlift {

enum class ErrorKind {
  MalformedToken,
  IndexOutOfRange,
  StrandMismatch,
  SizeMismatch,
  NotTranspositions,
  NotIdentityProduct,
  NotTransitive,
  MalformedPD,
  InconsistentArcs,
  Disconnected,
  NotCoprime,
  NotKnotGroup,
  NonPrimitiveLabel,
  NonPrimitive,
  InvalidColoring,
  NotATransvection,
  BandColorsDiffer,
  ParityViolation,
  InternalInconsistency,
};

const char* error_kind_name(ErrorKind k);

// Errors a user can cause by handing us bad text.
bool is_parse_error(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braidlift

#endif
