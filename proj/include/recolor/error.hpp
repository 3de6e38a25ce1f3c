#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

// Failure categories surfaced through the library boundary.  Parse errors map
// to CLI exit code 2, everything else to exit code 1.
enum class ErrorKind {
  Parse,                     // malformed instance/sequence text
  EmbeddingInvalid,          // missing rotation or Euler check failure
  NoAnchor,                  // thread query on a bare cycle
  UndefinedMeasure,          // mad() of an empty graph
  Hypothesis,                // solver preconditions violated (mad, girth, list sizes)
  StructuralClaimViolation,  // a structural lemma found no configuration
  BudgetInapplicable,        // an extension lemma's count precondition failed
  ContractBreach,            // inner sequence does not match the extension contract
  InternalInvariant,         // "cannot happen" states; never silently repaired
  CapExceeded,               // oracle state-space larger than the configured cap
  Validation,                // sequence replay failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace recolor
