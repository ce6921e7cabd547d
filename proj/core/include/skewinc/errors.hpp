#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewinc {

/// Failure categories surfaced by the library. The CLI maps Parse to exit
/// code 2 and everything else to exit code 1.
enum class ErrorKind {
  SpecMismatch,         // operands bound to different rings or contexts
  NotAUnit,             // inversion requested for a non-invertible element
  NotAPoset,            // relation closure violates antisymmetry
  UnsupportedQuery,     // exhaustive query on an infinite ring / bound exceeded
  UnsupportedPair,      // basis element requested on an incomparable pair
  Parse,                // malformed textual input
  HypothesisViolation,  // a stated hypothesis of the requested procedure fails
  InvariantViolation,   // internal consistency check failed (library defect)
  InvalidArgument,      // precondition on plain arguments violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending element index (0-based), when the error concerns one.
  std::optional<int> index() const noexcept { return index_; }

  Error&& with_index(int i) && {
    index_ = i;
    return std::move(*this);
  }

 private:
  ErrorKind kind_;
  std::optional<int> index_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace skewinc
