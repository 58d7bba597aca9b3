#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

enum class Errc {
  Syntax,
  UndefinedName,
  Arity,
  ContextMismatch,
  InvalidContext,
  Io,
  NonUnit,
  AllDivisible,
  DepthExceeded,
  ExponentNotStabilized,
  ShapeMismatch,
  SaturationOverflow,
  NotInvariant,
  PermSolveFail,
  NotAbelian,
  Unbounded,
  InconsistentTransversal,
  InvalidTriple,
  FIllDefined,
  NonUnitSum,
  NotConjugate,
  Overflow,
};

/// Broad class of an error; the CLI maps each to a distinct exit code.
enum class ErrorCategory { Parse, Context, Math };

const char* errc_name(Errc code);
ErrorCategory category_of(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace selfsim
