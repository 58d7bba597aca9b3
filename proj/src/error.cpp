#include "selfsim/error.hpp"

namespace selfsim {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::Syntax: return "Syntax";
    case Errc::UndefinedName: return "UndefinedName";
    case Errc::Arity: return "Arity";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::InvalidContext: return "InvalidContext";
    case Errc::Io: return "Io";
    case Errc::NonUnit: return "NonUnit";
    case Errc::AllDivisible: return "AllDivisible";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::ExponentNotStabilized: return "ExponentNotStabilized";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SaturationOverflow: return "SaturationOverflow";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::PermSolveFail: return "PermSolveFail";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::Unbounded: return "Unbounded";
    case Errc::InconsistentTransversal: return "InconsistentTransversal";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::FIllDefined: return "FIllDefined";
    case Errc::NonUnitSum: return "NonUnitSum";
    case Errc::NotConjugate: return "NotConjugate";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

ErrorCategory category_of(Errc code) {
  switch (code) {
    case Errc::Syntax:
    case Errc::UndefinedName:
    case Errc::Arity:
      return ErrorCategory::Parse;
    case Errc::ContextMismatch:
    case Errc::InvalidContext:
    case Errc::Io:
      return ErrorCategory::Context;
    default:
      return ErrorCategory::Math;
  }
}

}  // namespace selfsim
