#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

// Base type for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in incompatible scalar variants (Gaussian vs rational-function).
// Plain rationals embed into either variant and never mismatch.
struct VariantMismatchError : Error {
  explicit VariantMismatchError(const std::string& msg) : Error(msg) {}
};

// Input violates a documented precondition of the operation.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Malformed textual or JSON input; `location` points at the offending spot.
struct ParseError : Error {
  ParseError(const std::string& msg, const std::string& where)
      : Error(where.empty() ? msg : msg + " (at " + where + ")"), location(where) {}
  explicit ParseError(const std::string& msg) : ParseError(msg, "") {}
  std::string location;
};

// A structural invariant of the library itself failed; always a bug.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace jumploci
