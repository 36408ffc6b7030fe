#pragma once

#include <stdexcept>
#include <string>

namespace harary {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tree construction / file input
struct NotATree : Error {
  using Error::Error;
};
struct BadLabel : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// parameter validation
struct OutOfRange : Error {
  using Error::Error;
};
struct BadSpec : Error {
  using Error::Error;
};

// transforms
struct NotApplicable : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct SumMismatch : Error {
  using Error::Error;
};
struct BadVertex : Error {
  using Error::Error;
};

// enumeration / verification
struct InconsistentClass : Error {
  using Error::Error;
};
struct EmptyClass : Error {
  using Error::Error;
};
struct UnknownClaim : Error {
  using Error::Error;
};
struct IdentityViolated : Error {
  using Error::Error;
};

// cross-check of two independent computations disagreed: implementation bug
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace harary
