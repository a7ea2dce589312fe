#pragma once

#include <stdexcept>
#include <string>

namespace tlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleError : Error {
  using Error::Error;
};
struct DuplicateLabel : Error {
  using Error::Error;
};
struct UnknownGenerator : Error {
  using Error::Error;
};
struct NonMonotoneValuation : Error {
  using Error::Error;
};
struct NotDistributive : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct MissingCertificate : Error {
  using Error::Error;
};
struct ConflictError : Error {
  using Error::Error;
};
struct NotACongruence : Error {
  using Error::Error;
};
struct NotStabilized : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct SizeGuardExceeded : Error {
  using Error::Error;
};
struct DepthExceeded : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error(msg), line(line), col(col) {}
  int line;
  int col;
};

}  // namespace tlat
