#pragma once

#include <stdexcept>
#include <string>

namespace pmx {

/// Input matrix is singular where a nonsingular one is required.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion or division by the zero element / zero polynomial.
struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute-force routine called beyond its hard size limit.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An invariant that callers are supposed to establish does not hold;
/// signals a bug upstream (e.g. a right factor that is not exact).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension or modulus mismatch between operands.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Matrix file rejected; carries the 1-based offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

}  // namespace pmx
