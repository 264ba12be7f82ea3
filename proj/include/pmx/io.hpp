#pragma once

#include <string>
#include <string_view>

#include "pmx/polymat.hpp"

namespace pmx {

/// Matrix file grammar:
///   line 1:          <p> <m> <n>      (decimal, single spaces)
///   then m*n lines, row-major, one entry per line: space-separated
///   decimal coefficients in ascending degree, the literal `0` for the
///   zero polynomial. Lines starting with `#` and blank lines are
///   ignored. Output carries a trailing newline.
///
/// Throws ParseError (with 1-based line number) on malformed input,
/// non-prime modulus, out-of-range coefficients or wrong entry count.
PolyMat parse_pmat(std::string_view text);

/// Canonical serialization of the grammar above; byte-identical for equal
/// matrices.
std::string format_pmat(const PolyMat& a);

/// One coefficient line (no trailing newline), same token format as a
/// matrix entry.
std::string format_poly(const Poly& p);

/// Comma-separated integers, e.g. "5,5,4" or "0,-1,-9".
Shift parse_shift(std::string_view text);

}  // namespace pmx
