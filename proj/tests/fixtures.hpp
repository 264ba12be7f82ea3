#pragma once

#include <string>

#include "pmx/io.hpp"
#include "pmx/polymat.hpp"

// Worked matrices used as regression anchors throughout the tests, in the
// CLI file grammar so that parsing them doubles as an io exercise.
namespace fixtures {

// 3x3 over Z7; Hermite diagonal (1, x+6, x^9+...), full form in kH3.
inline const char* kA3 =
    "7 3 3\n"
    "1 6\n"
    "1 6 1 2\n"
    "3\n"
    "0 1 4 0 5 4\n"
    "4 0 0 2 5 6\n"
    "0 5 6 5 1\n"
    "2\n"
    "0 0 6 5 5 2\n"
    "6\n";

// Hermite form of kA3.
inline const char* kH3 =
    "7 3 3\n"
    "1\n"
    "0\n"
    "0\n"
    "1\n"
    "6 1\n"
    "0\n"
    "5 0 4 3 4 0 5 2 4\n"
    "4 6 5 4 0 3 3 2 3\n"
    "0 4 3 3 4 6 4 1 2 1\n";

// Top two rows of kA3: the 2x3 matrix with column degrees (5,5,4).
inline const char* kAu23 =
    "7 2 3\n"
    "1 6\n"
    "1 6 1 2\n"
    "3\n"
    "0 1 4 0 5 4\n"
    "4 0 0 2 5 6\n"
    "0 5 6 5 1\n";

// (5,5,4)-minimal kernel basis of kAu23, unique up to a nonzero scalar.
inline const char* kN31 =
    "7 3 1\n"
    "1 0 4 3 5 4 6\n"
    "0 6 1 5 4\n"
    "2 3 5 4 0 4 4 4\n";

// Column basis of kAu23.
inline const char* kB22 =
    "7 2 2\n"
    "5 5\n"
    "1\n"
    "3\n"
    "1\n";

// 5x5 over Z7 with determinant kDet5.
inline const char* kA5 =
    "7 5 5\n"
    "2 6\n"
    "4 5\n"
    "0 0 1 3\n"
    "2 6\n"
    "0 0 0 0 6 4\n"
    "0 6\n"
    "5\n"
    "0 0 0 3\n"
    "0 6\n"
    "0 0 0 0 0 4\n"
    "5\n"
    "3 1\n"
    "2\n"
    "5\n"
    "0 0 5\n"
    "0\n"
    "1\n"
    "5 0 4\n"
    "6 0 5\n"
    "0 0 1 0 1\n"
    "0\n"
    "2\n"
    "3\n"
    "0 0 4\n"
    "3 0 4 0 5\n";

// det(kA5) = 3x^10+5x^9+3x^8+2x^7+6x^6+6x^5+x^4+6x^3+5x^2+x+4.
inline const char* kDet5 = "4 1 5 6 1 6 6 2 3 5 3";

// Column basis of the top three rows of kA5 (leading 3x3 block).
inline const char* kB1of5 =
    "7 3 3\n"
    "2 6\n"
    "4 5\n"
    "0 0 1 3\n"
    "0 6\n"
    "5\n"
    "0 0 0 3\n"
    "5\n"
    "3 1\n"
    "2\n";

// Kernel basis of the top three rows of kA5.
inline const char* kUr5 =
    "7 5 2\n"
    "3\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "0 0 1\n"
    "4\n"
    "0\n"
    "0\n"
    "1\n";

// Right factor: kB1of5 * kVu5 = top three rows of kA5.
inline const char* kVu5 =
    "7 3 5\n"
    "1\n"
    "0\n"
    "0\n"
    "1\n"
    "0\n"
    "0\n"
    "1\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "1\n"
    "0\n"
    "0 0 6\n";

// Second diagonal block of the kA5 elimination: bottom rows times kUr5.
inline const char* kB2of5 =
    "7 2 2\n"
    "4 0 1\n"
    "0 0 6 0 5\n"
    "0 0 5\n"
    "3 0 0 0 5\n";

// Row partial linearization of kA3 with degrees (0,1,9).
inline const char* kParlinA3 =
    "7 5 5\n"
    "1 6\n"
    "1 6 1 2\n"
    "0\n"
    "0\n"
    "3\n"
    "0 1 4 0 5 4\n"
    "4 0 0 2 5 6\n"
    "0\n"
    "0\n"
    "0 5 6 5 1\n"
    "2\n"
    "0 0 6 5\n"
    "0 0 0 0 1\n"
    "0\n"
    "6\n"
    "0\n"
    "5 2\n"
    "6\n"
    "0 0 0 0 1\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "6\n"
    "0\n";

// Row partial linearization of kH3 with degrees (0,1,9).
inline const char* kParlinH3 =
    "7 5 5\n"
    "1\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "1\n"
    "6 1\n"
    "0\n"
    "0\n"
    "0\n"
    "5 0 4 3\n"
    "4 6 5 4\n"
    "0 0 0 0 1\n"
    "0\n"
    "0 4 3 3\n"
    "4 0 5 2\n"
    "0 3 3 2\n"
    "6\n"
    "0 0 0 0 1\n"
    "4 6 4 1\n"
    "4\n"
    "3\n"
    "0\n"
    "6\n"
    "2 1\n";

// Degree-smoothing linearization of kA3 (6x6).
inline const char* kC6 =
    "7 6 6\n"
    "1 6\n"
    "1 6\n"
    "3\n"
    "1 2\n"
    "0\n"
    "0\n"
    "0 1 4\n"
    "4\n"
    "0 5 6\n"
    "0 2\n"
    "5 6\n"
    "0 0 0 6\n"
    "2\n"
    "0\n"
    "6\n"
    "6 5\n"
    "5 2\n"
    "0\n"
    "0\n"
    "0 0 6\n"
    "0\n"
    "1\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "0\n"
    "0 0 6\n"
    "1\n"
    "0\n"
    "0 5 4\n"
    "0\n"
    "5 1\n"
    "0\n"
    "0\n"
    "1\n";

// Off-diagonal block of the Hermite form of the cycled kC6.
inline const char* kR33 =
    "7 3 3\n"
    "0\n"
    "0\n"
    "0\n"
    "6\n"
    "3\n"
    "4\n"
    "4 0 6 2 4 1 6 4\n"
    "6 2 0 3 3 4 0 4 6\n"
    "2 1 5 4 0 3 3 2 3\n";

inline pmx::PolyMat get(const char* text) { return pmx::parse_pmat(text); }

}  // namespace fixtures
