#pragma once

#include "pmx/polymat.hpp"

namespace pmx {

/// Brute-force references for property testing and the CLI --oracle path.
/// Correctness bar only; every routine carries a hard size guard and
/// throws SizeGuardError beyond it.

/// Exact determinant by memoized cofactor expansion. n <= 8.
Poly det_oracle(const PolyMat& a);

/// Canonical column Hermite form by Euclidean column elimination:
/// lower triangular, monic diagonal, deg h_ij < deg h_ii for j < i.
/// Square nonsingular input, n <= 6.
PolyMat hermite_oracle(const PolyMat& a);

/// Generic determinant bound: max over permutations of the sum of entry
/// degrees along the permutation, zero entries contributing 0. n <= 8.
int degdet_oracle(const PolyMat& a);

/// det has degree 0 and is nonzero. n <= 8.
bool unimodular_check(const PolyMat& w);

/// Right-unimodular equivalence via equal Hermite forms. n <= 6.
bool equiv_check(const PolyMat& a, const PolyMat& b);

}  // namespace pmx
