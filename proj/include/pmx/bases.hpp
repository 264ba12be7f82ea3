#pragma once

#include "pmx/polymat.hpp"

namespace pmx {

/// Minimal approximant basis at the given order: the output P (n x n for
/// an m x n input) is nonsingular, s-column reduced, every column p
/// satisfies F*p = 0 mod x^order, and every such vector is a K[x]-
/// combination of P's columns. Iterative order-by-order elimination with
/// deterministic pivoting (minimal current shifted degree, ties to the
/// lowest column index).
PolyMat approximant_basis(const PolyMat& f, int order, const Shift& s);

/// s-minimal right kernel basis of a full-row-rank m x n matrix
/// (m <= n, cdeg(F) <= s componentwise): N is n x (n-m), F*N = 0 exactly,
/// lm_s(N) has full column rank, and the sum of the s-column degrees of N
/// is at most sum(s). Computed from an approximant basis at order
/// sum(s)+1, whose columns of s-degree <= sum(s) are exactly the kernel
/// vectors; the order is doubled up to three times as a safety net before
/// a rank-deficiency error is raised.
PolyMat kernel_basis(const PolyMat& f, const Shift& s);

/// Column basis of a full-row-rank m x n matrix: square, nonsingular,
/// column reduced, generating the column K[x]-module of the input.
/// Euclidean column elimination to a triangular basis followed by column
/// reduction, so that its column degrees sum to deg det.
PolyMat column_basis(const PolyMat& au);

/// Column basis bundle as consumed by the determinant recursion.
struct ColumnBasisExt {
  PolyMat b1;  // m x m column basis of Au
  PolyMat ur;  // n x (n-m) kernel basis of Au
  PolyMat vu;  // m x n right factor, B1 * Vu = Au exactly
};

ColumnBasisExt column_basis_ext(const PolyMat& au, const Shift& s);

/// Exact right factor V with B*V = A, for columns of A lying in the
/// column module of the nonsingular B. Adjugate route: fraction-free
/// (Bareiss) elimination gives det(B) and det(B)*V, and the entry-wise
/// division by det(B) carries the membership check; a nonzero remainder
/// raises StructuralError.
PolyMat right_factor(const PolyMat& b, const PolyMat& a);

}  // namespace pmx
