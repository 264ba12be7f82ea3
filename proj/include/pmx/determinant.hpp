#pragma once

#include <optional>
#include <vector>

#include "pmx/polymat.hpp"

namespace pmx {

/// Determinant of the implicit unimodular transform from its constant
/// factors: with Ul = cm_completion(ur0, vu0), returns
/// det(vu0 * Ul) / det([Ul | ur0]). For the constant terms of the kernel
/// basis and right factor of a block triangularization this equals
/// det(U)^{-1}. Throws StructuralError when ur0 is rank deficient.
uint32_t unimodular_det_constants(const ConstMat& ur0, const ConstMat& vu0);

/// Exact determinant (correct leading coefficient) of a nonsingular
/// matrix by recursive block triangularization: the product of the
/// determinants of the column basis of the upper half and of the lower
/// half times the kernel basis, scaled by the constant determinant of the
/// eliminating transform.
Poly determinant_rec(const PolyMat& a);

/// determinant_rec after degree smoothing, which preserves the
/// determinant exactly.
Poly determinant(const PolyMat& a);

/// Constant-coefficient shortcut: given the monic Hermite diagonal of A,
/// returns det(A) when the diagonal product has a nonzero constant term,
/// and nothing otherwise. Not wired into the default pipeline.
std::optional<Poly> det_fastpath_diag(const PolyMat& a,
                                      const std::vector<Poly>& diag);

}  // namespace pmx
