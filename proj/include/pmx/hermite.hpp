#pragma once

#include <vector>

#include "pmx/polymat.hpp"

namespace pmx {

/// Diagonal entries of the (column) Hermite form of a nonsingular matrix,
/// monic, in order. Recursive block triangularization: the upper half is
/// replaced by its column basis, the lower half by its product with a
/// minimal kernel basis of the upper half. Throws SingularMatrixError on
/// singular input (detected through rank failures in the subroutines).
std::vector<Poly> hermite_diagonal(const PolyMat& a);

/// Hermite form of a nonsingular matrix whose diagonal degrees delta are
/// known: row partial linearization, one uniform-shift column reduction,
/// normalization by the inverse shifted leading matrix, compression.
/// A mismatched delta surfaces as StructuralError.
PolyMat hermite_known_degree(const PolyMat& a, const std::vector<int>& delta);

/// The unique column Hermite form: lower triangular, monic diagonal,
/// deg h_ij < deg h_ii for j < i, right-unimodularly equivalent to the
/// input. Pipeline: degree smoothing, diagonal-degree computation, then
/// the known-degree algorithm, extracting the trailing principal block.
PolyMat hermite(const PolyMat& a);

/// Definition check: lower triangular, monic diagonal, strict row-degree
/// dominance by the diagonal.
bool is_hermite(const PolyMat& h);

}  // namespace pmx
