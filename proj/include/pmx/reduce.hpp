#pragma once

#include "pmx/polymat.hpp"

namespace pmx {

/// Shifted column reduction of a nonsingular matrix: the result is
/// s-column reduced (its s-leading matrix is nonsingular) and
/// right-unimodularly equivalent to the input; the determinant is
/// preserved exactly (all operations add a multiple of one column to
/// another). Throws SingularMatrixError when a zero column emerges.
///
/// Shift-aware Mulders-Storjohann iteration: the pivot of a column is the
/// bottommost row attaining its shifted degree; while two columns share a
/// pivot row, the one with the larger pivot degree (ties: larger column
/// index) is reduced by the other.
PolyMat column_reduce(const PolyMat& a, const Shift& s);

/// R * lm_s(R)^{-1} for an s-column reduced R of uniform s-column degree
/// (d,...,d). The result has identity s-leading matrix and depends only
/// on the right-unimodular class of R. Throws StructuralError when the
/// degrees are not uniform, SingularMatrixError when lm_s(R) is singular.
PolyMat popov_normalize(const PolyMat& r, const Shift& s);

/// R * C for constant C, column-combination form (used by normalization).
PolyMat mul_constant_right(const PolyMat& r, const ConstMat& c);

}  // namespace pmx
