#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pmx/polymat.hpp"

namespace pmx {

/// Data produced by the row partial linearization of a square matrix with
/// respect to a target degree tuple delta.
struct LinearizationInfo {
  int delta_bar;            // 1 + floor(sum(delta) / n)
  std::vector<int> alpha;   // split counts, ceil(delta_i / delta_bar)
  std::vector<int> beta;    // residual degrees
  Shift s_d;                // reduced row-degree tuple, length n~
  PolyMat expansion;        // row expansion-compression matrix E, n x n~
  std::vector<size_t> colmap;  // 0-based positions of the original columns
};

/// Row partial linearization: expands row i into alpha_i rows of degree
/// at most delta_bar (the final slice unbounded) and inserts elementary
/// columns (x^delta_bar, -1) linking consecutive slices, keeping each
/// row's slices adjacent. The input is recovered as the colmap columns
/// of E * result. Preserves nonsingularity and right-unimodular
/// equivalence. delta must be componentwise nonnegative.
std::pair<PolyMat, LinearizationInfo> parlin_rows(const PolyMat& a,
                                                  const std::vector<int>& delta);

/// The n x k submatrix of E * m at the colmap columns.
PolyMat compress(const PolyMat& m, const LinearizationInfo& info);

/// Row/column orders placing a maximal-degree entry of each remaining
/// trailing submatrix on the diagonal.
struct DominantPerm {
  std::vector<size_t> row_order;  // row i of the permuted matrix
  std::vector<size_t> col_order;
  std::vector<int> diag_degrees;  // nonincreasing; sum <= degDet
};

/// Greedy dominant-diagonal permutation: repeatedly select an entry of
/// maximal overbar degree in the remaining submatrix (ties: heaviest
/// row-plus-column degree mass, then lowest row, lowest column) and
/// recurse on the trailing block.
DominantPerm dominant_permutation(const PolyMat& a);

struct SmoothInfo {
  size_t original_dim;
  size_t expanded_dim;
  DominantPerm perm;
  std::vector<int> column_degrees;  // linearization degrees per column
  int column_slice;                 // x-adic slice width of the column step
  std::vector<int> row_degrees;     // row degrees after the column step
  int row_slice;
};

/// Degree-smoothing partial linearization: splits high-degree columns and
/// then high-degree rows into x-adic slices of bounded width, appending
/// the continuation slices and linking them with elementary (-x^w, 1)
/// rows/columns. For nonsingular A the result C satisfies
/// n <= m < 3n, det(C) = det(A), deg(C) <= ceil(degDet/n), and the
/// principal n x n block of C^{-1} is A^{-1}.
std::pair<PolyMat, SmoothInfo> smooth(const PolyMat& a);

/// smooth followed by the block-cycling permutation that moves the
/// original block to the trailing position, so that the Hermite form of
/// the result is [[I, 0], [*, H(A)]].
std::pair<PolyMat, SmoothInfo> smooth_for_hermite(const PolyMat& a);

}  // namespace pmx
