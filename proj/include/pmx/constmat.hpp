#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmx/field.hpp"

namespace pmx {

/// Dense matrix of field elements. Dimensions may be zero (empty blocks
/// arise naturally as kernel factors of square matrices).
class ConstMat {
 public:
  ConstMat(Fp f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ConstMat identity(Fp f, size_t n);

  const Fp& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  ConstMat operator*(const ConstMat& o) const;
  bool operator==(const ConstMat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const ConstMat& o) const { return !(*this == o); }

  /// [this | right] side by side.
  ConstMat hcat(const ConstMat& right) const;

 private:
  Fp f_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

/// Determinant by Gaussian elimination, first-nonzero pivoting.
uint32_t cm_det(const ConstMat& m);

size_t cm_rank(const ConstMat& m);

/// Inverse; throws SingularMatrixError on singular input.
ConstMat cm_inv(const ConstMat& m);

/// Given Ur (n x k, full column rank) and Vu (m x n) with m + k = n,
/// returns Ul (n x m) such that [Ul | Ur] is nonsingular. Deterministic:
/// Ul consists of the pivot columns of the transform carrying Vu to
/// reduced column echelon form; when Vu*Ur = 0 and Vu has full row rank
/// this completion is guaranteed to work, otherwise a unit-column
/// completion of Ur is used as a fallback. Throws StructuralError when
/// rank(Ur) < k.
ConstMat cm_completion(const ConstMat& ur, const ConstMat& vu);

}  // namespace pmx
