#pragma once

#include <cstddef>
#include <vector>

#include "pmx/constmat.hpp"
#include "pmx/poly.hpp"

namespace pmx {

/// Integer degree weights. Shifts acting on column degrees are indexed by
/// row, shifts acting on row degrees by column.
using Shift = std::vector<int>;

int sum_shift(const Shift& s);

/// Matrix over K[x], all entries sharing one prime modulus. Value type;
/// dimensions may be zero for internal block computations.
class PolyMat {
 public:
  PolyMat(Fp f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

  static PolyMat identity(Fp f, size_t n);

  const Fp& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Poly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Poly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  PolyMat operator*(const PolyMat& o) const;
  bool operator==(const PolyMat& o) const;
  bool operator!=(const PolyMat& o) const { return !(*this == o); }

  /// Max entry degree (kNegInfDeg for a zero/empty matrix).
  int degree() const;

  /// Column degrees; a zero column yields kNegInfDeg.
  std::vector<int> cdeg() const;
  std::vector<int> rdeg() const;
  /// Shifted column degrees, shift indexed by row.
  std::vector<int> cdeg_shifted(const Shift& s) const;
  /// Shifted row degrees, shift indexed by column.
  std::vector<int> rdeg_shifted(const Shift& s) const;

  /// Shifted leading column coefficient matrix: entry (i,j) is the
  /// coefficient of x^(d_j - s_i) in (i,j), with d_j the j-th shifted
  /// column degree. Zero columns give zero columns.
  ConstMat leading_matrix(const Shift& s) const;

  /// Entry-wise evaluation at x = 0.
  ConstMat constant() const;

  PolyMat top_rows(size_t k) const;
  PolyMat bottom_rows(size_t k) const;
  PolyMat columns(const std::vector<size_t>& idx) const;
  /// Row i of the result is row order[i] of this.
  PolyMat rows_permuted(const std::vector<size_t>& order) const;
  /// Column j of the result is column order[j] of this.
  PolyMat cols_permuted(const std::vector<size_t>& order) const;

 private:
  Fp f_;
  size_t rows_, cols_;
  std::vector<Poly> e_;
};

}  // namespace pmx
