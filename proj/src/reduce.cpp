#include "pmx/reduce.hpp"

#include <algorithm>

#include "pmx/errors.hpp"

namespace pmx {

namespace {

struct Pivot {
  size_t row;
  int deg;  // shifted pivot degree
};

// Bottommost row attaining the s-column degree of column j.
Pivot column_pivot(const PolyMat& a, const Shift& s, size_t j) {
  int best = kNegInfDeg;
  size_t row = a.rows();
  for (size_t i = 0; i < a.rows(); ++i) {
    const Poly& e = a.at(i, j);
    if (e.is_zero()) continue;
    int d = e.deg() + s[i];
    if (d >= best) {
      best = d;
      row = i;
    }
  }
  if (row == a.rows())
    throw SingularMatrixError("column reduction: zero column");
  return {row, best};
}

}  // namespace

PolyMat column_reduce(const PolyMat& a, const Shift& s) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  if (s.size() != a.rows()) throw ShapeError("shift length != dimension");
  const Fp f = a.field();
  const size_t n = a.rows();
  PolyMat r = a;
  if (n == 0) return r;

  std::vector<Pivot> piv(n);
  for (size_t j = 0; j < n; ++j) piv[j] = column_pivot(r, s, j);

  for (;;) {
    // Find a pivot-row conflict, scanning columns in order.
    size_t ja = n, jb = n;
    std::vector<size_t> claim(n, n);
    for (size_t j = 0; j < n && ja == n; ++j) {
      size_t& c = claim[piv[j].row];
      if (c == n)
        c = j;
      else {
        ja = c;
        jb = j;
      }
    }
    if (ja == n) break;

    // Reduce the column with the larger pivot degree by the other;
    // on equal degrees the higher column index is reduced.
    if (piv[ja].deg > piv[jb].deg) std::swap(ja, jb);
    const size_t row = piv[jb].row;
    int shift = piv[jb].deg - piv[ja].deg;
    uint32_t c = f.neg(
        f.mul(r.at(row, jb).coeff(piv[jb].deg - s[row]),
              f.inv(r.at(row, ja).coeff(piv[ja].deg - s[row]))));
    for (size_t i = 0; i < n; ++i)
      r.at(i, jb).add_scaled_shifted(r.at(i, ja), c, shift);
    piv[jb] = column_pivot(r, s, jb);
  }
  return r;
}

PolyMat mul_constant_right(const PolyMat& r, const ConstMat& c) {
  if (r.field() != c.field()) throw ShapeError("modulus mismatch");
  if (r.cols() != c.rows()) throw ShapeError("inner dimension mismatch");
  PolyMat out(r.field(), r.rows(), c.cols());
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t k = 0; k < r.cols(); ++k) {
      const Poly& e = r.at(i, k);
      if (e.is_zero()) continue;
      for (size_t j = 0; j < c.cols(); ++j)
        out.at(i, j).add_scaled_shifted(e, c.at(k, j), 0);
    }
  return out;
}

PolyMat popov_normalize(const PolyMat& r, const Shift& s) {
  if (s.size() != r.rows()) throw ShapeError("shift length != row count");
  std::vector<int> d = r.cdeg_shifted(s);
  for (size_t j = 1; j < d.size(); ++j)
    if (d[j] != d[0])
      throw StructuralError("normalization requires uniform shifted degree");
  ConstMat lm = r.leading_matrix(s);
  ConstMat inv = [&] {
    try {
      return cm_inv(lm);
    } catch (const SingularMatrixError&) {
      throw SingularMatrixError("shifted leading matrix is singular");
    }
  }();
  return mul_constant_right(r, inv);
}

}  // namespace pmx
