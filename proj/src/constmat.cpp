#include "pmx/constmat.hpp"

#include <utility>

#include "pmx/errors.hpp"

namespace pmx {

ConstMat ConstMat::identity(Fp f, size_t n) {
  ConstMat r(f, n, n);
  for (size_t i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

ConstMat ConstMat::operator*(const ConstMat& o) const {
  if (f_ != o.f_) throw ShapeError("modulus mismatch");
  if (cols_ != o.rows_) throw ShapeError("inner dimension mismatch");
  ConstMat r(f_, rows_, o.cols_);
  const uint64_t p = f_.modulus();
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        uint64_t s = r.at(i, j) + v * o.at(k, j) % p;
        r.at(i, j) = (uint32_t)(s >= p ? s - p : s);
      }
    }
  return r;
}

ConstMat ConstMat::hcat(const ConstMat& right) const {
  if (f_ != right.f_ || rows_ != right.rows_)
    throw ShapeError("hcat mismatch");
  ConstMat r(f_, rows_, cols_ + right.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < right.cols_; ++j)
      r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

namespace {

// Row echelon elimination in place; returns (rank, det of the leading
// square part if square else 0). Pivot rule: for each column, the first
// row (lowest index) with a nonzero entry.
std::pair<size_t, uint32_t> row_eliminate(ConstMat& w) {
  const Fp f = w.field();
  size_t rank = 0;
  uint32_t det = 1;
  bool swapped_sign = false;
  for (size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
    size_t piv = rank;
    while (piv < w.rows() && w.at(piv, col) == 0) ++piv;
    if (piv == w.rows()) continue;
    if (piv != rank) {
      for (size_t j = 0; j < w.cols(); ++j)
        std::swap(w.at(piv, j), w.at(rank, j));
      swapped_sign = !swapped_sign;
    }
    det = f.mul(det, w.at(rank, col));
    uint32_t ip = f.inv(w.at(rank, col));
    for (size_t i = rank + 1; i < w.rows(); ++i) {
      uint32_t m = f.mul(w.at(i, col), ip);
      if (m == 0) continue;
      for (size_t j = col; j < w.cols(); ++j)
        w.at(i, j) = f.sub(w.at(i, j), f.mul(m, w.at(rank, j)));
    }
    ++rank;
  }
  if (swapped_sign) det = f.neg(det);
  return {rank, det};
}

}  // namespace

uint32_t cm_det(const ConstMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square");
  if (m.rows() == 0) return 1;
  ConstMat w = m;
  auto [rank, det] = row_eliminate(w);
  return rank == m.rows() ? det : 0;
}

size_t cm_rank(const ConstMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ConstMat w = m;
  return row_eliminate(w).first;
}

ConstMat cm_inv(const ConstMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square");
  const Fp f = m.field();
  const size_t n = m.rows();
  ConstMat w = m.hcat(ConstMat::identity(f, n));
  if (row_eliminate(w).first < n)
    throw SingularMatrixError("matrix not invertible");
  // Back substitution on the echelon form.
  for (size_t i = n; i-- > 0;) {
    uint32_t ip = f.inv(w.at(i, i));
    for (size_t j = i; j < 2 * n; ++j) w.at(i, j) = f.mul(w.at(i, j), ip);
    for (size_t k = 0; k < i; ++k) {
      uint32_t c = w.at(k, i);
      if (c == 0) continue;
      for (size_t j = i; j < 2 * n; ++j)
        w.at(k, j) = f.sub(w.at(k, j), f.mul(c, w.at(i, j)));
    }
  }
  ConstMat r(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
  return r;
}

namespace {

// Reduced column echelon form of w by column operations; returns the
// n x n transform G (w_in * G = rcef) together with the pivot columns in
// row order. Deterministic: pivot is the lowest-index unused column with
// a nonzero entry in the current row.
std::pair<ConstMat, std::vector<size_t>> rcef_transform(ConstMat w) {
  const Fp f = w.field();
  const size_t m = w.rows(), n = w.cols();
  ConstMat g = ConstMat::identity(f, n);
  std::vector<bool> used(n, false);
  std::vector<size_t> pivots;
  auto col_op = [&](ConstMat& a, size_t dst, size_t src, uint32_t c,
                    bool scale) {
    for (size_t i = 0; i < a.rows(); ++i) {
      if (scale)
        a.at(i, dst) = f.mul(a.at(i, dst), c);
      else
        a.at(i, dst) = f.sub(a.at(i, dst), f.mul(c, a.at(i, src)));
    }
  };
  for (size_t r = 0; r < m; ++r) {
    size_t piv = n;
    for (size_t j = 0; j < n; ++j)
      if (!used[j] && w.at(r, j) != 0) {
        piv = j;
        break;
      }
    if (piv == n) continue;
    uint32_t ip = f.inv(w.at(r, piv));
    col_op(w, piv, piv, ip, true);
    col_op(g, piv, piv, ip, true);
    for (size_t j = 0; j < n; ++j) {
      if (j == piv) continue;
      uint32_t c = w.at(r, j);
      if (c == 0) continue;
      col_op(w, j, piv, c, false);
      col_op(g, j, piv, c, false);
    }
    used[piv] = true;
    pivots.push_back(piv);
  }
  return {std::move(g), std::move(pivots)};
}

}  // namespace

ConstMat cm_completion(const ConstMat& ur, const ConstMat& vu) {
  const Fp f = ur.field();
  if (f != vu.field()) throw ShapeError("modulus mismatch");
  const size_t n = ur.rows(), k = ur.cols(), m = vu.rows();
  if (vu.cols() != n || m + k != n)
    throw ShapeError("completion dimension mismatch");
  if (cm_rank(ur) < k)
    throw StructuralError("kernel constant matrix is rank deficient");

  auto take_cols = [&](const ConstMat& g, const std::vector<size_t>& idx) {
    ConstMat ul(f, n, m);
    for (size_t j = 0; j < idx.size() && j < m; ++j)
      for (size_t i = 0; i < n; ++i) ul.at(i, j) = g.at(i, idx[j]);
    return ul;
  };

  if (m == 0) return ConstMat(f, n, 0);

  auto [g, pivots] = rcef_transform(vu);
  if (pivots.size() == m) {
    ConstMat ul = take_cols(g, pivots);
    if (cm_det(ul.hcat(ur)) != 0) return ul;
  }
  // Inputs not of the V*U = I shape; complete from Ur alone, greedily
  // picking unit vectors that keep [Ul | Ur] full rank.
  ConstMat ul(f, n, m);
  size_t placed = 0;
  for (size_t i = 0; i < n && placed < m; ++i) {
    ConstMat trial = ul;
    trial.at(i, placed) = 1;
    ConstMat probe(f, n, placed + 1 + k);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c <= placed; ++c) probe.at(r, c) = trial.at(r, c);
      for (size_t c = 0; c < k; ++c) probe.at(r, placed + 1 + c) = ur.at(r, c);
    }
    if (cm_rank(probe) == placed + 1 + k) {
      ul = trial;
      ++placed;
    }
  }
  if (placed < m) throw StructuralError("completion failed");
  return ul;
}

}  // namespace pmx
