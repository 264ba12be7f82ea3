#include "pmx/polymat.hpp"

#include <algorithm>

#include "pmx/errors.hpp"

namespace pmx {

int sum_shift(const Shift& s) {
  int t = 0;
  for (int v : s) t += v;
  return t;
}

PolyMat PolyMat::identity(Fp f, size_t n) {
  PolyMat r(f, n, n);
  for (size_t i = 0; i < n; ++i) r.at(i, i) = Poly::constant(f, 1);
  return r;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
  if (f_ != o.f_) throw ShapeError("modulus mismatch");
  if (cols_ != o.rows_) throw ShapeError("inner dimension mismatch");
  PolyMat r(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    }
  return r;
}

bool PolyMat::operator==(const PolyMat& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

int PolyMat::degree() const {
  int d = kNegInfDeg;
  for (const Poly& p : e_) d = std::max(d, p.deg());
  return d;
}

std::vector<int> PolyMat::cdeg() const {
  std::vector<int> d(cols_, kNegInfDeg);
  for (size_t j = 0; j < cols_; ++j)
    for (size_t i = 0; i < rows_; ++i) d[j] = std::max(d[j], at(i, j).deg());
  return d;
}

std::vector<int> PolyMat::rdeg() const {
  std::vector<int> d(rows_, kNegInfDeg);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) d[i] = std::max(d[i], at(i, j).deg());
  return d;
}

std::vector<int> PolyMat::cdeg_shifted(const Shift& s) const {
  if (s.size() != rows_) throw ShapeError("shift length != row count");
  std::vector<int> d(cols_, kNegInfDeg);
  for (size_t j = 0; j < cols_; ++j)
    for (size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero())
        d[j] = std::max(d[j], at(i, j).deg() + s[i]);
  return d;
}

std::vector<int> PolyMat::rdeg_shifted(const Shift& s) const {
  if (s.size() != cols_) throw ShapeError("shift length != column count");
  std::vector<int> d(rows_, kNegInfDeg);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero())
        d[i] = std::max(d[i], at(i, j).deg() + s[j]);
  return d;
}

ConstMat PolyMat::leading_matrix(const Shift& s) const {
  std::vector<int> d = cdeg_shifted(s);
  ConstMat lm(f_, rows_, cols_);
  for (size_t j = 0; j < cols_; ++j) {
    if (d[j] == kNegInfDeg) continue;  // zero column stays zero
    for (size_t i = 0; i < rows_; ++i)
      lm.at(i, j) = at(i, j).coeff(d[j] - s[i]);
  }
  return lm;
}

ConstMat PolyMat::constant() const {
  ConstMat r(f_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).eval0();
  return r;
}

PolyMat PolyMat::top_rows(size_t k) const {
  if (k > rows_) throw ShapeError("top_rows out of range");
  PolyMat r(f_, k, cols_);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

PolyMat PolyMat::bottom_rows(size_t k) const {
  if (k > rows_) throw ShapeError("bottom_rows out of range");
  PolyMat r(f_, k, cols_);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - k + i, j);
  return r;
}

PolyMat PolyMat::columns(const std::vector<size_t>& idx) const {
  PolyMat r(f_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw ShapeError("column index out of range");
    for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  }
  return r;
}

PolyMat PolyMat::rows_permuted(const std::vector<size_t>& order) const {
  if (order.size() != rows_) throw ShapeError("row order length mismatch");
  PolyMat r(f_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(order[i], j);
  return r;
}

PolyMat PolyMat::cols_permuted(const std::vector<size_t>& order) const {
  if (order.size() != cols_) throw ShapeError("column order length mismatch");
  PolyMat r(f_, rows_, cols_);
  for (size_t j = 0; j < cols_; ++j)
    for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, order[j]);
  return r;
}

}  // namespace pmx
