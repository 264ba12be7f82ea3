#include "pmx/bases.hpp"

#include <algorithm>

#include "pmx/errors.hpp"
#include "pmx/reduce.hpp"

namespace pmx {

PolyMat approximant_basis(const PolyMat& f, int order, const Shift& s) {
  const size_t m = f.rows(), n = f.cols();
  if (s.size() != n) throw ShapeError("shift length != column count");
  if (order < 1) throw ShapeError("approximation order must be >= 1");
  const Fp fld = f.field();

  PolyMat basis = PolyMat::identity(fld, n);
  PolyMat res(fld, m, n);  // residual f * basis mod x^order
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) res.at(i, j) = f.at(i, j).low(order);

  // u tracks the s-column degrees of the basis; pivoting on the minimal
  // entry keeps the basis s-column reduced throughout.
  std::vector<int> u(s);

  for (int ord = 0; ord < order; ++ord) {
    for (size_t row = 0; row < m; ++row) {
      size_t piv = n;
      for (size_t j = 0; j < n; ++j) {
        if (res.at(row, j).coeff(ord) == 0) continue;
        if (piv == n || u[j] < u[piv]) piv = j;
      }
      if (piv == n) continue;
      uint32_t ipc = fld.inv(res.at(row, piv).coeff(ord));
      for (size_t j = 0; j < n; ++j) {
        if (j == piv) continue;
        uint32_t cj = res.at(row, j).coeff(ord);
        if (cj == 0) continue;
        uint32_t c = fld.neg(fld.mul(cj, ipc));
        for (size_t i = 0; i < n; ++i)
          basis.at(i, j).add_scaled_shifted(basis.at(i, piv), c, 0);
        for (size_t i = 0; i < m; ++i)
          res.at(i, j).add_scaled_shifted(res.at(i, piv), c, 0);
      }
      for (size_t i = 0; i < n; ++i)
        basis.at(i, piv) = basis.at(i, piv).shifted(1);
      for (size_t i = 0; i < m; ++i)
        res.at(i, piv) = res.at(i, piv).shifted(1).low(order);
      ++u[piv];
    }
  }
  return basis;
}

namespace {

bool product_is_zero(const PolyMat& f, const PolyMat& p, size_t col) {
  const Fp fld = f.field();
  for (size_t i = 0; i < f.rows(); ++i) {
    Poly acc(fld);
    for (size_t k = 0; k < f.cols(); ++k) acc = acc + f.at(i, k) * p.at(k, col);
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

PolyMat kernel_basis(const PolyMat& f, const Shift& s) {
  const size_t m = f.rows(), n = f.cols();
  if (m > n) throw ShapeError("kernel basis requires m <= n");
  if (s.size() != n) throw ShapeError("shift length != column count");
  std::vector<int> cd = f.cdeg();
  for (size_t j = 0; j < n; ++j)
    if (cd[j] != kNegInfDeg && cd[j] > s[j])
      throw ShapeError("shift must dominate the column degrees");
  const Fp fld = f.field();
  const size_t want = n - m;

  int xi = std::max(sum_shift(s), 0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    int order = (xi + 1) << attempt;
    PolyMat basis = approximant_basis(f, order, s);
    std::vector<int> deg = basis.cdeg_shifted(s);
    std::vector<size_t> keep;
    for (size_t j = 0; j < n; ++j)
      if (deg[j] <= order - 1 && product_is_zero(f, basis, j))
        keep.push_back(j);
    if (keep.size() == want) {
      PolyMat ker = basis.columns(keep);
      if (want > 0 && cm_rank(ker.leading_matrix(s)) != want)
        throw StructuralError("kernel basis lost shifted reducedness");
      return ker;
    }
    if (keep.size() > want) break;  // more kernel than a full-rank input allows
  }
  throw SingularMatrixError("kernel basis: input is not of full row rank");
}

namespace {

// Lower-triangular column basis by Euclidean column elimination; the
// leading m columns of the result. Throws on rank deficiency.
PolyMat euclid_triangular(const PolyMat& au) {
  const size_t m = au.rows(), n = au.cols();
  if (m > n) throw ShapeError("column basis requires m <= n");
  PolyMat w = au;
  for (size_t i = 0; i < m; ++i) {
    for (;;) {
      size_t piv = n;
      for (size_t j = i; j < n; ++j)
        if (!w.at(i, j).is_zero() &&
            (piv == n || w.at(i, j).deg() < w.at(i, piv).deg()))
          piv = j;
      if (piv == n)
        throw SingularMatrixError("column basis: input is not of full row rank");
      if (piv != i)
        for (size_t r = 0; r < m; ++r) std::swap(w.at(r, i), w.at(r, piv));
      bool clean = true;
      for (size_t j = i + 1; j < n; ++j) {
        if (w.at(i, j).is_zero()) continue;
        Poly q = divrem(w.at(i, j), w.at(i, i)).first;
        for (size_t r = 0; r < m; ++r) w.at(r, j) = w.at(r, j) - q * w.at(r, i);
        if (!w.at(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }
  PolyMat t(au.field(), m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t.at(i, j) = w.at(i, j);
  return t;
}

}  // namespace

PolyMat column_basis(const PolyMat& au) {
  PolyMat t = euclid_triangular(au);
  return column_reduce(t, Shift(t.rows(), 0));
}

ColumnBasisExt column_basis_ext(const PolyMat& au, const Shift& s) {
  PolyMat b1 = column_basis(au);
  PolyMat ur = kernel_basis(au, s);
  PolyMat vu = right_factor(b1, au);
  return {std::move(b1), std::move(ur), std::move(vu)};
}

PolyMat right_factor(const PolyMat& b, const PolyMat& a) {
  if (b.rows() != b.cols()) throw ShapeError("square matrix required");
  if (b.field() != a.field() || a.rows() != b.rows())
    throw ShapeError("right factor dimension mismatch");
  const Fp fld = b.field();
  const size_t m = b.rows(), n = a.cols();
  if (m == 0) return PolyMat(fld, 0, n);

  // Fraction-free forward elimination of [B | A]; after stage k every
  // remaining entry is a (k+2)-minor of the original, so divisions by the
  // previous pivot are exact and degrees stay bounded by deg det plus the
  // column degree of A.
  std::vector<std::vector<Poly>> w(m, std::vector<Poly>(m + n, Poly(fld)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) w[i][j] = b.at(i, j);
    for (size_t j = 0; j < n; ++j) w[i][m + j] = a.at(i, j);
  }
  bool negated = false;
  Poly prev = Poly::constant(fld, 1);
  for (size_t k = 0; k + 1 < m; ++k) {
    if (w[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < m && w[piv][k].is_zero()) ++piv;
      if (piv == m) throw SingularMatrixError("right factor: singular B");
      std::swap(w[k], w[piv]);
      negated = !negated;
    }
    for (size_t i = k + 1; i < m; ++i) {
      for (size_t j = k + 1; j < m + n; ++j)
        w[i][j] = divexact(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev);
      w[i][k] = Poly(fld);
    }
    prev = w[k][k];
  }
  if (w[m - 1][m - 1].is_zero())
    throw SingularMatrixError("right factor: singular B");
  Poly det = negated ? -w[m - 1][m - 1] : w[m - 1][m - 1];

  // Back substitution for y = det * V (always polynomial, being the
  // adjugate applied to A), then the exact division by det which is what
  // enforces membership in the column module of B.
  PolyMat v(fld, m, n);
  for (size_t t = 0; t < n; ++t) {
    std::vector<Poly> y(m, Poly(fld));
    for (size_t i = m; i-- > 0;) {
      Poly acc = det * w[i][m + t];
      for (size_t j = i + 1; j < m; ++j) acc = acc - w[i][j] * y[j];
      y[i] = divexact(acc, w[i][i]);
    }
    for (size_t i = 0; i < m; ++i) {
      auto [q, r] = divrem(y[i], det);
      if (!r.is_zero())
        throw StructuralError("right factor: column not in the module of B");
      v.at(i, t) = q;
    }
  }
  return v;
}

}  // namespace pmx
