#include "pmx/determinant.hpp"

#include "pmx/bases.hpp"
#include "pmx/errors.hpp"
#include "pmx/linearize.hpp"

namespace pmx {

uint32_t unimodular_det_constants(const ConstMat& ur0, const ConstMat& vu0) {
  const Fp f = ur0.field();
  if (f != vu0.field()) throw ShapeError("modulus mismatch");
  const size_t n = ur0.rows(), k = ur0.cols(), m = vu0.rows();
  if (vu0.cols() != n || m + k != n)
    throw ShapeError("constant factor dimension mismatch");
  ConstMat ul = cm_completion(ur0, vu0);
  uint32_t num = cm_det(vu0 * ul);
  uint32_t den = cm_det(ul.hcat(ur0));
  return f.mul(num, f.inv(den));
}

Poly determinant_rec(const PolyMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const Fp f = a.field();
  const size_t n = a.rows();
  if (n == 0) return Poly::constant(f, 1);
  if (n == 1) {
    if (a.at(0, 0).is_zero())
      throw SingularMatrixError("singular input");
    return a.at(0, 0);
  }

  std::vector<int> cd = a.cdeg();
  Shift s(n);
  for (size_t j = 0; j < n; ++j) {
    if (cd[j] == kNegInfDeg)
      throw SingularMatrixError("matrix has a zero column");
    s[j] = cd[j];
  }

  const size_t top = (n + 1) / 2;
  ColumnBasisExt cb = column_basis_ext(a.top_rows(top), s);
  PolyMat b2 = a.bottom_rows(n - top) * cb.ur;
  uint32_t dv = unimodular_det_constants(cb.ur.constant(), cb.vu.constant());
  Poly d = determinant_rec(cb.b1) * determinant_rec(b2);
  return d.scaled(dv);
}

Poly determinant(const PolyMat& a) {
  return determinant_rec(smooth(a).first);
}

std::optional<Poly> det_fastpath_diag(const PolyMat& a,
                                      const std::vector<Poly>& diag) {
  const Fp f = a.field();
  Poly g = Poly::constant(f, 1);
  for (const Poly& d : diag) g = g * d;
  if (g.eval0() == 0) return std::nullopt;
  uint32_t lambda = f.mul(cm_det(a.constant()), f.inv(g.eval0()));
  return g.scaled(lambda);
}

}  // namespace pmx
