#include "pmx/hermite.hpp"

#include "pmx/bases.hpp"
#include "pmx/errors.hpp"
#include "pmx/linearize.hpp"
#include "pmx/reduce.hpp"

namespace pmx {

namespace {

// Column degrees of a nonsingular matrix; a zero column means singular.
Shift nonsingular_cdeg(const PolyMat& a) {
  std::vector<int> cd = a.cdeg();
  for (int d : cd)
    if (d == kNegInfDeg)
      throw SingularMatrixError("matrix has a zero column");
  return Shift(cd.begin(), cd.end());
}

}  // namespace

std::vector<Poly> hermite_diagonal(const PolyMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const size_t n = a.rows();
  if (n == 0) return {};
  if (n == 1) {
    if (a.at(0, 0).is_zero())
      throw SingularMatrixError("singular input");
    return {monic(a.at(0, 0)).first};
  }
  const size_t top = (n + 1) / 2;
  PolyMat au = a.top_rows(top);
  PolyMat ad = a.bottom_rows(n - top);
  PolyMat b1 = column_basis(au);
  PolyMat nker = kernel_basis(au, nonsingular_cdeg(a));
  PolyMat b2 = ad * nker;
  std::vector<Poly> d = hermite_diagonal(b1);
  std::vector<Poly> d2 = hermite_diagonal(b2);
  d.insert(d.end(), d2.begin(), d2.end());
  return d;
}

PolyMat hermite_known_degree(const PolyMat& a, const std::vector<int>& delta) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  auto [abar, info] = parlin_rows(a, delta);
  const size_t nt = abar.rows();
  const Fp f = a.field();

  // Scale row i by x^(delta_bar - s_d[i]); a plain column reduction of the
  // scaled matrix is exactly a (-s_d)-shifted reduction of abar.
  PolyMat scaled(f, nt, nt);
  for (size_t i = 0; i < nt; ++i) {
    int e = info.delta_bar - info.s_d[i];
    for (size_t j = 0; j < nt; ++j)
      scaled.at(i, j) = abar.at(i, j).shifted(e);
  }
  PolyMat reduced = column_reduce(scaled, Shift(nt, 0));

  PolyMat rhat(f, nt, nt);
  for (size_t i = 0; i < nt; ++i) {
    int e = info.delta_bar - info.s_d[i];
    for (size_t j = 0; j < nt; ++j) {
      if (!reduced.at(i, j).low(e).is_zero())
        throw StructuralError("known-degree reduction lost row divisibility");
      rhat.at(i, j) = reduced.at(i, j).high(e);
    }
  }

  Shift neg_sd(info.s_d.size());
  for (size_t i = 0; i < neg_sd.size(); ++i) neg_sd[i] = -info.s_d[i];
  PolyMat normalized = [&] {
    try {
      return popov_normalize(rhat, neg_sd);
    } catch (const SingularMatrixError&) {
      throw StructuralError(
          "diagonal degree tuple does not match the Hermite form");
    } catch (const StructuralError&) {
      throw StructuralError(
          "diagonal degree tuple does not match the Hermite form");
    }
  }();
  return compress(normalized, info);
}

PolyMat hermite(const PolyMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const size_t n = a.rows();
  if (n == 0) return a;
  auto [b, sinfo] = smooth_for_hermite(a);
  std::vector<Poly> diag = hermite_diagonal(b);
  std::vector<int> delta(diag.size());
  for (size_t i = 0; i < diag.size(); ++i) delta[i] = diag[i].deg();
  PolyMat hb = hermite_known_degree(b, delta);
  const size_t m = sinfo.expanded_dim;
  PolyMat h(a.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h.at(i, j) = hb.at(m - n + i, m - n + j);
  return h;
}

bool is_hermite(const PolyMat& h) {
  if (h.rows() != h.cols()) return false;
  const size_t n = h.rows();
  for (size_t i = 0; i < n; ++i) {
    const Poly& d = h.at(i, i);
    if (d.is_zero() || d.lc() != 1) return false;
    for (size_t j = i + 1; j < n; ++j)
      if (!h.at(i, j).is_zero()) return false;
    for (size_t j = 0; j < i; ++j)
      if (h.at(i, j).deg() >= d.deg()) return false;
  }
  return true;
}

}  // namespace pmx
