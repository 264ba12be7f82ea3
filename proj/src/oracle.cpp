#include "pmx/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pmx/errors.hpp"

namespace pmx {

namespace {

void size_guard(const PolyMat& a, size_t limit, const char* what) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  if (a.rows() > limit || a.rows() == 0)
    throw SizeGuardError(std::string(what) + ": size guard exceeded");
}

// det of the minor given by rows row.. and the columns set in mask.
Poly det_minor(const PolyMat& a, size_t row, uint32_t mask,
               std::map<uint32_t, Poly>& memo) {
  const Fp f = a.field();
  if (mask == 0) return Poly::constant(f, 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Poly acc(f);
  bool negate = false;
  for (size_t j = 0; j < a.cols(); ++j) {
    if (!(mask & (1u << j))) continue;
    if (!a.at(row, j).is_zero()) {
      Poly sub = det_minor(a, row + 1, mask & ~(1u << j), memo);
      Poly term = a.at(row, j) * sub;
      acc = negate ? acc - term : acc + term;
    }
    negate = !negate;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Poly det_oracle(const PolyMat& a) {
  size_guard(a, 8, "det_oracle");
  std::map<uint32_t, Poly> memo;
  return det_minor(a, 0, (1u << a.cols()) - 1, memo);
}

PolyMat hermite_oracle(const PolyMat& a) {
  size_guard(a, 6, "hermite_oracle");
  const Fp f = a.field();
  const size_t n = a.rows();
  PolyMat h = a;

  // Triangularize by Euclidean column operations: for each row, shrink
  // the entries right of the diagonal against a minimal-degree pivot.
  for (size_t i = 0; i < n; ++i) {
    for (;;) {
      size_t piv = n;
      for (size_t j = i; j < n; ++j)
        if (!h.at(i, j).is_zero() &&
            (piv == n || h.at(i, j).deg() < h.at(i, piv).deg()))
          piv = j;
      if (piv == n) throw SingularMatrixError("hermite_oracle: singular");
      if (piv != i)
        for (size_t r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, piv));
      bool clean = true;
      for (size_t j = i + 1; j < n; ++j) {
        if (h.at(i, j).is_zero()) continue;
        Poly q = divrem(h.at(i, j), h.at(i, i)).first;
        for (size_t r = 0; r < n; ++r)
          h.at(r, j) = h.at(r, j) - q * h.at(r, i);
        if (!h.at(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }

  // Normalize: monic diagonal, then reduce each row's off-diagonal
  // entries modulo the diagonal entry.
  for (size_t i = 0; i < n; ++i) {
    uint32_t il = f.inv(h.at(i, i).lc());
    for (size_t r = 0; r < n; ++r) h.at(r, i) = h.at(r, i).scaled(il);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      if (h.at(i, j).deg() < h.at(i, i).deg()) continue;
      Poly q = divrem(h.at(i, j), h.at(i, i)).first;
      for (size_t r = 0; r < n; ++r)
        h.at(r, j) = h.at(r, j) - q * h.at(r, i);
    }
  return h;
}

int degdet_oracle(const PolyMat& a) {
  size_guard(a, 8, "degdet_oracle");
  const size_t n = a.rows();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int s = 0;
    for (size_t i = 0; i < n; ++i) s += a.at(i, perm[i]).deg_bar();
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool unimodular_check(const PolyMat& w) {
  Poly d = det_oracle(w);
  return !d.is_zero() && d.deg() == 0;
}

bool equiv_check(const PolyMat& a, const PolyMat& b) {
  if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  return hermite_oracle(a) == hermite_oracle(b);
}

}  // namespace pmx
