#pragma once

#include <random>
#include <vector>

#include "pmx/oracle.hpp"
#include "pmx/polymat.hpp"

// Shared helpers for the test and acceptance binaries: fixture-free
// generators and the independent brute-force references that live only on
// the test side.
namespace support {

using pmx::ConstMat;
using pmx::Fp;
using pmx::Poly;
using pmx::PolyMat;
using pmx::Shift;

using Rng = std::mt19937;

inline Poly P(Fp f, std::initializer_list<int64_t> coeffs) {
  std::vector<uint32_t> c;
  for (int64_t v : coeffs) c.push_back(f.reduce(v));
  return Poly(f, std::move(c));
}

inline Poly random_poly(Rng& rng, Fp f, int maxdeg, bool nonzero = false) {
  std::uniform_int_distribution<int> degree(0, maxdeg);
  std::uniform_int_distribution<uint32_t> coeff(0, f.modulus() - 1);
  for (;;) {
    std::vector<uint32_t> c(degree(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    Poly p(f, std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline PolyMat random_pmat(Rng& rng, Fp f, size_t m, size_t n, int maxdeg) {
  PolyMat a(f, m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = random_poly(rng, f, maxdeg);
  return a;
}

// One heavy row and one heavy column, everything else constant.
inline PolyMat random_skewed(Rng& rng, Fp f, size_t n, int heavy_deg) {
  std::uniform_int_distribution<uint32_t> coeff(0, f.modulus() - 1);
  PolyMat a(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int d = (i == 0 || j == 0) ? heavy_deg : 0;
      a.at(i, j) = random_poly(rng, f, d);
    }
  return a;
}

inline PolyMat random_nonsingular(Rng& rng, Fp f, size_t n, int maxdeg,
                                  bool skewed = false) {
  for (;;) {
    PolyMat a = skewed ? random_skewed(rng, f, n, maxdeg)
                       : random_pmat(rng, f, n, n, maxdeg);
    if (!pmx::det_oracle(a).is_zero()) return a;
  }
}

struct Unimodular {
  PolyMat w;
  uint32_t det;  // constant determinant, tracked through the construction
};

// Product of elementary column operations: additions of polynomial
// multiples (det 1), nonzero column scalings, and swaps.
inline Unimodular random_unimodular(Rng& rng, Fp f, size_t n, int ops,
                                    int opdeg) {
  PolyMat w = PolyMat::identity(f, n);
  uint32_t det = 1;
  std::uniform_int_distribution<size_t> col(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<uint32_t> unit(1, f.modulus() - 1);
  for (int t = 0; t < ops; ++t) {
    size_t j = col(rng), k = col(rng);
    switch (kind(rng)) {
      case 0: {
        if (j == k) break;
        Poly q = random_poly(rng, f, opdeg);
        for (size_t i = 0; i < n; ++i)
          w.at(i, j) = w.at(i, j) + q * w.at(i, k);
        break;
      }
      case 1: {
        uint32_t c = unit(rng);
        for (size_t i = 0; i < n; ++i) w.at(i, j) = w.at(i, j).scaled(c);
        det = f.mul(det, c);
        break;
      }
      default: {
        if (j == k) break;
        for (size_t i = 0; i < n; ++i) std::swap(w.at(i, j), w.at(i, k));
        det = f.neg(det);
        break;
      }
    }
  }
  return {std::move(w), det};
}

// Exhaustive-search inverse, the reference for Fp::inv at small p.
inline uint32_t inverse_by_search(Fp f, uint32_t a) {
  for (uint32_t x = 0; x < f.modulus(); ++x)
    if (f.mul(a, x) == 1) return x;
  return 0;
}

// Leibniz expansion determinant for constant matrices.
inline uint32_t leibniz_det(const ConstMat& m) {
  const Fp f = m.field();
  const size_t n = m.rows();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  uint32_t acc = 0;
  // Iterate permutations with parity tracked via sorting network count.
  std::vector<size_t> p = perm;
  do {
    uint32_t term = 1;
    for (size_t i = 0; i < n; ++i) term = f.mul(term, m.at(i, p[i]));
    size_t inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    acc = (inv % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

// Generator of the rational right nullspace for corank-1 inputs, by
// fraction-free elimination over K[x]; cleared to a primitive polynomial
// vector. Used to cross-check minimal kernel bases up to scalar.
inline std::vector<Poly> nullspace_corank1(const PolyMat& a) {
  const Fp f = a.field();
  const size_t m = a.rows(), n = a.cols();
  // Cramer-style: kernel vector entries are (-1)^j * minors of the m x n
  // matrix with column j deleted (requires n = m + 1).
  std::vector<Poly> v;
  for (size_t j = 0; j < n; ++j) {
    PolyMat minor(f, m, n - 1);
    for (size_t c = 0, t = 0; c < n; ++c) {
      if (c == j) continue;
      for (size_t i = 0; i < m; ++i) minor.at(i, t) = a.at(i, c);
      ++t;
    }
    Poly d = pmx::det_oracle(minor);
    v.push_back(j % 2 == 0 ? d : -d);
  }
  // Make primitive: divide by the gcd of the entries.
  Poly g(f);
  for (const Poly& p : v) g = pmx::gcd(g, p);
  if (!g.is_zero())
    for (Poly& p : v) p = pmx::divexact(p, g);
  return v;
}

// Rank over K(x) by cross-multiplication elimination; test sizes only.
inline size_t polymat_rank(const PolyMat& a) {
  const Fp f = a.field();
  const size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Poly>> w(m, std::vector<Poly>(n, Poly(f)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t piv = m;
    for (size_t i = rank; i < m; ++i)
      if (!w[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(w[rank], w[piv]);
    for (size_t i = rank + 1; i < m; ++i) {
      if (w[i][col].is_zero()) continue;
      for (size_t j = col + 1; j < n; ++j)
        w[i][j] = w[rank][col] * w[i][j] - w[i][col] * w[rank][j];
      w[i][col] = Poly(f);
    }
    ++rank;
  }
  return rank;
}

// True up to multiplication by one nonzero field constant.
inline bool equal_up_to_scalar(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const Fp f = a.field();
  uint32_t c = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Poly &x = a.at(i, j), &y = b.at(i, j);
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      if (x.deg() != y.deg()) return false;
      uint32_t r = f.mul(y.lc(), f.inv(x.lc()));
      if (c == 0)
        c = r;
      else if (c != r)
        return false;
      if (x.scaled(c) != y) return false;
    }
  return true;
}

inline PolyMat zero_mat(Fp f, size_t m, size_t n) { return PolyMat(f, m, n); }

}  // namespace support
