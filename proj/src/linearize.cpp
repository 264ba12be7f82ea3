#include "pmx/linearize.hpp"

#include <algorithm>
#include <numeric>

#include "pmx/errors.hpp"

namespace pmx {

std::pair<PolyMat, LinearizationInfo> parlin_rows(
    const PolyMat& a, const std::vector<int>& delta) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const size_t n = a.rows();
  if (delta.size() != n) throw ShapeError("degree tuple length mismatch");
  for (int d : delta)
    if (d < 0) throw ShapeError("degree tuple must be nonnegative");
  const Fp f = a.field();

  long total = std::accumulate(delta.begin(), delta.end(), 0l);
  const int db = n == 0 ? 1 : 1 + (int)(total / (long)n);
  std::vector<int> alpha(n), beta(n);
  for (size_t i = 0; i < n; ++i) {
    if (delta[i] > 0) {
      alpha[i] = (delta[i] + db - 1) / db;
      beta[i] = delta[i] - (alpha[i] - 1) * db;
    } else {
      alpha[i] = 1;
      beta[i] = 0;
    }
  }
  size_t nt = 0;
  for (int al : alpha) nt += (size_t)al;

  Shift s_d;
  s_d.reserve(nt);
  for (size_t i = 0; i < n; ++i) {
    for (int k = 0; k + 1 < alpha[i]; ++k) s_d.push_back(db);
    s_d.push_back(beta[i]);
  }

  PolyMat expansion(f, n, nt);
  std::vector<size_t> colmap(n);
  {
    size_t pos = 0;
    for (size_t i = 0; i < n; ++i) {
      for (int k = 0; k < alpha[i]; ++k)
        expansion.at(i, pos + k) = Poly::monomial(f, 1, k * db);
      pos += alpha[i];
      colmap[i] = pos - 1;
    }
  }

  PolyMat out(f, nt, nt);
  size_t pos = 0;
  for (size_t i = 0; i < n; ++i) {
    // x^db-adic slices of row i, the last slice untruncated.
    for (int k = 0; k < alpha[i]; ++k) {
      for (size_t j = 0; j < n; ++j) {
        Poly slice = a.at(i, j).high(k * db);
        if (k + 1 < alpha[i]) slice = slice.low(db);
        out.at(pos + k, colmap[j]) = std::move(slice);
      }
    }
    // Elementary columns chaining consecutive slices.
    for (int k = 1; k < alpha[i]; ++k) {
      size_t col = pos + k - 1;
      out.at(pos + k - 1, col) = Poly::monomial(f, 1, db);
      out.at(pos + k, col) = Poly::constant(f, f.neg(1));
    }
    pos += alpha[i];
  }
  LinearizationInfo info{db,       std::move(alpha),     std::move(beta),
                         std::move(s_d), std::move(expansion), std::move(colmap)};
  return {std::move(out), std::move(info)};
}

PolyMat compress(const PolyMat& m, const LinearizationInfo& info) {
  return (info.expansion * m).columns(info.colmap);
}

DominantPerm dominant_permutation(const PolyMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const size_t n = a.rows();
  DominantPerm dp;
  std::vector<bool> row_used(n, false), col_used(n, false);
  for (size_t step = 0; step < n; ++step) {
    // Degree mass of each remaining row and column; ties between maximal
    // entries go to the one sitting on the heaviest row/column cross, so
    // that a single pick retires as much degree as possible.
    std::vector<long> row_mass(n, 0), col_mass(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (row_used[i]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (col_used[j]) continue;
        int d = a.at(i, j).deg_bar();
        row_mass[i] += d;
        col_mass[j] += d;
      }
    }
    int best = -1;
    long best_mass = -1;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < n; ++i) {
      if (row_used[i]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (col_used[j]) continue;
        int d = a.at(i, j).deg_bar();
        long mass = row_mass[i] + col_mass[j];
        if (d > best || (d == best && mass > best_mass)) {
          best = d;
          best_mass = mass;
          bi = i;
          bj = j;
        }
      }
    }
    dp.row_order.push_back(bi);
    dp.col_order.push_back(bj);
    dp.diag_degrees.push_back(best);
    row_used[bi] = true;
    col_used[bj] = true;
  }
  return dp;
}

namespace {

int ceil_avg(long total, size_t count) {
  if (count == 0 || total <= 0) return 0;
  return (int)((total + (long)count - 1) / (long)count);
}

// Column slicing: column j is cut into x^w-adic slices when its assigned
// degree exceeds w; continuation slices are appended on the right and an
// elementary row (-x^w at the previous slice, 1 at the new one) links
// each pair.
PolyMat expand_columns(const PolyMat& a, const std::vector<int>& assign,
                       int w) {
  const Fp f = a.field();
  const size_t n = a.cols(), rows = a.rows();
  std::vector<int> parts(n, 1);
  size_t extra = 0;
  for (size_t j = 0; j < n; ++j) {
    if (w > 0 && assign[j] > 0) parts[j] = std::max(1, (assign[j] + w - 1) / w);
    extra += (size_t)(parts[j] - 1);
  }
  if (extra == 0) return a;

  PolyMat out(f, rows + extra, n + extra);
  size_t next = n;
  for (size_t j = 0; j < n; ++j) {
    size_t prev_pos = j;
    for (int k = 0; k < parts[j]; ++k) {
      size_t pos = (k == 0) ? j : next++;
      for (size_t i = 0; i < rows; ++i) {
        Poly slice = a.at(i, j).high(k * w);
        if (k + 1 < parts[j]) slice = slice.low(w);
        out.at(i, pos) = std::move(slice);
      }
      if (k > 0) {
        size_t link_row = rows + (pos - n);
        out.at(link_row, prev_pos) = Poly::monomial(f, f.neg(1), w);
        out.at(link_row, pos) = Poly::constant(f, 1);
      }
      prev_pos = pos;
    }
  }
  return out;
}

// Row slicing, the transposed-flavor counterpart of expand_columns.
PolyMat expand_rows(const PolyMat& a, const std::vector<int>& assign, int w) {
  const Fp f = a.field();
  const size_t m = a.rows(), cols = a.cols();
  std::vector<int> parts(m, 1);
  size_t extra = 0;
  for (size_t i = 0; i < m; ++i) {
    if (w > 0 && assign[i] > 0) parts[i] = std::max(1, (assign[i] + w - 1) / w);
    extra += (size_t)(parts[i] - 1);
  }
  if (extra == 0) return a;

  PolyMat out(f, m + extra, cols + extra);
  size_t next = m;
  for (size_t i = 0; i < m; ++i) {
    size_t prev_pos = i;
    for (int k = 0; k < parts[i]; ++k) {
      size_t pos = (k == 0) ? i : next++;
      for (size_t j = 0; j < cols; ++j) {
        Poly slice = a.at(i, j).high(k * w);
        if (k + 1 < parts[i]) slice = slice.low(w);
        out.at(pos, j) = std::move(slice);
      }
      if (k > 0) {
        size_t link_col = cols + (pos - m);
        out.at(prev_pos, link_col) = Poly::monomial(f, f.neg(1), w);
        out.at(pos, link_col) = Poly::constant(f, 1);
      }
      prev_pos = pos;
    }
  }
  return out;
}

}  // namespace

std::pair<PolyMat, SmoothInfo> smooth(const PolyMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("square matrix required");
  const size_t n = a.rows();
  SmoothInfo info;
  info.original_dim = n;
  info.perm = dominant_permutation(a);

  info.column_degrees.assign(n, 0);
  long sum = 0;
  for (size_t k = 0; k < n; ++k) {
    info.column_degrees[info.perm.col_order[k]] = info.perm.diag_degrees[k];
    sum += info.perm.diag_degrees[k];
  }
  info.column_slice = ceil_avg(sum, n);
  PolyMat ahat = expand_columns(a, info.column_degrees, info.column_slice);

  info.row_degrees.assign(ahat.rows(), 0);
  long rsum = 0;
  std::vector<int> rd = ahat.rdeg();
  for (size_t i = 0; i < ahat.rows(); ++i) {
    info.row_degrees[i] = rd[i] == kNegInfDeg ? 0 : rd[i];
    rsum += info.row_degrees[i];
  }
  info.row_slice = ceil_avg(rsum, ahat.rows());
  PolyMat c = expand_rows(ahat, info.row_degrees, info.row_slice);

  info.expanded_dim = c.rows();
  return {std::move(c), std::move(info)};
}

std::pair<PolyMat, SmoothInfo> smooth_for_hermite(const PolyMat& a) {
  auto [c, info] = smooth(a);
  const size_t n = info.original_dim, m = info.expanded_dim;
  if (m == n) return {std::move(c), std::move(info)};
  // Cycle the appended block to the front; the Hermite form of the result
  // carries H(A) as its trailing principal block.
  std::vector<size_t> order;
  order.reserve(m);
  for (size_t i = n; i < m; ++i) order.push_back(i);
  for (size_t i = 0; i < n; ++i) order.push_back(i);
  PolyMat b = c.rows_permuted(order).cols_permuted(order);
  return {std::move(b), std::move(info)};
}

}  // namespace pmx
