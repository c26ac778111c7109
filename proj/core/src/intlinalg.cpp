#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace adlv {
namespace {

Int iabs(Int a) { return a < 0 ? checked_sub(0, a) : a; }

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) = checked_add(m(dst, j), checked_mul(k, m(src, j)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) = checked_add(m(i, dst), checked_mul(k, m(i, src)));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = checked_sub(0, m(r, j));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // bring the smallest nonzero entry of the trailing block to (t, t)
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (best == 0 || iabs(d(i, j)) < best)) {
            best = iabs(d(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) goto done;
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
done:
  SmithForm s;
  s.rank = 0;
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (d(i, i) == 0) break;
    s.diagonal.push_back(d(i, i));
    ++s.rank;
  }
  s.U = std::move(u);
  s.D = std::move(d);
  s.V = std::move(v);
  return s;
}

IntMatrix hermite_rows(const IntMatrix& gens) {
  IntMatrix h = gens;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t pi = m;
      Int best = 0;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == 0 || iabs(h(i, c)) < best)) {
          best = iabs(h(i, c));
          pi = i;
        }
      if (best == 0) break;
      swap_rows(h, r, pi);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        add_row(h, i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) add_row(h, i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i) keep.push_back(i);
  return select_rows(h, keep);
}

std::vector<std::size_t> hermite_pivots(const IntMatrix& hnf) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < hnf.rows(); ++i)
    for (std::size_t j = 0; j < hnf.cols(); ++j)
      if (hnf(i, j) != 0) {
        piv.push_back(j);
        break;
      }
  return piv;
}

IVec reduce_by_hermite(const IntMatrix& hnf, IVec v) {
  auto piv = hermite_pivots(hnf);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Int q = floor_div(v[piv[i]], hnf(i, piv[i]));
    if (q == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_sub(v[j], checked_mul(q, hnf(i, j)));
  }
  return v;
}

std::optional<IVec> solve_integer(const IntMatrix& a, const IVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer size mismatch");
  SmithForm s = smith_normal_form(a);
  IVec ub = s.U.apply(b);
  IVec y(a.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<std::size_t> cols;
  for (std::size_t j = s.rank; j < a.cols(); ++j) cols.push_back(j);
  return select_columns(s.V, cols);
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  SmithForm s = smith_normal_form(a);
  if (s.rank != a.rows()) throw std::domain_error("matrix is singular");
  for (Int d : s.diagonal)
    if (d != 1) throw std::domain_error("matrix is not unimodular");
  return s.V * s.U;
}

Int matrix_order(const IntMatrix& a, Int cap) {
  const IntMatrix id = IntMatrix::identity(a.rows());
  IntMatrix p = a;
  for (Int n = 1; n <= cap; ++n) {
    if (p == id) return n;
    p = p * a;
  }
  throw std::runtime_error("matrix order exceeds cap " + std::to_string(cap));
}

bool lattices_equal(const std::vector<IVec>& a, const std::vector<IVec>& b, std::size_t dim) {
  return hermite_rows(IntMatrix::from_rows(a, dim)) == hermite_rows(IntMatrix::from_rows(b, dim));
}

bool in_lattice(const std::vector<IVec>& gens, const IVec& v) {
  if (gens.empty()) return is_zero(v);
  return is_zero(reduce_by_hermite(hermite_rows(IntMatrix::from_rows(gens)), v));
}

RationalSolution solve_rational(const std::vector<RVec>& columns, const RVec& b) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  std::vector<RVec> aug(m, RVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (columns[j].size() != m) throw std::invalid_argument("solve_rational size mismatch");
      aug[i][j] = columns[j][i];
    }
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (aug[i][c] != 0) {
        p = i;
        break;
      }
    if (p == m) continue;
    std::swap(aug[r], aug[p]);
    Rat inv = Rat(1) / aug[r][c];
    for (std::size_t j = c; j <= n; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  RationalSolution out;
  out.rank = r;
  out.unknowns = n;
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][n] != 0) return out;
  RVec x(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][n];
  out.x = std::move(x);
  return out;
}

}  // namespace adlv
