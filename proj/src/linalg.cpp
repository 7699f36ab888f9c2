#include "ordercone/linalg.hpp"

#include <algorithm>

namespace ordercone {

namespace {

// Gauss-Jordan to reduced row echelon form. Returns pivot column per pivot
// row. First nonzero candidate in column order is the pivot: deterministic.
std::vector<std::size_t> rref_in_place(RMatrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv_pivot = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::optional<RVector> solve_linear(const RMatrix& A, const RVector& b) {
  if (A.rows() != b.dim()) throw std::invalid_argument("solve_linear: dimension mismatch");
  RMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  // A pivot in the augmented column means 0 = 1: inconsistent.
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  RVector x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
  return x;
}

std::vector<RVector> kernel_basis(const RMatrix& A) {
  RMatrix m = A;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    RVector v(A.cols());
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  // Clear denominators rowwise, then run Bareiss fraction-free elimination
  // entirely in integers; intermediate entries stay bounded by minors.
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      lcm = boost::multiprecision::lcm(lcm, Integer(denominator(A(i, j))));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = A(i, j) * Rational(lcm);
      w[i][j] = numerator(scaled);
    }
  }
  Integer prev_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && w[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) w[p].swap(w[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = w[i][j] * w[r][c] - w[i][c] * w[r][j];
        w[i][j] = t / prev_pivot;  // exact by Bareiss
      }
      w[i][c] = 0;
    }
    prev_pivot = w[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_of_vectors(std::span<const RVector> vs) {
  if (vs.empty()) return 0;
  RMatrix m(vs.size(), vs[0].dim());
  for (std::size_t i = 0; i < vs.size(); ++i) m.set_row(i, vs[i]);
  return rank(m);
}

Rational determinant(const RMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  RMatrix m = A;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RMatrix> inverse(const RMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = A.rows();
  RMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  // [A|I] always has full row rank; A is singular exactly when a pivot
  // spills into the identity half.
  if (n > 0 && pivots.back() >= n) return std::nullopt;
  RMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RVector> column_space_basis(const RMatrix& A) {
  RMatrix m = A;
  const auto pivots = rref_in_place(m);
  std::vector<RVector> basis;
  basis.reserve(pivots.size());
  for (auto c : pivots) basis.push_back(A.col(c));
  return basis;
}

RVector normalize_ray(const RVector& v) {
  Integer den_lcm = 1;
  for (std::size_t i = 0; i < v.dim(); ++i)
    den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(v[i])));
  Integer num_gcd = 0;
  std::vector<Integer> scaled(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    scaled[i] = numerator(v[i] * Rational(den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled[i]);
  }
  if (num_gcd == 0) return v;  // zero vector
  RVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(scaled[i] / num_gcd);
  return out;
}

RVector normalize_line(const RVector& v) {
  RVector n = normalize_ray(v);
  for (std::size_t i = 0; i < n.dim(); ++i) {
    if (n[i] == 0) continue;
    if (n[i] < 0)
      for (std::size_t j = i; j < n.dim(); ++j) n[j] = -n[j];
    break;
  }
  return n;
}

}  // namespace ordercone
