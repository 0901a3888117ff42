#include "waring/matrix.hpp"

#include <cstddef>
#include <utility>

namespace waring {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw dimension_error("ragged initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Rational det_bareiss(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear each row to integers; scale collects the row multipliers.
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm_i = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm_i.get_mpz_t(), lcm_i.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      b[i][j] = m(i, j).num() * (lcm_i / m(i, j).den());
    scale *= lcm_i;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && b[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(b[p], b[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by the Bareiss identity: prev divides the bracket.
        mpz_class t = b[i][j] * b[k][k] - b[i][k] * b[k][j];
        mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  return Rational(sign * b[n - 1][n - 1], scale);
}

namespace {

Rational laplace_rec(const RatMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 1) return m(row, cols[0]);
  Rational acc;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& a = m(row, cols[j]);
    if (!a.is_zero()) {
      std::size_t removed = cols[j];
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
      Rational sub = laplace_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), removed);
      acc += (sign > 0 ? a : -a) * sub;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Rational det_laplace(const RatMatrix& m, std::size_t max_dim) {
  if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
  if (m.rows() > max_dim)
    throw dimension_error("cofactor expansion refused beyond max_dim");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return laplace_rec(m, cols, 0);
}

std::vector<Rational> solve_consistent_overdetermined(
    const RatMatrix& m, const std::vector<Rational>& rhs) {
  const std::size_t n = m.cols();
  if (m.rows() != n + 1)
    throw dimension_error("system must have exactly one more row than columns");
  if (rhs.size() != m.rows())
    throw dimension_error("right-hand side length does not match row count");

  // Augmented (n+1) x (n+1); eliminate below and above each pivot so the
  // pivot rows end up diagonal.
  RatMatrix a(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = rhs[i];
  }

  std::vector<bool> used(n + 1, false);
  std::vector<std::size_t> pivot_row(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n + 1;
    for (std::size_t r = 0; r <= n; ++r) {
      if (!used[r] && !a(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p == n + 1) throw singular_system_error("system matrix is rank-deficient");
    used[p] = true;
    pivot_row[col] = p;
    Rational inv = a(p, col).inverse();
    for (std::size_t j = col; j <= n; ++j) a(p, j) *= inv;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == p || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (std::size_t j = col; j <= n; ++j) a(r, j) -= f * a(p, j);
    }
  }

  for (std::size_t r = 0; r <= n; ++r) {
    if (!used[r] && !a(r, n).is_zero())
      throw inconsistent_system_error("leftover row has nonzero residual");
  }

  std::vector<Rational> x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = a(pivot_row[col], n);
  return x;
}

}  // namespace waring
