#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination: each row is
// cleared to integers first, and every interior division in the sweep is
// exact. Row swaps track the sign. Production route for all sizes.
Rational det_bareiss(const RatMatrix& m);

// Exact determinant by cofactor expansion along the first row. Exponential;
// refuses matrices larger than max_dim. Kept as an independent cross-check
// for det_bareiss, not a production path.
Rational det_laplace(const RatMatrix& m, std::size_t max_dim = 7);

// Solves m * x = rhs where m is (n+1) x n of rank n and the system is
// consistent. Gaussian elimination over the rationals with first-nonzero
// pivot search in row order; the leftover row's residual must cancel to
// exactly zero, else the system is reported inconsistent.
std::vector<Rational> solve_consistent_overdetermined(
    const RatMatrix& m, const std::vector<Rational>& rhs);

}  // namespace waring
