#pragma once

#include <cstddef>
#include <vector>

#include "waring/binform.hpp"
#include "waring/matrix.hpp"
#include "waring/polynomial.hpp"

namespace waring {

enum class Parity { odd, even };

inline Parity parity_of(std::size_t degree) {
  return degree % 2 ? Parity::odd : Parity::even;
}

// nu = (d-1)/2 for odd d, d/2 for even d: the number of free parameters.
inline std::size_t nu_of(std::size_t degree) {
  return degree % 2 ? (degree - 1) / 2 : degree / 2;
}

// The d+1 signed maximal minors of the bordered coefficient matrix at one
// parameter point: values[i] carries the sign (-1)^i.
struct DeltaCofactors {
  Parity parity;
  std::vector<Rational> values;

  const Rational& at(std::size_t i) const { return values[i]; }
};

// The two top cofactors as univariate polynomials in the free parameter,
// after pinning the prefix parameters to 1, 2, ..., nu-1. For odd degree
// the free parameter is the last slot; for even degree it is the first.
struct DeltaRestriction {
  Parity parity;
  std::vector<Rational> fixed_prefix;
  RatPoly poly_d;
  RatPoly poly_d1;
};

// Expands a parameter point to the d - 1 column values of the bordered
// matrix: each paired slot s_i contributes (s_i, -s_i); the unpaired first
// slot of an even-degree point contributes itself once.
std::vector<Rational> column_values(Parity parity, const std::vector<Rational>& point);

// Point layout: odd degree (s_1, ..., s_nu); even degree (s, s_1, ..., s_{nu-1}).
// Either way the point has nu entries.
DeltaCofactors eval_deltas(const BinaryForm& p, const std::vector<Rational>& point);

// Exact reconstruction of the top two cofactors along the free parameter by
// sampling at 0, 1, ..., d(d+1)/2 and interpolating; the sample count covers
// the worst-case degree, so the result is exact and trailing zeros vanish.
DeltaRestriction restrict_deltas(const BinaryForm& p);

// h*(t) = sum_i values[i] * t^i. Vanishes at every column value of a
// consistent parameter point.
Rational h_star(const DeltaCofactors& dc, const Rational& t);

}  // namespace waring
