#pragma once

#include <cstddef>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Univariate polynomial over the rationals, coefficients in ascending
// degree order with no trailing zeros (the zero polynomial is empty).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rational& a) { return RatPoly({a}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& t) const;
  // Largest absolute value among the coefficients; 0 for the zero polynomial.
  Rational max_abs_coeff() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& a) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const = default;

  // The monomial a * T^k.
  static RatPoly monomial(const Rational& a, std::size_t k);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Unique polynomial of degree < points.size() through the given nodes
// (Newton's divided differences, exact). Abscissae must be distinct.
RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace waring
