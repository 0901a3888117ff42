#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Real binary form of degree d >= 1, stored against the scaled monomial
// basis: p(x, y) = sum_i C(d, i) * c_i * x^i * y^(d-i). Never identically
// zero. c(i) indexes c_i, so c(d) sits with x^d and c(0) with y^d.
class BinaryForm {
 public:
  BinaryForm(std::size_t degree, std::vector<Rational> cvec);

  std::size_t degree() const { return d_; }
  const std::vector<Rational>& cvec() const { return c_; }
  const Rational& c(std::size_t i) const { return c_[i]; }

  bool operator==(const BinaryForm& o) const = default;

 private:
  std::size_t d_;
  std::vector<Rational> c_;
};

// raw[i] is the plain coefficient of x^i y^(d-i); c_i = raw[i] / C(d, i).
BinaryForm from_raw_coeffs(const std::vector<Rational>& raw);
std::vector<Rational> to_raw_coeffs(const BinaryForm& p);

bool forms_equal(const BinaryForm& a, const BinaryForm& b);

// Display in the plain monomial basis, highest x-power first,
// e.g. "x^5 + 30*x^4*y + 5226*y^5" or "1/4*x^2*y".
std::string to_string(const BinaryForm& p);

// Linear form alpha*x + beta*y, kept normalized: either alpha = 1, or
// (alpha, beta) = (0, 1).
class LinearForm {
 public:
  // Normalizes (a, b); throws on (0, 0).
  LinearForm(const Rational& a, const Rational& b);

  const Rational& alpha() const { return a_; }
  const Rational& beta() const { return b_; }

  bool operator==(const LinearForm& o) const = default;

 private:
  Rational a_, b_;
};

std::string to_string(const LinearForm& f);

struct WdTerm {
  Rational lambda;
  LinearForm form;

  bool operator==(const WdTerm& o) const = default;
};

// Rescales (a, b) to a normalized linear form, folding the d-th power of
// the dropped scale into lambda: lambda * (a x + b y)^d stays fixed.
WdTerm make_term(const Rational& lambda, const Rational& a, const Rational& b,
                 std::size_t degree);

// A candidate Waring decomposition sum_i lambda_i * form_i^degree. Terms
// with lambda = 0 are legal and keep their slot; construction merges terms
// whose normalized forms coincide (summing their lambdas into the first
// occurrence), so surviving nonzero terms are pairwise non-proportional.
class WaringDecomposition {
 public:
  WaringDecomposition(std::size_t degree, std::vector<WdTerm> terms);

  std::size_t degree() const { return d_; }
  const std::vector<WdTerm>& terms() const { return terms_; }

  bool operator==(const WaringDecomposition& o) const = default;

 private:
  std::size_t d_;
  std::vector<WdTerm> terms_;
};

// Multiplies out sum lambda_i * form_i^degree by the binomial theorem.
BinaryForm expand(const WaringDecomposition& wd);

// Number of terms with lambda != 0.
std::size_t effective_length(const WaringDecomposition& wd);

std::string to_string(const WaringDecomposition& wd);

// Parses homogeneous polynomial text in x and y, e.g.
// "3*x^2*y + y^3" or "-1/2*x^4 + x*y^3". Whitespace is insignificant and
// '*' between factors is optional. Throws parse_error (syntax, with byte
// position), homogeneity_error, or zero_form_error.
BinaryForm parse_poly(const std::string& text);

}  // namespace waring
