#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "waring/errors.hpp"

namespace waring {

// Arbitrary-precision rational, always in canonical form: gcd(num, den) = 1,
// den > 0, zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "num" or "num/den" in base 10, optional leading '-'.
  static Rational parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  // Integer exponent; e < 0 requires a nonzero base. pow(0, 0) = 1.
  Rational pow(long e) const;

  // "num" when den = 1, else "num/den".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace waring
