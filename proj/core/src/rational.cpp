#include "waring/rational.hpp"

#include <cctype>
#include <ostream>

namespace waring {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw error("empty rational literal");
  auto digits = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw error("malformed rational literal '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw error("rational with zero denominator");
  return Rational(mpz_class(num), d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw error("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw error("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace waring
