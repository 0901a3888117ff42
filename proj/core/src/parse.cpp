#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "waring/binform.hpp"

namespace waring {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool accept(char c) {
    if (!eof() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digits", pos);
    return mpz_class(s.substr(start, pos - start));
  }

  // Unsigned integer or fraction "num/den".
  Rational coefficient() {
    mpz_class num = integer();
    skip_ws();
    if (accept('/')) {
      skip_ws();
      std::size_t den_pos = pos;
      mpz_class den = integer();
      if (den == 0) throw parse_error("zero denominator", den_pos);
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::size_t exponent() {
    if (accept('^')) {
      skip_ws();
      mpz_class e = integer();
      if (!e.fits_ulong_p()) throw parse_error("exponent too large", pos);
      return e.get_ui();
    }
    return 1;
  }
};

struct Monomial {
  Rational coeff;
  std::size_t xe, ye;
};

Monomial parse_term(Scanner& sc, bool first) {
  Rational sign(1);
  if (sc.accept('+')) {
  } else if (sc.accept('-')) {
    sign = Rational(-1);
  } else if (!first) {
    throw parse_error("expected '+' or '-' between terms", sc.pos);
  }
  sc.skip_ws();
  if (sc.eof()) throw parse_error("expected a term", sc.pos);

  Rational coeff(1);
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    coeff = sc.coefficient();
    saw_anything = true;
    sc.skip_ws();
    if (sc.accept('*')) sc.skip_ws();
  }

  std::size_t xe = 0, ye = 0;
  if (!sc.eof() && sc.peek() == 'x') {
    ++sc.pos;
    xe = sc.exponent();
    saw_anything = true;
    sc.skip_ws();
    if (sc.accept('*')) sc.skip_ws();
  }
  if (!sc.eof() && sc.peek() == 'y') {
    ++sc.pos;
    ye = sc.exponent();
    saw_anything = true;
  }
  if (!saw_anything)
    throw parse_error("expected a coefficient, 'x', or 'y'", sc.pos);
  return Monomial{sign * coeff, xe, ye};
}

}  // namespace

BinaryForm parse_poly(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  if (sc.eof()) throw parse_error("empty input", sc.pos);

  std::vector<Monomial> terms;
  bool first = true;
  while (!sc.eof()) {
    terms.push_back(parse_term(sc, first));
    first = false;
    sc.skip_ws();
    if (!sc.eof() && sc.peek() != '+' && sc.peek() != '-')
      throw parse_error("unexpected character", sc.pos);
  }

  const std::size_t d = terms[0].xe + terms[0].ye;
  for (const auto& t : terms) {
    if (t.xe + t.ye != d)
      throw homogeneity_error("term of degree " + std::to_string(t.xe + t.ye) +
                              " mixed with degree " + std::to_string(d));
  }
  if (d == 0) throw dimension_error("binary form needs degree >= 1");

  std::vector<Rational> raw(d + 1);
  for (const auto& t : terms) raw[t.xe] += t.coeff;
  return from_raw_coeffs(raw);
}

}  // namespace waring
