#include "waring/binform.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

BinaryForm::BinaryForm(std::size_t degree, std::vector<Rational> cvec)
    : d_(degree), c_(std::move(cvec)) {
  if (d_ < 1) throw dimension_error("binary form needs degree >= 1");
  if (c_.size() != d_ + 1)
    throw dimension_error("coefficient vector must have degree + 1 entries");
  if (std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); }))
    throw zero_form_error();
}

BinaryForm from_raw_coeffs(const std::vector<Rational>& raw) {
  if (raw.size() < 2) throw dimension_error("binary form needs degree >= 1");
  const std::size_t d = raw.size() - 1;
  std::vector<Rational> c(raw.size());
  for (std::size_t i = 0; i <= d; ++i)
    c[i] = raw[i] / Rational(binomial(d, i));
  return BinaryForm(d, std::move(c));
}

std::vector<Rational> to_raw_coeffs(const BinaryForm& p) {
  const std::size_t d = p.degree();
  std::vector<Rational> raw(d + 1);
  for (std::size_t i = 0; i <= d; ++i)
    raw[i] = p.c(i) * Rational(binomial(d, i));
  return raw;
}

bool forms_equal(const BinaryForm& a, const BinaryForm& b) {
  return a.degree() == b.degree() && a.cvec() == b.cvec();
}

namespace {

void append_monomial(std::ostream& os, const Rational& coeff, std::size_t i,
                     std::size_t j, bool first) {
  Rational a = coeff;
  if (first) {
    if (a.sign() < 0) {
      os << '-';
      a = -a;
    }
  } else {
    os << (a.sign() < 0 ? " - " : " + ");
    if (a.sign() < 0) a = -a;
  }
  const bool has_vars = i > 0 || j > 0;
  if (a != Rational(1) || !has_vars) {
    os << a.str();
    if (has_vars) os << '*';
  }
  if (i > 0) {
    os << 'x';
    if (i > 1) os << '^' << i;
    if (j > 0) os << '*';
  }
  if (j > 0) {
    os << 'y';
    if (j > 1) os << '^' << j;
  }
}

}  // namespace

std::string to_string(const BinaryForm& p) {
  const std::size_t d = p.degree();
  std::vector<Rational> raw = to_raw_coeffs(p);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d + 1; i-- > 0;) {
    if (raw[i].is_zero()) continue;
    append_monomial(os, raw[i], i, d - i, first);
    first = false;
  }
  return os.str();
}

LinearForm::LinearForm(const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) throw zero_form_error();
  if (a.is_zero()) {
    a_ = Rational(0);
    b_ = Rational(1);
  } else {
    a_ = Rational(1);
    b_ = b / a;
  }
}

std::string to_string(const LinearForm& f) {
  std::ostringstream os;
  if (f.alpha().is_zero()) return "y";
  os << 'x';
  if (!f.beta().is_zero()) {
    Rational b = f.beta();
    os << (b.sign() < 0 ? " - " : " + ");
    if (b.sign() < 0) b = -b;
    if (b != Rational(1)) os << b.str() << '*';
    os << 'y';
  }
  return os.str();
}

WdTerm make_term(const Rational& lambda, const Rational& a, const Rational& b,
                 std::size_t degree) {
  LinearForm f(a, b);
  const Rational& scale = a.is_zero() ? b : a;
  return WdTerm{lambda * scale.pow(static_cast<long>(degree)), f};
}

WaringDecomposition::WaringDecomposition(std::size_t degree, std::vector<WdTerm> terms)
    : d_(degree) {
  if (d_ < 1) throw dimension_error("decomposition needs degree >= 1");
  for (auto& t : terms) {
    auto dup = std::find_if(terms_.begin(), terms_.end(),
                            [&](const WdTerm& u) { return u.form == t.form; });
    if (dup != terms_.end())
      dup->lambda += t.lambda;
    else
      terms_.push_back(std::move(t));
  }
}

BinaryForm expand(const WaringDecomposition& wd) {
  const std::size_t d = wd.degree();
  std::vector<Rational> c(d + 1);
  for (const auto& t : wd.terms()) {
    if (t.lambda.is_zero()) continue;
    // (alpha x + beta y)^d contributes alpha^i beta^(d-i) to c_i.
    for (std::size_t i = 0; i <= d; ++i) {
      Rational part = t.form.alpha().pow(static_cast<long>(i)) *
                      t.form.beta().pow(static_cast<long>(d - i));
      c[i] += t.lambda * part;
    }
  }
  return BinaryForm(d, std::move(c));
}

std::size_t effective_length(const WaringDecomposition& wd) {
  return static_cast<std::size_t>(
      std::count_if(wd.terms().begin(), wd.terms().end(),
                    [](const WdTerm& t) { return !t.lambda.is_zero(); }));
}

std::string to_string(const WaringDecomposition& wd) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : wd.terms()) {
    if (t.lambda.is_zero()) continue;
    Rational a = t.lambda;
    if (first) {
      if (a.sign() < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (a != Rational(1)) os << a.str() << '*';
    os << '(' << to_string(t.form) << ")^" << wd.degree();
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace waring
