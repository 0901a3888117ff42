#include "waring/polynomial.hpp"

#include <algorithm>

namespace waring {

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::eval(const Rational& t) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

Rational RatPoly::max_abs_coeff() const {
  Rational best;
  for (const auto& a : c_) best = std::max(best, a.abs());
  return best;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& a) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= a;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monomial(const Rational& a, std::size_t k) {
  std::vector<Rational> r(k + 1);
  r[k] = a;
  return RatPoly(std::move(r));
}

RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  if (n == 0) return RatPoly();

  // Divided differences in place: dd[i] ends up as f[t_0, ..., t_i].
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational dx = points[i].first - points[i - level].first;
      if (dx.is_zero()) throw error("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }

  // Horner expansion of the Newton form.
  RatPoly acc = RatPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    RatPoly factor({-points[i].first, Rational(1)});
    acc = acc * factor + RatPoly::constant(dd[i]);
  }
  return acc;
}

}  // namespace waring
