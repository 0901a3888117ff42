#include "waring/delta.hpp"

namespace waring {

std::vector<Rational> column_values(Parity parity, const std::vector<Rational>& point) {
  std::vector<Rational> w;
  std::size_t start = 0;
  if (parity == Parity::even) {
    w.push_back(point[0]);
    start = 1;
  }
  for (std::size_t i = start; i < point.size(); ++i) {
    w.push_back(point[i]);
    w.push_back(-point[i]);
  }
  return w;
}

namespace {

// Minor of the bordered matrix deleting row `skip` and the unknowns column:
// row k is (w_0^k, ..., w_{d-2}^k, c_{d-k}).
RatMatrix minor_matrix(const BinaryForm& p, const std::vector<Rational>& w,
                       std::size_t skip) {
  const std::size_t d = p.degree();
  RatMatrix m(d, d);
  std::size_t r = 0;
  std::vector<Rational> pw(w.size(), Rational(1));
  for (std::size_t k = 0; k <= d; ++k) {
    if (k != skip) {
      for (std::size_t j = 0; j < w.size(); ++j) m(r, j) = pw[j];
      m(r, d - 1) = p.c(d - k);
      ++r;
    }
    for (std::size_t j = 0; j < w.size(); ++j) pw[j] *= w[j];
  }
  return m;
}

Rational delta_at(const BinaryForm& p, const std::vector<Rational>& w, std::size_t i) {
  Rational det = det_bareiss(minor_matrix(p, w, i));
  return (i % 2) ? -det : det;
}

}  // namespace

DeltaCofactors eval_deltas(const BinaryForm& p, const std::vector<Rational>& point) {
  const std::size_t d = p.degree();
  const Parity parity = parity_of(d);
  if (point.size() != nu_of(d))
    throw dimension_error("parameter point must have nu entries");
  std::vector<Rational> w = column_values(parity, point);
  DeltaCofactors dc{parity, std::vector<Rational>(d + 1)};
  for (std::size_t i = 0; i <= d; ++i) dc.values[i] = delta_at(p, w, i);
  return dc;
}

DeltaRestriction restrict_deltas(const BinaryForm& p) {
  const std::size_t d = p.degree();
  if (d < 2) throw dimension_error("restriction needs degree >= 2");
  const Parity parity = parity_of(d);
  const std::size_t nu = nu_of(d);

  std::vector<Rational> prefix(nu - 1);
  for (std::size_t i = 0; i + 1 < nu; ++i) prefix[i] = Rational(static_cast<long>(i + 1));

  const std::size_t samples = d * (d + 1) / 2 + 1;
  std::vector<std::pair<Rational, Rational>> pts_d(samples), pts_d1(samples);
  std::vector<Rational> point(nu);
  for (std::size_t t = 0; t < samples; ++t) {
    Rational tv(static_cast<long>(t));
    if (parity == Parity::odd) {
      for (std::size_t i = 0; i + 1 < nu; ++i) point[i] = prefix[i];
      point[nu - 1] = tv;
    } else {
      point[0] = tv;
      for (std::size_t i = 0; i + 1 < nu; ++i) point[i + 1] = prefix[i];
    }
    std::vector<Rational> w = column_values(parity, point);
    pts_d[t] = {tv, delta_at(p, w, d)};
    pts_d1[t] = {tv, delta_at(p, w, d - 1)};
  }
  return DeltaRestriction{parity, std::move(prefix), interpolate(pts_d),
                          interpolate(pts_d1)};
}

Rational h_star(const DeltaCofactors& dc, const Rational& t) {
  Rational acc;
  for (std::size_t i = dc.values.size(); i-- > 0;) acc = acc * t + dc.values[i];
  return acc;
}

}  // namespace waring
