#include "waring/params.hpp"

#include <algorithm>

namespace waring {

namespace {

constexpr unsigned kMaxEscalations = 64;

std::string slot_name(std::size_t i) { return "s" + std::to_string(i); }

Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace

SuitableParams wd_parameters_odd(const BinaryForm& p) {
  const std::size_t d = p.degree();
  if (d % 2 == 0) throw parity_error("degree must be odd");
  if (d < 3) throw dimension_error("parameter selection needs degree >= 3");
  const std::size_t nu = nu_of(d);

  DeltaRestriction rest = restrict_deltas(p);
  SelectionTrace trace;
  std::vector<Rational> s(nu + 1);
  for (std::size_t i = 0; i + 1 < nu; ++i) s[i] = Rational(static_cast<long>(i + 1));

  if (rest.poly_d.is_zero()) {
    Rational dd1 = rest.poly_d1.max_abs_coeff();
    trace.bounds.emplace_back("delta_d1", dd1);
    trace.m = max_of(Rational(static_cast<long>(nu - 1)), dd1);
    Rational sn = Rational(2) * trace.m + Rational(1);
    while (rest.poly_d1.eval(sn).is_zero()) {
      if (++trace.escalations > kMaxEscalations)
        throw error("parameter escalation failed: degenerate cofactor restriction");
      sn = Rational(2) * sn + Rational(1);
    }
    s[nu - 1] = sn;
    s[nu] = Rational(0);
    return SuitableParams{Parity::odd, std::move(s), 0, std::move(trace)};
  }

  const RatPoly& pd = rest.poly_d;
  const RatPoly& pd1 = rest.poly_d1;
  const RatPoly t = RatPoly::monomial(Rational(1), 1);

  trace.bounds.emplace_back("delta_d", pd.max_abs_coeff());
  trace.bounds.emplace_back("delta_d1_0p", (pd1 - t * pd).max_abs_coeff());
  trace.bounds.emplace_back("delta_d1_0m", (pd1 + t * pd).max_abs_coeff());
  for (std::size_t i = 1; i < nu; ++i) {
    RatPoly si = RatPoly::constant(Rational(static_cast<long>(i)));
    trace.bounds.emplace_back("delta_d1_" + std::to_string(i) + "p",
                              (pd1 - si * pd).max_abs_coeff());
    trace.bounds.emplace_back("delta_d1_" + std::to_string(i) + "m",
                              (pd1 + si * pd).max_abs_coeff());
  }
  trace.m = Rational(static_cast<long>(nu - 1));
  for (const auto& [name, v] : trace.bounds) trace.m = max_of(trace.m, v);

  Rational sn = Rational(2) * trace.m + Rational(1);
  for (unsigned attempt = 0;; ++attempt) {
    if (attempt > kMaxEscalations)
      throw error("parameter escalation failed: separation conditions unreachable");
    Rational vd = pd.eval(sn);
    Rational vd1 = pd1.eval(sn);
    trace.psi_checks.clear();
    trace.psi_checks.emplace_back("Delta_d", vd);
    bool ok = !vd.is_zero();
    if (ok) {
      Rational r = -vd1 / vd;
      for (std::size_t i = 1; i <= nu; ++i) {
        Rational si = (i < nu) ? s[i - 1] : sn;
        trace.psi_checks.emplace_back("R-" + slot_name(i), r - si);
        trace.psi_checks.emplace_back("R+" + slot_name(i), r + si);
        if (r == si || r == -si) ok = false;
      }
      if (ok) {
        s[nu - 1] = sn;
        s[nu] = r;
        break;
      }
    }
    sn = Rational(2) * sn + Rational(1);
    ++trace.escalations;
  }
  return SuitableParams{Parity::odd, std::move(s), 1, std::move(trace)};
}

SuitableParams wd_parameters_even(const BinaryForm& p) {
  const std::size_t d = p.degree();
  if (d % 2) throw parity_error("degree must be even");
  if (d < 2) throw dimension_error("parameter selection needs degree >= 2");
  const std::size_t nu = nu_of(d);

  DeltaRestriction rest = restrict_deltas(p);
  SelectionTrace trace;
  std::vector<Rational> s(nu + 1);
  for (std::size_t i = 1; i < nu; ++i) s[i] = Rational(static_cast<long>(i));

  if (rest.poly_d.is_zero()) {
    Rational dd1 = rest.poly_d1.max_abs_coeff();
    trace.bounds.emplace_back("delta_d1", dd1);
    trace.m = max_of(Rational(static_cast<long>(nu - 1)), dd1);
    Rational sv = Rational(2) * trace.m + Rational(1);
    while (rest.poly_d1.eval(sv).is_zero()) {
      if (++trace.escalations > kMaxEscalations)
        throw error("parameter escalation failed: degenerate cofactor restriction");
      sv = Rational(2) * sv + Rational(1);
    }
    s[0] = sv;
    s[nu] = Rational(0);
    return SuitableParams{Parity::even, std::move(s), 0, std::move(trace)};
  }

  const RatPoly& pd = rest.poly_d;
  const RatPoly& pd1 = rest.poly_d1;
  const RatPoly t = RatPoly::monomial(Rational(1), 1);

  trace.bounds.emplace_back("delta_d", pd.max_abs_coeff());
  trace.bounds.emplace_back("delta_d1_0m",
                            (pd1 + t * pd * Rational(2)).max_abs_coeff());
  for (std::size_t i = 1; i < nu; ++i) {
    RatPoly shift_p = t + RatPoly::constant(Rational(static_cast<long>(i)));
    RatPoly shift_m = t - RatPoly::constant(Rational(static_cast<long>(i)));
    trace.bounds.emplace_back("delta_d1_" + std::to_string(i) + "p",
                              (pd1 - shift_p * pd).max_abs_coeff());
    trace.bounds.emplace_back("delta_d1_" + std::to_string(i) + "m",
                              (pd1 + shift_m * pd).max_abs_coeff());
  }
  trace.m = Rational(static_cast<long>(nu - 1));
  for (const auto& [name, v] : trace.bounds) trace.m = max_of(trace.m, v);

  Rational sv = Rational(2) * trace.m + Rational(1);
  for (unsigned attempt = 0;; ++attempt) {
    if (attempt > kMaxEscalations)
      throw error("parameter escalation failed: separation conditions unreachable");
    Rational vd = pd.eval(sv);
    Rational vd1 = pd1.eval(sv);
    trace.psi_checks.clear();
    trace.psi_checks.emplace_back("Delta_d", vd);
    bool ok = !vd.is_zero();
    if (ok) {
      Rational r = -vd1 / vd - sv;
      trace.psi_checks.emplace_back("R-s", r - sv);
      if (r == sv) ok = false;
      for (std::size_t i = 1; i < nu; ++i) {
        trace.psi_checks.emplace_back("R-" + slot_name(i), r - s[i]);
        trace.psi_checks.emplace_back("R+" + slot_name(i), r + s[i]);
        if (r == s[i] || r == -s[i]) ok = false;
      }
      if (ok) {
        s[0] = sv;
        s[nu] = r;
        break;
      }
    }
    sv = Rational(2) * sv + Rational(1);
    ++trace.escalations;
  }
  return SuitableParams{Parity::even, std::move(s), 1, std::move(trace)};
}

namespace {

bool sign_collide(const Rational& a, const Rational& b) {
  return a == b || a == -b;
}

}  // namespace

SuitabilityReport is_suitable(const BinaryForm& p, const std::vector<Rational>& s,
                              bool strict) {
  const std::size_t d = p.degree();
  const Parity parity = parity_of(d);
  const std::size_t nu = nu_of(d);
  if (s.size() != nu + 1)
    throw dimension_error("parameter vector must have nu + 1 entries");

  std::vector<std::string> viols;
  std::vector<Rational> point(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nu));
  DeltaCofactors dc = eval_deltas(p, point);
  const bool generic = !dc.at(d).is_zero();

  const std::size_t pair_begin = parity == Parity::odd ? 0 : 1;
  for (std::size_t i = pair_begin; i < nu; ++i)
    if (s[i].is_zero()) viols.push_back(slot_name(i + 1 - pair_begin) + " = 0");
  for (std::size_t i = pair_begin; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j)
      if (sign_collide(s[i], s[j]))
        viols.push_back(slot_name(i + 1 - pair_begin) + " = +-" +
                        slot_name(j + 1 - pair_begin));

  if (parity == Parity::even) {
    if (strict && s[0].is_zero()) viols.push_back("s* = 0");
    for (std::size_t i = 1; i < nu; ++i)
      if (sign_collide(s[0], s[i]))
        viols.push_back("s* = +-" + slot_name(i));
  }

  if (generic) {
    Rational r = -dc.at(d - 1) / dc.at(d);
    if (parity == Parity::even) r -= s[0];
    if (s[nu] != r)
      viols.push_back("final slot does not equal the forced root R");
    for (std::size_t i = pair_begin; i < nu; ++i)
      if (sign_collide(s[nu], s[i]))
        viols.push_back("R = +-" + slot_name(i + 1 - pair_begin));
    if (parity == Parity::even) {
      if (strict ? sign_collide(s[nu], s[0]) : s[nu] == s[0])
        viols.push_back(strict ? "R = +-s*" : "R = s*");
    }
  } else {
    if (!s[nu].is_zero())
      viols.push_back("top cofactor vanishes at the point but final slot is nonzero");
  }
  return SuitabilityReport{viols.empty(), std::move(viols)};
}

SuitabilityReport in_G(const BinaryForm& p, const std::vector<Rational>& point) {
  const std::size_t d = p.degree();
  const Parity parity = parity_of(d);
  const std::size_t nu = nu_of(d);
  if (point.size() != nu)
    throw dimension_error("grid point must have nu entries");

  std::vector<std::string> viols;
  DeltaCofactors dc = eval_deltas(p, point);
  const std::size_t pair_begin = parity == Parity::odd ? 0 : 1;

  if (dc.at(d).is_zero()) viols.push_back("Delta_d = 0 (outside Omega)");
  for (std::size_t i = pair_begin; i < nu; ++i)
    if (point[i].is_zero())
      viols.push_back(slot_name(i + 1 - pair_begin) + " = 0 (in A)");

  if (parity == Parity::odd) {
    for (std::size_t i = 0; i < nu; ++i) {
      if ((dc.at(d - 1) + point[i] * dc.at(d)).is_zero() ||
          (dc.at(d - 1) - point[i] * dc.at(d)).is_zero())
        viols.push_back("Delta_d1 = +-" + slot_name(i + 1) + "*Delta_d (in B)");
    }
  } else {
    if ((dc.at(d - 1) + Rational(2) * point[0] * dc.at(d)).is_zero())
      viols.push_back("Delta_d1 = -2s*Delta_d (in B)");
    for (std::size_t i = 1; i < nu; ++i) {
      if ((dc.at(d - 1) + (point[0] + point[i]) * dc.at(d)).is_zero() ||
          (dc.at(d - 1) + (point[0] - point[i]) * dc.at(d)).is_zero())
        viols.push_back("Delta_d1 = -(s +- " + slot_name(i) + ")*Delta_d (in B)");
    }
  }

  for (std::size_t i = pair_begin; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j)
      if (sign_collide(point[i], point[j]))
        viols.push_back(slot_name(i + 1 - pair_begin) + " = +-" +
                        slot_name(j + 1 - pair_begin) + " (in D)");
  if (parity == Parity::even) {
    for (std::size_t i = 1; i < nu; ++i)
      if (sign_collide(point[0], point[i]))
        viols.push_back("s = +-" + slot_name(i) + " (in D)");
  }
  return SuitabilityReport{viols.empty(), std::move(viols)};
}

}  // namespace waring
