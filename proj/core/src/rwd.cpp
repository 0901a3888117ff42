#include "waring/rwd.hpp"

#include <optional>

#include "waring/matrix.hpp"

namespace waring {

namespace {

// Assembles and solves the (d+1) x d interpolation system for the given
// parameters and packages the result. Columns are the power columns of
// the slot values, with the final column either the power column of R or
// the pure y^d unit column.
RwdResult solve_with(const BinaryForm& p, SuitableParams params) {
  const std::size_t d = p.degree();
  const std::size_t nu = nu_of(d);

  std::vector<Rational> point(params.s.begin(),
                              params.s.begin() + static_cast<std::ptrdiff_t>(nu));
  std::vector<Rational> values = column_values(params.parity, point);
  if (params.delta == 1) values.push_back(params.s[nu]);

  RatMatrix m(d + 1, d);
  for (std::size_t j = 0; j < values.size(); ++j) {
    Rational pw(1);
    for (std::size_t k = 0; k <= d; ++k) {
      m(k, j) = pw;
      pw *= values[j];
    }
  }
  if (params.delta == 0) m(d, d - 1) = Rational(1);

  std::vector<Rational> rhs(d + 1);
  for (std::size_t k = 0; k <= d; ++k) rhs[k] = p.c(d - k);

  std::vector<Rational> lambda = solve_consistent_overdetermined(m, rhs);

  std::vector<WdTerm> terms;
  terms.reserve(d);
  for (std::size_t j = 0; j < values.size(); ++j)
    terms.push_back(WdTerm{lambda[j], LinearForm(Rational(1), values[j])});
  if (params.delta == 0)
    terms.push_back(WdTerm{lambda[d - 1], LinearForm(Rational(0), Rational(1))});

  std::pair<Rational, Rational> r_pair =
      params.delta == 1 ? std::make_pair(Rational(1), params.s[nu])
                        : std::make_pair(Rational(0), Rational(1));

  WaringDecomposition wd(d, std::move(terms));
  bool verified = forms_equal(expand(wd), p);
  return RwdResult{std::move(wd), std::move(params), std::move(r_pair), verified};
}

// Degree-1 parameters: nu = 0, so the vector is just the final slot. The
// two cofactors are c_0 and -c_1, making R the slope when x appears.
SuitableParams linear_params(const BinaryForm& p) {
  SuitableParams params;
  params.parity = Parity::odd;
  params.trace.m = Rational(0);
  if (p.c(1).is_zero()) {
    params.delta = 0;
    params.s = {Rational(0)};
  } else {
    params.delta = 1;
    params.s = {p.c(0) / p.c(1)};
  }
  return params;
}

}  // namespace

RwdResult decompose(const BinaryForm& p) {
  const std::size_t d = p.degree();
  if (d == 1) return solve_with(p, linear_params(p));
  SuitableParams params =
      d % 2 ? wd_parameters_odd(p) : wd_parameters_even(p);
  return solve_with(p, std::move(params));
}

RwdResult decompose_with_params(const BinaryForm& p,
                                const std::vector<Rational>& point) {
  const std::size_t d = p.degree();
  const Parity parity = parity_of(d);
  const std::size_t nu = nu_of(d);
  if (point.size() != nu)
    throw dimension_error("grid point must have nu entries");
  if (d == 1) return solve_with(p, linear_params(p));

  std::vector<std::string> viols;
  const std::size_t pair_begin = parity == Parity::odd ? 0 : 1;
  for (std::size_t i = pair_begin; i < nu; ++i)
    if (point[i].is_zero()) viols.push_back("paired slot is zero");
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j)
      if (point[i] == point[j] || point[i] == -point[j])
        viols.push_back("slots collide up to sign");

  DeltaCofactors dc = eval_deltas(p, point);
  SuitableParams params;
  params.parity = parity;
  params.trace.m = Rational(static_cast<long>(nu - 1));
  params.s = point;

  if (!dc.at(d).is_zero()) {
    params.delta = 1;
    Rational r = -dc.at(d - 1) / dc.at(d);
    if (parity == Parity::even) r -= point[0];
    params.trace.psi_checks.emplace_back("Delta_d", dc.at(d));
    if (parity == Parity::even) {
      params.trace.psi_checks.emplace_back("R-s", r - point[0]);
      if (r == point[0]) viols.push_back("forced root R collides with the unpaired slot");
    }
    for (std::size_t i = pair_begin; i < nu; ++i) {
      params.trace.psi_checks.emplace_back("R-s" + std::to_string(i + 1 - pair_begin),
                                           r - point[i]);
      params.trace.psi_checks.emplace_back("R+s" + std::to_string(i + 1 - pair_begin),
                                           r + point[i]);
      if (r == point[i] || r == -point[i])
        viols.push_back("forced root R collides with a paired slot");
    }
    params.s.push_back(r);
  } else {
    params.delta = 0;
    params.s.push_back(Rational(0));
  }

  if (!viols.empty())
    throw membership_error("grid point is not admissible", std::move(viols));
  return solve_with(p, std::move(params));
}

RwdResult search_shorter(const BinaryForm& p,
                         const std::vector<std::vector<Rational>>& grid) {
  std::optional<RwdResult> best;
  std::size_t best_len = 0;
  for (const auto& point : grid) {
    std::optional<RwdResult> cand;
    try {
      cand = decompose_with_params(p, point);
    } catch (const membership_error&) {
      continue;
    } catch (const singular_system_error&) {
      continue;
    }
    std::size_t len = effective_length(cand->decomposition);
    if (!best || len < best_len) {
      best_len = len;
      best = std::move(*cand);
    }
  }
  if (!best) throw no_valid_point_error("no grid point was admissible");
  return std::move(*best);
}

}  // namespace waring
