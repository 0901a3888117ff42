#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "waring/binform.hpp"
#include "waring/params.hpp"

namespace waring {

// A computed decomposition together with how it was obtained. The final
// slot of the decomposition corresponds to r_pair: (1, R) is the form
// x + R*y forced by the parameters, (0, 1) is the pure y^d form used when
// the top cofactor vanishes. `verified` records whether re-expanding the
// terms reproduced the input exactly.
struct RwdResult {
  WaringDecomposition decomposition;
  SuitableParams params;
  std::pair<Rational, Rational> r_pair;
  bool verified;
};

// Full pipeline: select parameters deterministically, assemble the
// interpolation system, solve it exactly, and re-expand as a check.
// Output length never exceeds the degree.
RwdResult decompose(const BinaryForm& p);

// Same solve at a caller-chosen grid point (length nu). The point must
// pass the admissibility conditions: paired slots nonzero and
// sign-distinct always, and whenever the top cofactor is nonzero there
// the forced root R must avoid every column value. Points where the top
// cofactor vanishes take the pure y^d fallback column instead; throws
// membership_error otherwise.
RwdResult decompose_with_params(const BinaryForm& p, const std::vector<Rational>& point);

// Tries every grid point in order, skipping inadmissible ones, and keeps
// the first decomposition of minimal effective length. Throws
// no_valid_point_error if no point is admissible.
RwdResult search_shorter(const BinaryForm& p, const std::vector<std::vector<Rational>>& grid);

// One-parameter view of the decompositions of a fixed form: a certified
// sampler over grid points. Each sample is an exact, independently
// verified decomposition; no closed-form expression in the parameters is
// computed.
class ParametricFamily {
 public:
  explicit ParametricFamily(BinaryForm form) : form_(std::move(form)) {}

  const BinaryForm& form() const { return form_; }
  std::size_t arity() const { return nu_of(form_.degree()); }

  RwdResult sample(const std::vector<Rational>& point) const {
    return decompose_with_params(form_, point);
  }

 private:
  BinaryForm form_;
};

inline ParametricFamily parametric_family(const BinaryForm& p) {
  return ParametricFamily(p);
}

}  // namespace waring
