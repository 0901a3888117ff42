#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "waring/binform.hpp"
#include "waring/delta.hpp"

namespace waring {

// How a parameter vector was chosen: the named coefficient bounds feeding
// m, the separation values checked nonzero (delta = 1 only), and how many
// times the candidate had to be enlarged because a check failed (expected
// zero; the bounds normally land past every root).
struct SelectionTrace {
  std::vector<std::pair<std::string, Rational>> bounds;
  Rational m;
  std::vector<std::pair<std::string, Rational>> psi_checks;
  unsigned escalations = 0;
};

// Parameter vector of length nu + 1. The first nu entries are the chosen
// grid point; the final slot is R = the forced extra root when delta = 1,
// or a placeholder 0 when delta = 0 (the last system column degenerates
// to the pure y^d form).
struct SuitableParams {
  Parity parity;
  std::vector<Rational> s;
  int delta;
  SelectionTrace trace;
};

// Parameter selection for odd degree d >= 3: prefix slots pinned to
// 1, ..., nu-1, the free slot pushed past every relevant coefficient bound,
// then verified against the separation conditions and enlarged if needed.
SuitableParams wd_parameters_odd(const BinaryForm& p);

// Even counterpart, d >= 2; the free slot is the unpaired first one.
SuitableParams wd_parameters_even(const BinaryForm& p);

struct SuitabilityReport {
  bool ok;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
};

// Checks a full parameter vector (length nu + 1, final slot R or 0).
// strict additionally requires a nonzero unpaired first slot for even
// degree and separates R from both signs of it; non-strict accepts
// everything the decomposition theory itself needs.
SuitabilityReport is_suitable(const BinaryForm& p, const std::vector<Rational>& s,
                              bool strict);

// Literal membership test for a grid point (length nu) in the good set:
// the top cofactor must not vanish (Omega), no paired slot may be zero (A),
// the forced root R must stay away from every column value (B), and the
// slots must be sign-distinct (D). Reports every violated condition.
SuitabilityReport in_G(const BinaryForm& p, const std::vector<Rational>& point);

}  // namespace waring
