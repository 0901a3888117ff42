#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

// Base of every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector shape mismatch (non-square determinant input, wrong
// system dimensions, wrong point length).
struct dimension_error : error {
  using error::error;
};

// The zero polynomial has no degree and no decomposition.
struct zero_form_error : error {
  zero_form_error() : error("form is identically zero") {}
};

// Input text mixes total degrees.
struct homogeneity_error : error {
  using error::error;
};

// Syntax error in polynomial text; position is a 0-based byte offset
// into the input.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct parity_error : error {
  using error::error;
};

// Elimination found no usable pivot: the system matrix is rank-deficient.
struct singular_system_error : error {
  using error::error;
};

// The leftover row of an overdetermined system has a nonzero residual.
struct inconsistent_system_error : error {
  using error::error;
};

// A supplied parameter point fails the admissibility conditions;
// `violations` lists each failed condition in human-readable form.
struct membership_error : error {
  membership_error(const std::string& what, std::vector<std::string> violations)
      : error(what), violations(std::move(violations)) {}
  std::vector<std::string> violations;
};

// A grid search exhausted every candidate point without an admissible one.
struct no_valid_point_error : error {
  using error::error;
};

}  // namespace waring
