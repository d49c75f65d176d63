#pragma once

#include <stdexcept>

namespace linkinv {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands disagree on variable count, or an image/vector has the wrong arity.
struct arity_error : error {
  using error::error;
};

// exact_div was handed a non-divisor. Downstream code relies on divisibility
// that is guaranteed by theory, so this escaping is a bug detector.
struct non_divisible_error : error {
  using error::error;
};

// Input outside the mathematical domain of an operation (non-coprime torus
// knot parameters, link closure where a knot is required, ...).
struct domain_error : error {
  using error::error;
};

// Enumeration would exceed the configured budget.
struct budget_error : error {
  using error::error;
};

// Malformed textual or JSON input.
struct parse_error : error {
  using error::error;
};

// Both slope coefficients vanish: the fiber class misses this component.
struct fiber_disjoint_error : error {
  using error::error;
};

}  // namespace linkinv
