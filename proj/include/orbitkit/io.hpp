#pragma once

// Line-oriented algebra definition files:
//
//   # comment
//   dim 3
//   basis x y z
//   bracket x y = z
//   bracket x z = 2*y - 1/2*z
//
// Omitted brackets are zero. See docs/algebra-format.md for the grammar.

#include <string>
#include <string_view>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

LieAlgebra parse_algebra(std::string_view text);

/// Normal form: one `bracket a b` line per nonzero [a,b] with a before b in basis order.
std::string emit_algebra(const LieAlgebra& g);

}  // namespace orbitkit
