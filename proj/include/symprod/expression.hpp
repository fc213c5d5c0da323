#pragma once

#include <string>
#include <string_view>

#include "symprod/orbifold_ring.hpp"

namespace symprod {

// Term literals: `coeff * id@p (x) id@q ... ; (cycles)`, summed with + or -.
// `@p` names the block of sigma containing point p (1-based); every block
// must be named exactly once. The coefficient and its `*` are optional.
// Throws ExpressionError carrying the column of the offending token.
RingElement parse_ring_element(std::string_view text, const AlgebraPtr& algebra, int n);

// Canonical rendering: sectors in permutation order, terms in key order,
// each factor labelled by the smallest point of its block. Zero prints "0".
std::string format_ring_element(const RingElement& a);

}  // namespace symprod
