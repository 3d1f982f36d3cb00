#pragma once

#include <string>

#include "qell/poly.hpp"

namespace qell {

// Parses "+ - * ^ ( )" expressions over the ring's generators with rational
// literals like 7 or -4/27. Exponents are integers, negative only on units.
// Multiplication is always explicit. Inverse of poly_str.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace qell
