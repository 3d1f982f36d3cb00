#pragma once

#include <vector>

#include "qell/poly.hpp"

namespace qell {

// Monomial bases for the weight-w modular forms of each level.
std::vector<Poly> mf_sl2_basis(long w);     // in ring_MF1: c4^a c6^b D^c, b <= 1
std::vector<Poly> mf_level3_basis(long w);  // in ring_B3: a1^i a3^j, i+j even
std::vector<Poly> mf_level5_basis(long w);  // in ring_G5: b2^i b4^e d^j, e <= 1

// Substitute the universal Weierstrass expressions for c4, c6, Delta.
Poly sl2_in_A(const Poly& p);

}  // namespace qell
