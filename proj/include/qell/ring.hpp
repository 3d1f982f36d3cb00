#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qell/exp.hpp"

namespace qell {

struct Gen {
  std::string name;
  int weight = 0;
  bool invertible = false;
};

// Descriptor of a graded polynomial ring (a few generators may be inverted,
// and a few small primes may appear in denominators).
struct Ring {
  std::string name;
  std::vector<Gen> gens;
  std::vector<int> localized_primes;  // odd primes allowed in denominators

  int gen_index(const std::string& g) const;
  Exp exp(const std::string& g, int e = 1) const;
  long weight(const Exp& x) const;
  bool exp_valid(const Exp& x) const;  // negative exponents only on units
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::string name, std::vector<Gen> gens,
                  std::vector<int> localized_primes = {});

// The coefficient ring of the universal Weierstrass curve and its extensions
// by the coordinates (r, s, t) of strict isomorphisms.
RingPtr ring_A();            // a1 a2 a3 a4 a6
RingPtr ring_Gamma();        // a1 .. a6, r s t
RingPtr ring_GammaGamma();   // a1 .. a6, r s t, r' s' t'

// Base rings of the two level structures and related coefficient rings.
RingPtr ring_B3();   // Z[1/3][a1, a3]
RingPtr ring_B5();   // Z[1/5][a1, u, 1/u]
RingPtr ring_R5();   // Z[1/5][x, y], x y of topological degree 2
RingPtr ring_MF1();  // c4 c6 Delta
RingPtr ring_G5();   // Z[1/5][b2, b4, delta], b4^2 reducible

// Index of a1 in ring_A and its extensions.
inline constexpr int A1 = 0;

}  // namespace qell
