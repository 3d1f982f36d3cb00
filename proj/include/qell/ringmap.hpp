#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qell/poly.hpp"

namespace qell {

// Ring homomorphism determined by generator images. An optional coefficient
// transform supports semilinear maps (Galois twists on cyclotomic scalars).
template <class K = mpq_class>
struct RingMapT {
  RingPtr src, dst;
  std::vector<PolyT<K>> images;
  std::function<K(const K&)> coeff_map;  // identity when empty

  PolyT<K> operator()(const PolyT<K>& p) const {
    if (p.ring != src)
      throw std::invalid_argument("ring map applied to wrong ring");
    PolyT<K> out(dst);
    for (const auto& [e, c] : p.terms) {
      PolyT<K> term =
          PolyT<K>::constant(dst, coeff_map ? coeff_map(c) : c);
      for (size_t i = 0; i < src->gens.size(); ++i)
        if (e[i] != 0) term *= images[i].pow(e[i]);
      out += term;
    }
    return out;
  }

  friend RingMapT compose(const RingMapT& g, const RingMapT& f) {
    if (f.dst != g.src)
      throw std::invalid_argument("compose: rings do not match");
    RingMapT h{f.src, g.dst, {}, {}};
    for (const auto& im : f.images) h.images.push_back(g(im));
    if (f.coeff_map || g.coeff_map)
      throw std::invalid_argument("compose: semilinear maps not supported");
    return h;
  }
};

using RingMap = RingMapT<mpq_class>;

// Identity-on-name map between rings sharing generator names (inclusion of
// a subring or relabeling); generators absent from dst are an error.
template <class K = mpq_class>
RingMapT<K> name_map(const RingPtr& src, const RingPtr& dst) {
  RingMapT<K> m{src, dst, {}, {}};
  for (const auto& g : src->gens)
    m.images.push_back(PolyT<K>::gen(dst, g.name));
  return m;
}

}  // namespace qell
