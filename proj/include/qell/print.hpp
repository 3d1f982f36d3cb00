#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qell/poly.hpp"

namespace qell {

inline std::string mono_str(const RingPtr& ring, const Exp& e,
                            const std::vector<std::string>* aliases = nullptr) {
  std::string s;
  for (size_t i = 0; i < ring->gens.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += aliases ? (*aliases)[i] : ring->gens[i].name;
    if (e[i] != 1) {
      s += "^";
      s += std::to_string(e[i]);
    }
  }
  return s;
}

// Terms ordered by weight, then lexicographically, heaviest first.
template <class K>
std::vector<std::pair<Exp, K>> sorted_terms(const PolyT<K>& p) {
  std::vector<std::pair<Exp, K>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    long wa = p.ring->weight(a.first), wb = p.ring->weight(b.first);
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  return ts;
}

inline std::string coeff_str(const mpq_class& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

inline std::string poly_str(const Poly& p,
                            const std::vector<std::string>* aliases = nullptr) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : sorted_terms(p)) {
    mpq_class a = c > 0 ? c : mpq_class(-c);
    std::string m = mono_str(p.ring, e, aliases);
    if (out.empty())
      out += c > 0 ? "" : "-";
    else
      out += c > 0 ? " + " : " - ";
    if (m.empty())
      out += coeff_str(a);
    else if (a == 1)
      out += m;
    else
      out += coeff_str(a) + "*" + m;
  }
  return out;
}

}  // namespace qell
