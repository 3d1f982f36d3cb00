#include "qell/ring.hpp"

#include <stdexcept>

namespace qell {

int Ring::gen_index(const std::string& g) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == g) return static_cast<int>(i);
  return -1;
}

Exp Ring::exp(const std::string& g, int e) const {
  int i = gen_index(g);
  if (i < 0) throw std::invalid_argument(name + ": no generator " + g);
  return exp_unit(i, static_cast<int16_t>(e));
}

long Ring::weight(const Exp& x) const {
  long w = 0;
  for (size_t i = 0; i < gens.size(); ++i) w += long(x[i]) * gens[i].weight;
  return w;
}

bool Ring::exp_valid(const Exp& x) const {
  for (int i = 0; i < MAX_GENS; ++i) {
    if (x[i] == 0) continue;
    if (static_cast<size_t>(i) >= gens.size()) return false;
    if (x[i] < 0 && !gens[i].invertible) return false;
  }
  return true;
}

RingPtr make_ring(std::string name, std::vector<Gen> gens,
                  std::vector<int> localized_primes) {
  if (gens.size() > MAX_GENS)
    throw std::invalid_argument("make_ring: too many generators");
  auto r = std::make_shared<Ring>();
  r->name = std::move(name);
  r->gens = std::move(gens);
  r->localized_primes = std::move(localized_primes);
  return r;
}

RingPtr ring_A() {
  static RingPtr r = make_ring(
      "A", {{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}, {"a6", 6}});
  return r;
}

RingPtr ring_Gamma() {
  static RingPtr r = make_ring("Gamma", {{"a1", 1},
                                         {"a2", 2},
                                         {"a3", 3},
                                         {"a4", 4},
                                         {"a6", 6},
                                         {"r", 2},
                                         {"s", 1},
                                         {"t", 3}});
  return r;
}

RingPtr ring_GammaGamma() {
  static RingPtr r = make_ring("GammaGamma", {{"a1", 1},
                                              {"a2", 2},
                                              {"a3", 3},
                                              {"a4", 4},
                                              {"a6", 6},
                                              {"r", 2},
                                              {"s", 1},
                                              {"t", 3},
                                              {"r'", 2},
                                              {"s'", 1},
                                              {"t'", 3}});
  return r;
}

RingPtr ring_B3() {
  static RingPtr r = make_ring("B3", {{"a1", 1}, {"a3", 3}}, {3});
  return r;
}

RingPtr ring_B5() {
  static RingPtr r = make_ring("B5", {{"a1", 1}, {"u", 1, true}}, {5});
  return r;
}

RingPtr ring_R5() {
  static RingPtr r = make_ring("R5", {{"x", 2}, {"y", 2}}, {5});
  return r;
}

RingPtr ring_MF1() {
  static RingPtr r =
      make_ring("MF1", {{"c4", 4}, {"c6", 6}, {"Delta", 12}});
  return r;
}

RingPtr ring_G5() {
  static RingPtr r =
      make_ring("G5", {{"b2", 2}, {"b4", 4}, {"delta", 4}}, {5});
  return r;
}

}  // namespace qell
