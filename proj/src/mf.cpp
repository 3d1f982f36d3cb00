#include "qell/mf.hpp"

#include "qell/level_maps.hpp"

namespace qell {

// c4^a c6^b Delta^c with b <= 1 (c6^2 = c4^3 - 1728 Delta), 4a + 6b + 12c = w.
std::vector<Poly> mf_sl2_basis(long w) {
  RingPtr R = ring_MF1();
  std::vector<Poly> out;
  for (int b = 0; b <= 1; ++b)
    for (long c = 0; 12 * c + 6 * b <= w; ++c) {
      long rest = w - 6 * b - 12 * c;
      if (rest % 4 != 0) continue;
      out.push_back(Poly::gen(R, "c4", static_cast<int>(rest / 4)) *
                    Poly::gen(R, "c6", b) *
                    Poly::gen(R, "Delta", static_cast<int>(c)));
    }
  return out;
}

// a1^i a3^j with i + 3j = w and i + j even (the [-1]-invariants).
std::vector<Poly> mf_level3_basis(long w) {
  RingPtr R = ring_B3();
  std::vector<Poly> out;
  for (long j = 0; 3 * j <= w; ++j) {
    long i = w - 3 * j;
    if ((i + j) % 2 != 0) continue;
    out.push_back(Poly::gen(R, "a1", static_cast<int>(i)) *
                  Poly::gen(R, "a3", static_cast<int>(j)));
  }
  return out;
}

// b2^i b4^e delta^j with e <= 1 (b4^2 = b2^2 delta - 4 delta^2).
std::vector<Poly> mf_level5_basis(long w) {
  RingPtr R = ring_G5();
  std::vector<Poly> out;
  if (w % 2 != 0) return out;
  for (int e = 0; e <= 1; ++e)
    for (long j = 0; 4 * j + 4 * e <= w; ++j)
      out.push_back(Poly::gen(R, "b2", static_cast<int>((w - 4 * e - 4 * j) / 2)) *
                    Poly::gen(R, "b4", e) *
                    Poly::gen(R, "delta", static_cast<int>(j)));
  return out;
}

Poly sl2_in_A(const Poly& p) {
  if (p.ring != ring_MF1()) throw std::invalid_argument("sl2_in_A: wrong ring");
  Curve<Poly> E = universal_curve();
  RingPtr A = ring_A();
  return eval_poly(p, {E.c4(), E.c6(), E.disc()}, Poly::zero(A),
                   [&](const mpq_class& c) { return Poly::constant(A, c); });
}

}  // namespace qell
