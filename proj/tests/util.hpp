#pragma once

#include <random>

#include <gmpxx.h>

namespace qell::testutil {

inline std::mt19937_64 rng(uint64_t seed = 0xC0FFEE) {
  return std::mt19937_64(seed);
}

inline long rand_int(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

// Small nonzero-denominator rational, numerators in [-9, 9].
inline mpq_class rand_q(std::mt19937_64& g, bool nonzero = false) {
  for (;;) {
    long num = rand_int(g, -9, 9);
    long den = rand_int(g, 1, 6);
    if (nonzero && num == 0) continue;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
}

}  // namespace qell::testutil
