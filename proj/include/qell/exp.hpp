#pragma once

#include <array>
#include <cstdint>

namespace qell {

// Exponent vector of a monomial. Rings never need more than 11 generators
// (the flattened double tensor ring is the largest), so a fixed-width array
// keeps maps cheap and comparisons branch-free.
inline constexpr int MAX_GENS = 12;
using Exp = std::array<int16_t, MAX_GENS>;

inline Exp exp_zero() { return Exp{}; }

inline Exp exp_unit(int i, int16_t e = 1) {
  Exp x{};
  x[static_cast<size_t>(i)] = e;
  return x;
}

inline Exp operator+(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < MAX_GENS; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

inline Exp operator-(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < MAX_GENS; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
  return r;
}

inline Exp operator*(int n, const Exp& a) {
  Exp r;
  for (int i = 0; i < MAX_GENS; ++i) r[i] = static_cast<int16_t>(n * a[i]);
  return r;
}

inline bool is_zero(const Exp& a) {
  for (int i = 0; i < MAX_GENS; ++i)
    if (a[i] != 0) return false;
  return true;
}

}  // namespace qell
