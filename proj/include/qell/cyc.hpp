#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace qell {

// Q(zeta) for a primitive fifth root of unity, with basis 1, z, z^2, z^3
// and z^4 = -1 - z - z^2 - z^3.
struct CycQ {
  std::array<mpq_class, 4> c{};

  CycQ() = default;
  CycQ(const mpq_class& q) { c[0] = q; }  // NOLINT(google-explicit-constructor)
  CycQ(int n) { c[0] = n; }               // NOLINT(google-explicit-constructor)

  static CycQ zeta(int e = 1) {
    CycQ z;
    e %= 5;
    if (e < 0) e += 5;
    if (e < 4)
      z.c[static_cast<size_t>(e)] = 1;
    else
      z.c = {-1, -1, -1, -1};
    return z;
  }

  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }

  friend CycQ operator+(const CycQ& a, const CycQ& b) {
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }

  friend CycQ operator-(const CycQ& a, const CycQ& b) {
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }

  friend CycQ operator-(const CycQ& a) {
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
    return r;
  }

  CycQ& operator+=(const CycQ& o) { return *this = *this + o; }
  CycQ& operator-=(const CycQ& o) { return *this = *this - o; }

  friend CycQ operator*(const CycQ& a, const CycQ& b) {
    std::array<mpq_class, 5> raw{};  // coefficients of z^0 .. z^4
    for (int i = 0; i < 4; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 4; ++j) raw[(i + j) % 5] += a.c[i] * b.c[j];
    }
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c[i] = raw[i] - raw[4];
    return r;
  }

  CycQ& operator*=(const CycQ& o) { return *this = *this * o; }

  friend bool operator==(const CycQ& a, const CycQ& b) { return a.c == b.c; }
  friend bool operator!=(const CycQ& a, const CycQ& b) { return !(a == b); }

  // Galois twist z -> z^k.
  CycQ conj(int k) const {
    CycQ r;
    for (int i = 0; i < 4; ++i) {
      if (c[i] == 0) continue;
      CycQ zi = zeta(i * k);
      for (int j = 0; j < 4; ++j) r.c[j] += c[i] * zi.c[j];
    }
    return r;
  }
};

inline bool kz(const CycQ& x) { return x.is_zero(); }

inline CycQ inv(const CycQ& x) {
  // Solve (mult by x) v = 1 by elimination on the 4x4 rational matrix.
  std::array<std::array<mpq_class, 5>, 4> m;
  for (int j = 0; j < 4; ++j) {
    CycQ col = x * CycQ::zeta(j);
    for (int i = 0; i < 4; ++i) m[i][j] = col.c[i];
    m[static_cast<size_t>(j)][4] = (j == 0) ? 1 : 0;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int row = col; row < 4; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::domain_error("CycQ: inverse of zero divisor");
    std::swap(m[col], m[static_cast<size_t>(piv)]);
    for (int row = 0; row < 4; ++row) {
      if (row == col || m[row][col] == 0) continue;
      mpq_class f = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
    }
  }
  CycQ r;
  for (int i = 0; i < 4; ++i) r.c[i] = m[i][4] / m[i][i];
  return r;
}

inline CycQ operator/(const CycQ& a, const CycQ& b) { return a * inv(b); }

inline CycQ zero_like(const CycQ&) { return CycQ(0); }
inline CycQ one_like(const CycQ&) { return CycQ(1); }

inline std::string to_string(const CycQ& x) {
  std::string out;
  static const char* names[4] = {"", "z", "z^2", "z^3"};
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] == 0) continue;
    mpq_class a = x.c[i] > 0 ? x.c[i] : mpq_class(-x.c[i]);
    out += out.empty() ? (x.c[i] > 0 ? "" : "-") : (x.c[i] > 0 ? " + " : " - ");
    if (i == 0)
      out += a.get_str();
    else if (a == 1)
      out += names[i];
    else
      out += a.get_str() + std::string("*") + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace qell
