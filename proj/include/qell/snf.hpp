#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qell {

struct ZMat {
  size_t m = 0, n = 0;
  std::vector<mpz_class> a;

  ZMat() = default;
  ZMat(size_t rows, size_t cols) : m(rows), n(cols), a(rows * cols) {}

  mpz_class& at(size_t i, size_t j) { return a[i * n + j]; }
  const mpz_class& at(size_t i, size_t j) const { return a[i * n + j]; }
};

struct QMat {
  size_t m = 0, n = 0;
  std::vector<mpq_class> a;

  QMat() = default;
  QMat(size_t rows, size_t cols) : m(rows), n(cols), a(rows * cols) {}

  mpq_class& at(size_t i, size_t j) { return a[i * n + j]; }
  const mpq_class& at(size_t i, size_t j) const { return a[i * n + j]; }
};

// Diagonalization D = R A C by unimodular row and column operations.
// Only the pieces needed by callers are exposed: the diagonal, the
// transformed right hand side, and the column transform.
struct ZDiag {
  std::vector<mpz_class> d;  // min(m, n) diagonal entries, zeros included
  ZMat col;                  // C, so solutions pull back through it
  std::vector<mpz_class> rhs;  // R b when a right hand side was supplied
};

ZDiag zdiagonalize(ZMat A, std::vector<mpz_class> b = {});

// Solves A x = b over Z[1/p : p in primes]. Returns a solution whose
// denominators involve only the given primes, or nothing if none exists.
std::optional<std::vector<mpq_class>> solve_localized(
    const ZMat& A, const std::vector<mpz_class>& b,
    const std::vector<int>& primes);

// Saturated basis of the integer kernel of A, as columns.
std::vector<std::vector<mpz_class>> kernel_basis(const ZMat& A);

// Isomorphism type of a finitely generated abelian group, 2-locally.
struct AbGroup {
  long free_rank = 0;
  std::vector<long> two_exponents;  // one entry per Z/2^e summand, sorted

  friend bool operator==(const AbGroup& x, const AbGroup& y) {
    return x.free_rank == y.free_rank && x.two_exponents == y.two_exponents;
  }
};

// ker(f) / im(g) for integer matrices with f g = 0, reported 2-locally
// (odd torsion is discarded; the ambient modules are free).
AbGroup homology_quotient(const ZMat& f, const ZMat& g);

// Exact solution of A x = b over the rationals, if one exists.
std::optional<std::vector<mpq_class>> solve_rational(
    QMat A, std::vector<mpq_class> b);

// Decides r in image([Y | diag(2^moduli)]) over the 2-local integers;
// entries of Y and r must have odd denominators. This is solvability of
// the congruence system Y c = r with row s read modulo 2^moduli[s].
bool congruence_solvable(QMat Y, std::vector<long> moduli,
                         std::vector<mpq_class> r);

}  // namespace qell
