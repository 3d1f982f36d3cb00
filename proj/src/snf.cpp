#include "qell/snf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qell/rational.hpp"

namespace qell {
namespace {

void row_sub(ZMat& A, std::vector<mpz_class>& b, size_t i, size_t k,
             const mpz_class& q) {
  for (size_t j = 0; j < A.n; ++j) A.at(i, j) -= q * A.at(k, j);
  if (!b.empty()) b[i] -= q * b[k];
}

void row_swap(ZMat& A, std::vector<mpz_class>& b, size_t i, size_t k) {
  for (size_t j = 0; j < A.n; ++j) std::swap(A.at(i, j), A.at(k, j));
  if (!b.empty()) std::swap(b[i], b[k]);
}

void col_sub(ZMat& A, ZMat& C, size_t j, size_t k, const mpz_class& q) {
  for (size_t i = 0; i < A.m; ++i) A.at(i, j) -= q * A.at(i, k);
  for (size_t i = 0; i < C.m; ++i) C.at(i, j) -= q * C.at(i, k);
}

void col_swap(ZMat& A, ZMat& C, size_t j, size_t k) {
  for (size_t i = 0; i < A.m; ++i) std::swap(A.at(i, j), A.at(i, k));
  for (size_t i = 0; i < C.m; ++i) std::swap(C.at(i, j), C.at(i, k));
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ZDiag zdiagonalize(ZMat A, std::vector<mpz_class> b) {
  size_t m = A.m, n = A.n;
  ZDiag out;
  out.col = ZMat(n, n);
  for (size_t i = 0; i < n; ++i) out.col.at(i, i) = 1;

  size_t steps = std::min(m, n);
  for (size_t k = 0; k < steps; ++k) {
    // Seed with the smallest nonzero entry of the trailing block.
    size_t pi = k, pj = k;
    mpz_class best = 0;
    for (size_t i = k; i < m; ++i)
      for (size_t j = k; j < n; ++j) {
        const mpz_class& v = A.at(i, j);
        if (v == 0) continue;
        mpz_class av = abs(v);
        if (best == 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != k) row_swap(A, b, pi, k);
    if (pj != k) col_swap(A, out.col, pj, k);

    bool again = true;
    while (again) {
      again = false;
      for (size_t i = k + 1; i < m; ++i) {
        if (A.at(i, k) == 0) continue;
        row_sub(A, b, i, k, fdiv(A.at(i, k), A.at(k, k)));
        if (A.at(i, k) != 0) {
          row_swap(A, b, i, k);
          again = true;
        }
      }
      for (size_t j = k + 1; j < n; ++j) {
        if (A.at(k, j) == 0) continue;
        col_sub(A, out.col, j, k, fdiv(A.at(k, j), A.at(k, k)));
        if (A.at(k, j) != 0) {
          col_swap(A, out.col, j, k);
          again = true;
        }
      }
    }
  }

  out.d.resize(steps);
  for (size_t k = 0; k < steps; ++k) out.d[k] = A.at(k, k);
  out.rhs = std::move(b);
  // Zero rows beyond the diagonal must have zero right hand side for a
  // system to be consistent; callers check out.rhs themselves.
  return out;
}

std::optional<std::vector<mpq_class>> solve_localized(
    const ZMat& A, const std::vector<mpz_class>& b,
    const std::vector<int>& primes) {
  assert(b.size() == A.m);
  ZDiag dg = zdiagonalize(A, b);
  size_t rank = 0;
  while (rank < dg.d.size() && dg.d[rank] != 0) ++rank;
  for (size_t i = rank; i < A.m; ++i)
    if (dg.rhs[i] != 0) return std::nullopt;

  std::vector<mpq_class> y(A.n, 0);
  for (size_t i = 0; i < rank; ++i) {
    mpz_class d = dg.d[i];
    for (int p : primes) {
      mpz_class pz = p;
      while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) d /= pz;
    }
    if (!mpz_divisible_p(dg.rhs[i].get_mpz_t(), d.get_mpz_t()))
      return std::nullopt;
    y[i] = mpq_class(dg.rhs[i]) / mpq_class(dg.d[i]);
    y[i].canonicalize();
  }

  std::vector<mpq_class> x(A.n, 0);
  for (size_t j = 0; j < A.n; ++j) {
    for (size_t i = 0; i < A.n; ++i)
      if (y[i] != 0) x[j] += mpq_class(dg.col.at(j, i)) * y[i];
    x[j].canonicalize();
  }
  return x;
}

std::vector<std::vector<mpz_class>> kernel_basis(const ZMat& A) {
  ZDiag dg = zdiagonalize(A);
  std::vector<std::vector<mpz_class>> out;
  for (size_t j = 0; j < A.n; ++j) {
    bool zero_col = j >= dg.d.size() || dg.d[j] == 0;
    if (!zero_col) continue;
    std::vector<mpz_class> v(A.n);
    for (size_t i = 0; i < A.n; ++i) v[i] = dg.col.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

AbGroup homology_quotient(const ZMat& f, const ZMat& g) {
  assert(f.n == g.m);
  auto ker = kernel_basis(f);
  size_t k = ker.size();

  // Coordinates of each column of g in the saturated kernel basis.
  ZMat K(f.n, k);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < f.n; ++i) K.at(i, j) = ker[j][i];

  ZMat Z(k, g.n);
  for (size_t c = 0; c < g.n; ++c) {
    std::vector<mpz_class> col(g.m);
    for (size_t i = 0; i < g.m; ++i) col[i] = g.at(i, c);
    auto z = solve_localized(K, col, {});
    if (!z) throw std::logic_error("homology_quotient: image not in kernel");
    for (size_t i = 0; i < k; ++i) {
      assert((*z)[i].get_den() == 1);
      Z.at(i, c) = (*z)[i].get_num();
    }
  }

  ZDiag dg = zdiagonalize(std::move(Z));
  AbGroup out;
  long rank = 0;
  for (const auto& d : dg.d) {
    if (d == 0) continue;
    ++rank;
    long e = v2(d);
    if (e > 0) out.two_exponents.push_back(e);
  }
  out.free_rank = static_cast<long>(k) - rank;
  std::sort(out.two_exponents.begin(), out.two_exponents.end());
  return out;
}

bool congruence_solvable(QMat Y, std::vector<long> moduli,
                         std::vector<mpq_class> r) {
  size_t rows = Y.m, n = Y.n;
  assert(moduli.size() == rows && r.size() == rows);
  QMat M(rows, n + rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) M.at(i, j) = Y.at(i, j);
    M.at(i, n + i) = mpq_class(pow2(static_cast<unsigned long>(
        std::max(0L, moduli[i]))));
  }

  for (size_t k = 0; k < rows; ++k) {
    size_t pi = k, pj = k;
    long best = V2_INF;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < M.n; ++j) {
        long v = v2(M.at(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    assert(best != V2_INF);  // slack block keeps full row rank
    if (pi != k) {
      for (size_t j = 0; j < M.n; ++j) std::swap(M.at(k, j), M.at(pi, j));
      std::swap(r[k], r[pi]);
    }
    if (pj != k)
      for (size_t i = 0; i < rows; ++i) std::swap(M.at(i, k), M.at(i, pj));

    for (size_t i = k + 1; i < rows; ++i) {
      if (M.at(i, k) == 0) continue;
      mpq_class f = M.at(i, k) / M.at(k, k);
      for (size_t j = k; j < M.n; ++j) M.at(i, j) -= f * M.at(k, j);
      r[i] -= f * r[k];
    }
    for (size_t j = k + 1; j < M.n; ++j) {
      if (M.at(k, j) == 0) continue;
      mpq_class f = M.at(k, j) / M.at(k, k);
      for (size_t i = k; i < rows; ++i) M.at(i, j) -= f * M.at(i, k);
    }
  }

  for (size_t i = 0; i < rows; ++i)
    if (v2(r[i]) < v2(M.at(i, i))) return false;
  return true;
}

std::optional<std::vector<mpq_class>> solve_rational(QMat A,
                                                     std::vector<mpq_class> b) {
  assert(b.size() == A.m);
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < A.n && row < A.m; ++col) {
    size_t p = row;
    while (p < A.m && A.at(p, col) == 0) ++p;
    if (p == A.m) continue;
    if (p != row) {
      for (size_t j = col; j < A.n; ++j) std::swap(A.at(row, j), A.at(p, j));
      std::swap(b[row], b[p]);
    }
    for (size_t i = 0; i < A.m; ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      mpq_class f = A.at(i, col) / A.at(row, col);
      for (size_t j = col; j < A.n; ++j) A.at(i, j) -= f * A.at(row, j);
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < A.m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<mpq_class> x(A.n, 0);
  for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i] / A.at(i, pivot_col[i]);
  return x;
}

}  // namespace qell
