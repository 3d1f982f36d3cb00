#pragma once

#include <string>
#include <vector>

#include "qell/poly.hpp"
#include "qell/ringmap.hpp"

namespace qell {

// The two cosimplicial coface pairs out of A that feed the total complex:
// the Weierstrass line A -> Gamma and the level-ell line A -> B.
struct Tower {
  long ell = 0;
  RingPtr A, Gamma, B;
  RingMap eta_L, eta_R;  // Weierstrass pair
  RingMap fstar, qstar;  // level pair
};

const Tower& tower(long ell);

// x0, x1, x2: the standard lifts of v2, v2^2, v2^4 modulo (2, v1).
const Poly& v2_lift(int i);

// Total d0 of an element of A, split into its two components.
struct DPair {
  Poly weier;  // eta_R - eta_L, lands in Gamma
  Poly level;  // q* - f*, lands in B
};

DPair d_total(const Tower& t, const Poly& x);

// x^p - y^p expanded as (x - y) * sum_i x^i y^{p-1-i}; returns zero without
// raising anything to the p-th power when x == y.
Poly pow_diff(const Poly& x, const Poly& y, long p);

constexpr long kNoTrunc = -1;

// x^p with every intermediate product reduced mod (2^k, v1^j); the ideal is
// monomial in the coefficients and v1, so reducing early is harmless.
// j < 0 disables the v1 truncation.
Poly pow_reduced(const Poly& x, long p, unsigned long k, long j);
Poly pow_diff_reduced(const Poly& x, const Poly& y, long p, unsigned long k,
                      long j);

// D(base^p) with both components reduced mod (2^k, v1^j) throughout.
DPair d_power_reduced(const Tower& t, const Poly& base, long p,
                      unsigned long k, long j);

// D(pre * base^p) by the Leibniz rule, exact. eta_R(base)^p collapses to the
// plain power of base whenever eta_R fixes base (the discriminant does).
DPair d_scaled_power(const Tower& t, const Poly& pre, const Poly& base,
                     long p);
DPair d_power(const Tower& t, const Poly& base, long p);

bool congruent(const Poly& x, const Poly& rhs, unsigned long k,
               long j = kNoTrunc);

// Element of the (2, v1)-torsion module: num / (2^k v1^j), stored with num
// already reduced mod (2^k, v1^j). An empty numerator is the zero class.
struct Frac {
  Poly num;
  unsigned long k = 0;
  long j = 0;

  Frac() = default;
  Frac(Poly n, unsigned long k_, long j_);

  bool is_zero() const { return num.is_zero(); }
};

Frac frac_add(const Frac& a, const Frac& b);
Frac frac_sub(const Frac& a, const Frac& b);

struct DFracPair {
  Frac weier, level;
};

DFracPair dfrac_add(const DFracPair& a, const DFracPair& b);

// Total differential of num / (2^k v1^j). The Weierstrass component expands
// 1/eta_R(v1)^j 2-adically: with S = sum_{m<k} C(-j,m) (2s)^m v1^{k-1-m},
//   D = (eta_R(num) S - num v1^{k-1}) / (2^k v1^{j+k-1}),
// and the level component is just (q* - f*)(num) / (2^k v1^j).
DFracPair d_frac(const Tower& t, const Poly& num, unsigned long k, long j);

// D(base^p / (2^k v1^j)) without ever expanding base^p integrally: the
// eta_R(base^p) - base^p part goes through pow_diff_reduced, and base^p
// itself is only needed mod (2^k, v1^{j+k-1}) against the binomial tail
// S - v1^{k-1}, which often vanishes mod 2^k and then costs nothing.
DFracPair d_frac_power(const Tower& t, const Poly& base, long p,
                       unsigned long k, long j);

// One claimed leading slice of a displayed expansion: the digit'th 2-adic
// digit, at exactly v1^jexp, with head the cofactor of v1^jexp mod 2.
struct Slice {
  unsigned long digit;
  long jexp;
  Poly head;
};

// Claimed slices of both components of a displayed total differential.
struct SumClaim {
  std::vector<Slice> weier, level;
};

// Verifies a displayed expansion "head terms + trailing dots per digit":
// within each component, every digit up to that component's last claimed
// digit matches slice by slice through its last claimed v1 exponent
// (unclaimed slots below that vanish), later v1 powers and higher digits
// are unconstrained, and a component with no claims at all must vanish to
// the full displayed depth.
bool check_sum(const DPair& d, const SumClaim& claim);

// Same slice discipline for a displayed element of a ring mod 2^k.
bool check_element_leading(const Poly& x, unsigned long k,
                           const std::vector<Slice>& slices);

struct FracTerm {
  bool level;  // which component the head lives in
  Frac value;
};

// Displayed fraction identities: exact equality, or equality down to the
// last listed head with everything below it (in the lexicographic order on
// 2-power then pole) left free.
bool check_frac_exact(const DFracPair& d, const std::vector<FracTerm>& heads);
bool check_frac_leading(const DFracPair& d,
                        const std::vector<FracTerm>& heads);

struct Check {
  std::string name;
  bool pass = false;
};

// The displayed differential computations of the v1-Bockstein analysis,
// instantiated over n <= 4, k <= 5, m in {1, 3}.
std::vector<Check> display_checks(long ell);

// The follow-up displays used to sharpen the divisibility bounds, on the
// parameter ranges where their printed leading terms are the true ones.
std::vector<Check> display_checks_extended();

// v2(3^t - 1): 1 for odd t, v2(t) + 2 for even t.
long two_power_bound(long t);

// Largest v1 pole supported over a3^{m 2^n} at the first 2-divisibility
// level: 1, 2, then 3 * 2^{n-1}. Negative depth returns 0 (empty range).
long pole_bound(long n);

// The level-5 analogue: 1, 2, then 2^{n+1}.
long q5_pole_bound(long n);

struct BetaIndex {
  long i, j, k;
  auto operator<=>(const BetaIndex&) const = default;
};

// Divisibility table of the beta family: (i, j, k) records that
// a3^i / (2^k v1^j) is a permanent cycle bound. The reference table comes
// from the closed-form sphere answer, the Q(3) table from the Bockstein
// differential pattern; the computation says they agree.
std::vector<BetaIndex> beta_table_reference(long imax, long jmax);
std::vector<BetaIndex> beta_table_q3(long imax, long jmax);

// k = 1 rows of the Q(5) table (i >= 1 families only).
std::vector<BetaIndex> beta_table_q5_k1(long imax);
std::vector<BetaIndex> k1_slice(const std::vector<BetaIndex>& table);

// The depth-3 cocycle witnessing the top divisibility of a3^{4m}/v1^2:
// D(x2^m / 8 v1^2 + x0^{4m+1} / 2 v1^5 + a3^{4m-3}(a4+a2^2)^2 / 2 v1) = 0.
bool witness_cocycle(long m);

// Leading-term v1-Bockstein differentials on the 0-line, as data.
struct BssRule {
  long i, j, r;
  std::string source, target;
};

std::vector<BssRule> bss_rules(long ell, long imax, long jmax);

struct SuiteReport {
  std::string name;
  long cases = 0;
  long failures = 0;
};

// Randomized checks of the identities the display computations lean on:
// Leibniz and doubling rules for every component of D, odd-power binomial
// expansion, multiplicativity of the structure maps, and the 2-adic
// valuation of 3^t - 1 (and 5^t - 1).
std::vector<SuiteReport> property_suites(unsigned long seed, long cases);

}  // namespace qell
