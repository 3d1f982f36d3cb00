#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qell/poly.hpp"
#include "qell/snf.hpp"

namespace qell {

// The weight-w strand of the two-stage duality complex at level ell:
//
//   MF(w)  --d0-->  MFell(w) (+) MF(w)  --d1-->  MFell(w)
//
// with d0(a) = ((q* - f*) a, (psi^ell - 1) a) and d1(b, a) = (t* + 1) b - f* a.
// Matrices are stored over the rationals; every denominator is odd, so all
// 2-adic bookkeeping happens as if over the 2-local integers.
struct WeightMaps {
  long ell = 0;
  long weight = 0;
  std::vector<std::string> lvl_names;  // monomial basis of MFell(w)
  std::vector<std::string> sl2_names;  // monomial basis of MF(w)
  std::vector<long> lvl_pole;          // v1-order of each level monomial
  QMat d0;  // rows: lvl then sl2 slots; columns: sl2
  QMat d1;  // rows: lvl slots; columns: lvl then sl2
};

WeightMaps weight_maps(long ell, long w);

// d1 . d0 = 0, entry by entry.
bool composite_zero(const WeightMaps& m);

// One pairing extracted from a column echelon: d(source + higher) =
// 2^exp * target + higher, where "higher" is ordered by (2-power, v1-order).
struct LeadRule {
  int line = 1;  // 0: d0 column, 1: d1 column
  std::string source, target;
  long exp = 0;
};

struct LeadingTable {
  long ell = 0;
  long weight = 0;
  std::vector<LeadRule> rules;
  std::vector<long> snf_two;  // 2-exponents of the d1 divisors, sorted
};

// Canonical column echelon of both differentials over the 2-local integers:
// repeatedly pivot on the globally least leading term in the (2-power,
// v1-order) lexicographic order. The pivot 2-exponents of d1 recover the
// 2-parts of its Smith divisors.
LeadingTable smith_leading_terms(long ell, long w);

// All even weights up to wmax, computed weight-by-weight in parallel.
std::vector<LeadingTable> leading_tables(long ell, long wmax);

// Decides whether d1(2^a source + correction) = 2^b target + higher holds
// for some correction supported off the source column: the target slot must
// carry 2-order exactly b and every other slot at least b, strictly more
// when it precedes the target in v1-order.
bool rule_realizable(const WeightMaps& m, size_t src_col, long a,
                     size_t tgt_row, long b);

// A transcribed table row: d(2^a source) = 2^b target + higher at the given
// weight. Rows whose target weight disagrees with the stated weight are
// marked malformed when loaded and skipped by verification.
struct FixtureRule {
  long ell = 0;
  long weight = 0;
  int row = 0;
  long a = 0;
  std::string source;
  long b = 0;
  std::string target;
  bool malformed = false;
};

std::vector<FixtureRule> load_rule_fixtures(const std::string& path);

// First tries to find the rule verbatim in the canonical echelon (same
// source, target, and exponent difference); failing that, checks it is
// realizable at the printed exponents.
bool verify_rule(const FixtureRule& rule);

// Chart serialization: format is one of "csv", "json", "svg".
void emit_chart(std::ostream& os, const std::vector<LeadingTable>& tables,
                const std::string& format);

}  // namespace qell
