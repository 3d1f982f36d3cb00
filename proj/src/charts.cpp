#include "qell/charts.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qell/level_maps.hpp"
#include "qell/mf.hpp"
#include "qell/parallel.hpp"
#include "qell/parse.hpp"
#include "qell/rational.hpp"

namespace qell {

namespace {

std::string mono_name(const RingPtr& R, const Exp& e) {
  std::string s;
  for (size_t i = 0; i < R->gens.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += R->gens[i].name;
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

const Exp& only_exp(const Poly& p) {
  if (p.terms.size() != 1)
    throw std::invalid_argument("basis element is not a monomial");
  return p.terms.begin()->first;
}

// Coordinates of p in the listed monomial basis; anything outside the span
// is a hard error, since the structure maps must preserve these modules.
std::vector<mpq_class> coords(const Poly& p, const RingPtr& R,
                              const std::vector<Exp>& basis) {
  std::map<Exp, size_t> where;
  for (size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], i);
  std::vector<mpq_class> out(basis.size(), mpq_class(0));
  for (const auto& [e, c] : p.terms) {
    auto it = where.find(e);
    if (it == where.end())
      throw std::runtime_error("image leaves the modular forms module: " +
                               mono_name(R, e));
    out[it->second] = c;
  }
  return out;
}

}  // namespace

WeightMaps weight_maps(long ell, long w) {
  if (ell != 3 && ell != 5)
    throw std::invalid_argument("weight_maps: level must be 3 or 5");
  WeightMaps m;
  m.ell = ell;
  m.weight = w;

  std::vector<Poly> sl2 = mf_sl2_basis(w);
  std::vector<Poly> sl2A(sl2.size(), Poly());
  RingPtr MF = ring_MF1();
  for (size_t i = 0; i < sl2.size(); ++i) {
    m.sl2_names.push_back(mono_name(MF, only_exp(sl2[i])));
    sl2A[i] = sl2_in_A(sl2[i]);
  }

  std::vector<Exp> lvl_exps;
  RingPtr LR;  // ring the level coordinates live in
  std::function<std::vector<mpq_class>(const Poly&)> to_lvl;
  std::function<Poly(size_t)> tstar_col;
  std::function<Poly(const Poly&)> fmap, qmap;

  if (ell == 3) {
    const Level3& l = level3();
    LR = l.B;
    std::vector<Poly> lvl = mf_level3_basis(w);
    for (const Poly& b : lvl) {
      const Exp& e = only_exp(b);
      lvl_exps.push_back(e);
      m.lvl_names.push_back(mono_name(LR, e));
      m.lvl_pole.push_back(e[LR->gen_index("a1")]);
    }
    to_lvl = [=](const Poly& p) { return coords(p, LR, lvl_exps); };
    tstar_col = [=, &l](size_t j) {
      Poly b = Poly::monomial(LR, lvl_exps[j], mpq_class(1));
      return l.tstar(b) + b;
    };
    fmap = [&l](const Poly& a) { return l.fstar(a); };
    qmap = [&l](const Poly& a) { return l.qstar(a); };
  } else {
    const Level5& l = level5();
    const G5Ring& g = g5();
    LR = g.G;
    int ib2 = LR->gen_index("b2"), ib4 = LR->gen_index("b4");
    std::vector<Poly> lvl = mf_level5_basis(w);
    for (const Poly& b : lvl) {
      const Exp& e = only_exp(b);
      lvl_exps.push_back(e);
      m.lvl_names.push_back(mono_name(LR, e));
      m.lvl_pole.push_back(2 * e[ib2] + 2 * e[ib4]);
    }
    to_lvl = [=, &g](const Poly& p) {
      auto q = g.from_B(p);
      if (!q) throw std::runtime_error("image is not a level-five form");
      return coords(*q, LR, lvl_exps);
    };
    tstar_col = [=, &l, &g](size_t j) {
      Poly b = g.to_B(Poly::monomial(LR, lvl_exps[j], mpq_class(1)));
      return l.tstar(b) + b;
    };
    fmap = [&l](const Poly& a) { return l.fstar(a); };
    qmap = [&l](const Poly& a) { return l.qstar(a); };
  }

  size_t nl = lvl_exps.size(), ns = sl2A.size();

  // d0(a) = ((q* - f*) a, (ell^w - 1) a); the Adams part is diagonal since
  // psi^ell scales a weight-w form by ell^w.
  mpz_class adams;
  mpz_ui_pow_ui(adams.get_mpz_t(), static_cast<unsigned long>(ell),
                static_cast<unsigned long>(w));
  adams -= 1;
  m.d0 = QMat(nl + ns, ns);
  for (size_t j = 0; j < ns; ++j) {
    std::vector<mpq_class> c = to_lvl(qmap(sl2A[j]) - fmap(sl2A[j]));
    for (size_t i = 0; i < nl; ++i) m.d0.at(i, j) = c[i];
    m.d0.at(nl + j, j) = mpq_class(adams);
  }

  // d1(b, a) = (t* + 1) b - f* a.
  m.d1 = QMat(nl, nl + ns);
  for (size_t j = 0; j < nl; ++j) {
    std::vector<mpq_class> c = to_lvl(tstar_col(j));
    for (size_t i = 0; i < nl; ++i) m.d1.at(i, j) = c[i];
  }
  for (size_t j = 0; j < ns; ++j) {
    std::vector<mpq_class> c = to_lvl(fmap(sl2A[j]));
    for (size_t i = 0; i < nl; ++i) m.d1.at(i, nl + j) = -c[i];
  }
  return m;
}

bool composite_zero(const WeightMaps& m) {
  size_t nl = m.lvl_names.size(), ns = m.sl2_names.size();
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < ns; ++j) {
      mpq_class s(0);
      for (size_t k = 0; k < nl + ns; ++k) s += m.d1.at(i, k) * m.d0.at(k, j);
      if (s != 0) return false;
    }
  return true;
}

namespace {

struct EchCol {
  std::vector<mpq_class> v;
  int line;
  std::string name;
  bool alive = true;
};

struct Lead {
  long i = V2_INF;  // 2-order
  long j = 0;       // v1-order of the slot
  size_t row = 0;
  bool found = false;
};

Lead leading_of(const std::vector<mpq_class>& v,
                const std::vector<long>& pole) {
  Lead best;
  for (size_t r = 0; r < v.size(); ++r) {
    if (v[r] == 0) continue;
    long i = v2(v[r]), j = pole[r];
    if (!best.found || i < best.i || (i == best.i && j < best.j) ||
        (i == best.i && j == best.j && r < best.row)) {
      best = {i, j, r, true};
    }
  }
  return best;
}

// Canonical greedy column echelon; appends one rule per pivot.
void echelon(std::vector<EchCol>& cols, const std::vector<long>& pole,
             const std::vector<std::string>& row_names,
             std::vector<LeadRule>& rules, std::vector<long>* pivots) {
  for (;;) {
    size_t pick = cols.size();
    Lead pl;
    for (size_t c = 0; c < cols.size(); ++c) {
      if (!cols[c].alive) continue;
      Lead l = leading_of(cols[c].v, pole);
      if (!l.found) {
        cols[c].alive = false;
        continue;
      }
      if (pick == cols.size() || l.i < pl.i || (l.i == pl.i && l.j < pl.j) ||
          (l.i == pl.i && l.j == pl.j && l.row < pl.row)) {
        pick = c;
        pl = l;
      }
    }
    if (pick == cols.size()) break;
    EchCol& p = cols[pick];
    rules.push_back({p.line, p.name, row_names[pl.row], pl.i});
    if (pivots) pivots->push_back(pl.i);
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c == pick || !cols[c].alive) continue;
      mpq_class e = cols[c].v[pl.row];
      if (e == 0) continue;
      mpq_class f = e / p.v[pl.row];
      for (size_t r = 0; r < p.v.size(); ++r) cols[c].v[r] -= f * p.v[r];
    }
    p.alive = false;
  }
}

}  // namespace

LeadingTable smith_leading_terms(long ell, long w) {
  WeightMaps m = weight_maps(ell, w);
  size_t nl = m.lvl_names.size(), ns = m.sl2_names.size();
  LeadingTable out;
  out.ell = ell;
  out.weight = w;

  // d1 first: its pivots carry the Smith divisor 2-parts.
  {
    std::vector<EchCol> cols;
    for (size_t j = 0; j < nl + ns; ++j) {
      EchCol c;
      c.line = 1;
      c.name = j < nl ? m.lvl_names[j] : m.sl2_names[j - nl];
      c.v.resize(nl);
      for (size_t i = 0; i < nl; ++i) c.v[i] = m.d1.at(i, j);
      cols.push_back(std::move(c));
    }
    echelon(cols, m.lvl_pole, m.lvl_names, out.rules, &out.snf_two);
    std::sort(out.snf_two.begin(), out.snf_two.end());
  }

  // d0: same discipline; Adams slots sort after every level slot.
  {
    std::vector<long> pole = m.lvl_pole;
    std::vector<std::string> rows = m.lvl_names;
    for (size_t i = 0; i < ns; ++i) {
      pole.push_back(100000 + static_cast<long>(i));
      rows.push_back(m.sl2_names[i]);
    }
    std::vector<EchCol> cols;
    for (size_t j = 0; j < ns; ++j) {
      EchCol c;
      c.line = 0;
      c.name = m.sl2_names[j];
      c.v.resize(nl + ns);
      for (size_t i = 0; i < nl + ns; ++i) c.v[i] = m.d0.at(i, j);
      cols.push_back(std::move(c));
    }
    echelon(cols, pole, rows, out.rules, nullptr);
  }
  return out;
}

std::vector<LeadingTable> leading_tables(long ell, long wmax) {
  std::vector<long> ws;
  for (long w = 2; w <= wmax; w += 2) ws.push_back(w);
  std::vector<LeadingTable> out(ws.size());
  parallel_for(ws.size(), [&](size_t i) {
    out[i] = smith_leading_terms(ell, ws[i]);
  });
  return out;
}

bool rule_realizable(const WeightMaps& m, size_t src_col, long a,
                     size_t tgt_row, long b) {
  size_t nl = m.lvl_names.size(), nc = m.d1.n;
  if (src_col >= nc || tgt_row >= nl) return false;
  mpz_class two_a = mpz_class(1) << static_cast<unsigned long>(a);
  mpz_class two_b = mpz_class(1) << static_cast<unsigned long>(b);
  QMat Y(nl, nc - 1);
  std::vector<mpq_class> r(nl);
  std::vector<long> moduli(nl);
  long jt = m.lvl_pole[tgt_row];
  for (size_t i = 0; i < nl; ++i) {
    size_t jj = 0;
    for (size_t j = 0; j < nc; ++j) {
      if (j == src_col) continue;
      Y.at(i, jj++) = m.d1.at(i, j);
    }
    mpq_class base = mpq_class(two_a) * m.d1.at(i, src_col);
    if (i == tgt_row) {
      moduli[i] = b + 1;
      r[i] = mpq_class(two_b) - base;
    } else {
      moduli[i] = b + (m.lvl_pole[i] <= jt ? 1 : 0);
      r[i] = -base;
    }
  }
  return congruence_solvable(Y, moduli, r);
}

std::vector<FixtureRule> load_rule_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<FixtureRule> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::stringstream ss(line);
    std::string f[7];
    for (int i = 0; i < 7; ++i)
      if (!std::getline(ss, f[i], ','))
        throw std::runtime_error("malformed fixture row: " + line);
    FixtureRule rule;
    rule.ell = std::stol(f[0]);
    rule.weight = std::stol(f[1]);
    rule.row = static_cast<int>(std::stol(f[2]));
    rule.a = std::stol(f[3]);
    rule.source = f[4];
    rule.b = std::stol(f[5]);
    rule.target = f[6];
    RingPtr LR = rule.ell == 3 ? ring_B3() : ring_G5();
    Poly tgt = parse_poly(LR, rule.target);
    rule.malformed = !is_homogeneous(tgt) || weight(tgt) != rule.weight;
    out.push_back(std::move(rule));
  }
  return out;
}

bool verify_rule(const FixtureRule& rule) {
  if (rule.malformed) return false;
  WeightMaps m = weight_maps(rule.ell, rule.weight);
  size_t nl = m.lvl_names.size(), ns = m.sl2_names.size();

  LeadingTable t = smith_leading_terms(rule.ell, rule.weight);
  for (const LeadRule& lr : t.rules)
    if (lr.line == 1 && lr.source == rule.source &&
        lr.target == rule.target && lr.exp == rule.b - rule.a)
      return true;

  size_t src = nl + ns, tgt = nl;
  for (size_t j = 0; j < nl; ++j)
    if (m.lvl_names[j] == rule.source) src = j;
  for (size_t j = 0; j < ns; ++j)
    if (m.sl2_names[j] == rule.source) src = nl + j;
  for (size_t i = 0; i < nl; ++i)
    if (m.lvl_names[i] == rule.target) tgt = i;
  if (src == nl + ns || tgt == nl) return false;
  return rule_realizable(m, src, rule.a, tgt, rule.b);
}

void emit_chart(std::ostream& os, const std::vector<LeadingTable>& tables,
                const std::string& format) {
  if (format == "csv") {
    os << "ell,weight,source_line,source_monomial,two_exponent,"
          "target_monomial\n";
    for (const auto& t : tables)
      for (const auto& r : t.rules)
        os << t.ell << ',' << t.weight << ',' << r.line << ',' << r.source
           << ',' << r.exp << ',' << r.target << '\n';
  } else if (format == "json") {
    os << "[";
    bool first = true;
    for (const auto& t : tables)
      for (const auto& r : t.rules) {
        if (!first) os << ",";
        first = false;
        os << "\n  {\"ell\": " << t.ell << ", \"weight\": " << t.weight
           << ", \"source_line\": " << r.line << ", \"source\": \""
           << r.source << "\", \"two_exponent\": " << r.exp
           << ", \"target\": \"" << r.target << "\"}";
      }
    os << "\n]\n";
  } else if (format == "svg") {
    long y = 20;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
       << 20 * 2;
    std::ostringstream body;
    for (const auto& t : tables)
      for (const auto& r : t.rules) {
        body << "  <text x=\"10\" y=\"" << y << "\" font-family=\"monospace\""
             << " font-size=\"12\">w=" << t.weight << " s=" << r.line << "  "
             << r.source << " -> 2^" << r.exp << " " << r.target
             << "</text>\n";
        y += 16;
      }
    os << "\" viewBox=\"0 0 640 " << y << "\">\n"
       << body.str() << "</svg>\n";
  } else {
    throw std::invalid_argument("emit_chart: unknown format " + format);
  }
}

}  // namespace qell
