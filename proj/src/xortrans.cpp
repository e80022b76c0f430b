#include "xcnf/xortrans.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "xcnf/detail/tn.hpp"

namespace xcnf {

namespace {

int negatives(const Clause& c) {
  int n = 0;
  for (Lit x : c.lits())
    if (!x.positive()) ++n;
  return n;
}

// Gaussian elimination over the extended matrix; returns the reduced pivot
// rows.  Each row is (variable-index bitmask as vector<uint64_t> word, rhs).
struct BitRow {
  std::vector<std::uint64_t> mask;
  std::uint8_t rhs = 0;
  bool zero() const {
    for (auto w : mask)
      if (w) return false;
    return true;
  }
  int lead() const {  // index of highest set bit, -1 if zero
    for (int w = static_cast<int>(mask.size()) - 1; w >= 0; --w)
      if (mask[static_cast<std::size_t>(w)])
        return w * 64 + 63 - std::countl_zero(mask[static_cast<std::size_t>(w)]);
    return -1;
  }
  void operator^=(const BitRow& o) {
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] ^= o.mask[i];
    rhs ^= o.rhs;
  }
  bool test(int bit) const { return mask[static_cast<std::size_t>(bit / 64)] >> (bit % 64) & 1; }
};

struct Eliminator {
  std::vector<BitRow> pivots;  // distinct leads, descending
  bool inconsistent = false;

  // Reduces row against the pivots; if nonzero remains, installs it.
  void add(BitRow row) {
    reduce(row);
    if (row.zero()) {
      if (row.rhs) inconsistent = true;
      return;
    }
    pivots.push_back(std::move(row));
    std::sort(pivots.begin(), pivots.end(),
              [](const BitRow& a, const BitRow& b) { return a.lead() > b.lead(); });
  }

  void reduce(BitRow& row) const {
    for (const BitRow& p : pivots)
      if (row.test(p.lead())) row ^= p;
  }

  // row is in the affine row space iff it reduces to zero (rhs included).
  bool spans(BitRow row) const {
    reduce(row);
    return row.zero() && row.rhs == 0;
  }
};

BitRow row_of_clause(const Clause& c, const std::map<Var, int>& index, std::size_t words) {
  BitRow r;
  r.mask.assign(words, 0);
  for (Lit x : c.lits()) {
    int i = index.at(x.var());
    r.mask[static_cast<std::size_t>(i / 64)] ^= 1ULL << (i % 64);
  }
  r.rhs = static_cast<std::uint8_t>(negatives(c) & 1);
  return r;
}

Eliminator eliminate(const XorClauseSet& f, const std::map<Var, int>& index,
                     std::size_t words) {
  Eliminator e;
  for (const Clause& c : f.clauses.clauses()) e.add(row_of_clause(c, index, words));
  return e;
}

std::map<Var, int> var_index(const std::vector<Var>& vars) {
  std::map<Var, int> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
  return index;
}

}  // namespace

GF2System to_linear_system(const XorClauseSet& f) {
  GF2System sys;
  sys.column_vars = f.clauses.vars();
  auto index = var_index(sys.column_vars);
  for (const Clause& c : f.clauses.clauses()) {
    std::vector<std::uint8_t> row(sys.column_vars.size(), 0);
    for (Lit x : c.lits()) row[static_cast<std::size_t>(index[x.var()])] = 1;
    sys.a.push_back(std::move(row));
    sys.b.push_back(static_cast<std::uint8_t>(negatives(c) & 1));
  }
  return sys;
}

bool xor_sat(const XorClauseSet& f) {
  auto vars = f.clauses.vars();
  std::size_t words = vars.size() / 64 + 1;
  return !eliminate(f, var_index(vars), words).inconsistent;
}

bool xor_implies(const XorClauseSet& f, const Clause& c) {
  if (!xor_sat(f)) return true;  // everything follows from an inconsistent system
  auto vars = f.clauses.vars();
  for (Var v : c.vars())
    if (!std::binary_search(vars.begin(), vars.end(), v)) return false;
  std::size_t words = vars.size() / 64 + 1;
  auto index = var_index(vars);
  Eliminator e = eliminate(f, index, words);
  return e.spans(row_of_clause(c, index, words));
}

std::optional<Clause> xor_sum(const XorClauseSet& g) {
  // Symmetric difference at the literal level.
  std::set<int> sym;
  for (const Clause& c : g.clauses.clauses())
    for (Lit x : c.lits()) {
      auto [it, inserted] = sym.insert(x.value());
      if (!inserted) sym.erase(it);
    }
  // Split into clashing pairs and plain literals.
  std::vector<Lit> plain;
  int pairs = 0;
  for (int v : sym) {
    if (v < 0) continue;
    if (sym.count(-v)) {
      ++pairs;
    } else {
      plain.push_back(Lit(v));
    }
  }
  for (int v : sym)
    if (v < 0 && !sym.count(-v)) plain.push_back(Lit(v));
  std::sort(plain.begin(), plain.end());
  if (pairs % 2 == 0) return Clause(std::move(plain));
  if (plain.empty()) return std::nullopt;  // inconsistent: 0 = 1
  plain.front() = plain.front().complement();  // flip the literal of minimal variable
  return Clause(std::move(plain));
}

Clause xor_canonical(const Clause& c) {
  std::vector<Lit> lits;
  for (Var v : c.vars()) lits.push_back(Lit(v));
  if (!lits.empty() && (negatives(c) & 1)) lits.front() = lits.front().complement();
  return Clause(std::move(lits));
}

bool xor_equivalent(const Clause& c, const Clause& d) {
  return c.vars() == d.vars() && (negatives(c) & 1) == (negatives(d) & 1);
}

ClauseSet x0(const Clause& c) {
  int w = static_cast<int>(c.size());
  if (w == 0) return ClauseSet{};
  if (w > 24) throw CapError("x0: clause width " + std::to_string(w) + " exceeds cap 24");
  int parity = negatives(c) & 1;
  std::vector<Clause> out;
  for (std::uint64_t pat = 0; pat < (1ULL << w); ++pat) {
    if ((std::popcount(pat) & 1) == parity) continue;  // need different complement parity
    std::vector<Lit> lits;
    for (int i = 0; i < w; ++i) {
      Var v = c.lits()[static_cast<std::size_t>(i)].var();
      lits.push_back(Lit((pat >> i) & 1 ? -v : v));
    }
    out.push_back(Clause(std::move(lits)));
  }
  return ClauseSet(std::move(out));
}

ClauseSet x0_set(const XorClauseSet& f) {
  std::vector<Clause> out;
  for (const Clause& c : f.clauses.clauses()) {
    ClauseSet image = x0(c);
    for (const Clause& d : image.clauses()) out.push_back(d);
  }
  return ClauseSet(std::move(out));
}

XorClauseSet x1_split(const Clause& c, const X1Options& opts) {
  if (c.size() <= 2) return XorClauseSet{ClauseSet{c}};
  std::vector<Lit> xs(c.lits().begin(), c.lits().end());
  if (opts.descending) std::reverse(xs.begin(), xs.end());
  Var fresh = std::max(opts.fresh_floor, c.vars().back());
  int n = static_cast<int>(xs.size());
  std::vector<Var> y(static_cast<std::size_t>(n), 0);
  for (int i = 2; i <= n - 1; ++i) y[static_cast<std::size_t>(i - 1)] = ++fresh;
  auto yv = [&](int i) { return y[static_cast<std::size_t>(i - 1)]; };
  std::vector<Clause> rows;
  rows.push_back(Clause({xs[0], xs[1], Lit(yv(2))}));
  for (int i = 3; i <= n - 1; ++i)
    rows.push_back(Clause({Lit(yv(i - 1)), xs[static_cast<std::size_t>(i - 1)], Lit(yv(i))}));
  rows.push_back(Clause({Lit(yv(n - 1)), xs[static_cast<std::size_t>(n - 1)]}));
  return XorClauseSet{ClauseSet(std::move(rows))};
}

ClauseSet x1(const Clause& c, const X1Options& opts) { return x0_set(x1_split(c, opts)); }

XorClauseSet x1_split_set(const XorClauseSet& f, const X1Options& opts) {
  X1Options cur = opts;
  auto vars = f.clauses.vars();
  cur.fresh_floor = std::max(opts.fresh_floor, vars.empty() ? 0 : vars.back());
  std::vector<Clause> rows;
  for (const Clause& c : f.clauses.clauses()) {
    XorClauseSet split = x1_split(c, cur);
    auto split_vars = split.clauses.vars();
    if (!split_vars.empty()) cur.fresh_floor = std::max(cur.fresh_floor, split_vars.back());
    for (const Clause& r : split.clauses.clauses()) rows.push_back(r);
  }
  return XorClauseSet{ClauseSet(std::move(rows))};
}

ClauseSet x1_set(const XorClauseSet& f, const X1Options& opts) {
  return x0_set(x1_split_set(f, opts));
}

XorClauseSet f_star(const XorClauseSet& f) {
  if (!xor_sat(f))
    throw Error("precondition: satisfiable XOR system required for F*");
  const auto& cs = f.clauses.clauses();
  if (cs.size() > 22) throw CapError("f_star: more than 22 XOR-clauses");
  std::vector<Clause> sums;
  for (std::uint64_t sel = 1; sel < (1ULL << cs.size()); ++sel) {
    std::vector<Clause> subset;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (sel >> j & 1) subset.push_back(cs[j]);
    auto sum = xor_sum(XorClauseSet{ClauseSet(std::move(subset))});
    if (!sum) throw Error("internal: inconsistent sum in satisfiable system");
    if (sum->empty()) continue;  // the tautology is dropped
    sums.push_back(xor_canonical(*sum));
  }
  return XorClauseSet{ClauseSet(std::move(sums))};
}

ClauseSet x_star(const XorClauseSet& f, const X1Options& opts) {
  return x1_set(f_star(f), opts);
}

X2Result x2(const Clause& c, const Clause& d, const X1Options& opts) {
  auto cv = c.vars();
  auto dv = d.vars();
  std::vector<Var> shared;
  std::set_intersection(cv.begin(), cv.end(), dv.begin(), dv.end(),
                        std::back_inserter(shared));
  if (shared.size() < 2)
    throw Error("x2 precondition: |var(C) & var(D)| >= 2 fails (" +
                std::to_string(shared.size()) + " shared)");
  if (c.size() <= shared.size())
    throw Error("x2 precondition: |C| > |I| fails");
  if (d.size() <= shared.size())
    throw Error("x2 precondition: |D| > |I| fails");

  // Normalize D so that shared literals carry C's signs; each differing sign
  // is one parity flip, folded into the minimal non-shared literal of D.
  int flips = 0;
  std::vector<Lit> d_lits;
  std::vector<Lit> d_rest;
  for (Lit x : d.lits()) {
    if (std::binary_search(shared.begin(), shared.end(), x.var())) {
      bool c_sign =
          c.contains(Lit(x.var())) ? true : false;  // C holds the positive literal?
      if (c_sign != x.positive()) ++flips;
      d_lits.push_back(c_sign ? Lit(x.var()) : Lit(-x.var()));
    } else {
      d_rest.push_back(x);
    }
  }
  if (flips % 2) d_rest.front() = d_rest.front().complement();

  X2Result res;
  res.d_flips = flips;
  Var maxv = std::max(cv.back(), dv.back());
  res.s = std::max(opts.fresh_floor, maxv) + 1;

  std::vector<Lit> i_lits;
  for (Lit x : c.lits())
    if (std::binary_search(shared.begin(), shared.end(), x.var())) i_lits.push_back(x);
  std::vector<Lit> c_rest;
  for (Lit x : c.lits())
    if (!std::binary_search(shared.begin(), shared.end(), x.var())) c_rest.push_back(x);

  std::vector<Lit> ip = i_lits, cp = c_rest, dp = d_rest;
  ip.push_back(Lit(res.s));
  cp.push_back(Lit(res.s));
  dp.push_back(Lit(res.s));
  X1Options sub = opts;
  sub.fresh_floor = res.s;
  res.split = x1_split_set(
      XorClauseSet{ClauseSet{Clause(std::move(ip)), Clause(std::move(cp)), Clause(std::move(dp))}},
      sub);
  res.cnf = x0_set(res.split);
  return res;
}

bool incidence_acyclic(const std::vector<ClauseSet>& family) {
  // Union-find over variables and family indices; a repeated union closes a cycle.
  std::map<Var, int> var_node;
  int next = 0;
  std::vector<int> parent;
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (const ClauseSet& f : family) {
    parent.push_back(next);
    int fi = next++;
    for (Var v : f.vars()) {
      auto it = var_node.find(v);
      if (it == var_node.end()) {
        parent.push_back(next);
        var_node[v] = next++;
      }
      int a = find(fi), b = find(var_node[v]);
      if (a == b) return false;
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return true;
}

bool xor_acyclic(const XorClauseSet& f) {
  std::vector<ClauseSet> family;
  for (const Clause& c : f.clauses.clauses()) family.push_back(ClauseSet{c});
  return incidence_acyclic(family);
}

std::vector<std::vector<int>> variable_interaction_graph(const std::vector<ClauseSet>& family) {
  std::vector<std::vector<int>> adj(family.size());
  std::vector<std::vector<Var>> vars;
  vars.reserve(family.size());
  for (const ClauseSet& f : family) vars.push_back(f.vars());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      std::vector<Var> both;
      std::set_intersection(vars[i].begin(), vars[i].end(), vars[j].begin(), vars[j].end(),
                            std::back_inserter(both));
      if (!both.empty()) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  return adj;
}

XorClauseSet tseitin_xor_system(const GeneralGraph& g) {
  // Edge labels must form a clause (variable-disjoint, clash-free).
  {
    std::vector<Lit> labels;
    for (const auto& e : g.edges) labels.push_back(e.label);
    std::vector<Var> vs;
    for (Lit x : labels) vs.push_back(x.var());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw Error("general graph: edge labels share a variable");
  }
  std::vector<Clause> rows;
  for (int w = 0; w < g.n_vertices; ++w) {
    std::vector<Lit> incident;
    for (const auto& e : g.edges)
      if (e.u == w || e.v == w) incident.push_back(e.label);
    bool charge = g.charge[static_cast<std::size_t>(w)] != 0;
    if (incident.empty()) {
      if (charge) throw Error("general graph: isolated vertex with charge 1");
      continue;
    }
    std::sort(incident.begin(), incident.end());
    if (charge) incident.front() = incident.front().complement();  // odd charge flips one
    rows.push_back(Clause(std::move(incident)));
  }
  return XorClauseSet{ClauseSet(std::move(rows))};
}

ClauseSet tseitin_formula(const GeneralGraph& g) { return x0_set(tseitin_xor_system(g)); }

GeneralGraph bouquet(const Clause& c) {
  GeneralGraph g;
  g.n_vertices = 1;
  g.charge = {0};
  for (Lit x : c.lits()) g.edges.push_back({x, 0, 0});
  return g;
}

GeneralGraph dipole(int n) {
  if (n < 1) throw Error("dipole: n >= 1 required");
  GeneralGraph g;
  g.n_vertices = 2;
  g.charge = {0, 1};
  for (int i = 1; i <= n; ++i) g.edges.push_back({Lit(i), 0, 1});
  return g;
}

XorClauseSet tn_split_system(int n) {
  if (n < 2) throw Error("generate_tn: n >= 2 required");
  detail::TnLayout t(n);
  return XorClauseSet{ClauseSet(t.chain_rows())};
}

ClauseSet generate_tn(int n) {
  if (n < 2) throw Error("generate_tn: n >= 2 required");
  std::vector<Lit> c1, c2;
  for (int i = 1; i < n; ++i) {
    c1.push_back(Lit(i));
    c2.push_back(Lit(i));
  }
  c1.push_back(Lit(n));
  c2.push_back(Lit(-n));
  return x1_set(XorClauseSet{ClauseSet{Clause(std::move(c1)), Clause(std::move(c2))}});
}

MSP parse_msp(const std::string& text) {
  MSP msp;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int current = -1;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok == "msp") {
      if (!(ls >> msp.n_inputs >> msp.m) || msp.n_inputs < 0 || msp.m < 0)
        throw Error("msp parse (line " + std::to_string(line_no) + "): malformed header");
      msp.systems.assign(static_cast<std::size_t>(msp.n_inputs), {});
      header = true;
      continue;
    }
    if (!header) throw Error("msp parse (line " + std::to_string(line_no) + "): data before header");
    if (tok == "sys") {
      int i;
      if (!(ls >> i) || i < 1 || i > msp.n_inputs)
        throw Error("msp parse (line " + std::to_string(line_no) + "): bad system index");
      current = i - 1;
      continue;
    }
    if (current < 0)
      throw Error("msp parse (line " + std::to_string(line_no) + "): row outside system");
    MSP::Row row;
    row.coeffs.reserve(static_cast<std::size_t>(msp.m));
    row.coeffs.push_back(static_cast<std::uint8_t>(std::stoi(tok)));
    std::string t;
    while (ls >> t && t != "|") row.coeffs.push_back(static_cast<std::uint8_t>(std::stoi(t)));
    if (t != "|" || !(ls >> t))
      throw Error("msp parse (line " + std::to_string(line_no) + "): missing '| rhs'");
    row.rhs = static_cast<std::uint8_t>(std::stoi(t));
    if (static_cast<int>(row.coeffs.size()) != msp.m)
      throw Error("msp parse (line " + std::to_string(line_no) + "): wrong row width");
    msp.systems[static_cast<std::size_t>(current)].push_back(std::move(row));
  }
  if (!header) throw Error("msp parse: missing header");
  return msp;
}

std::string emit_msp(const MSP& msp) {
  std::ostringstream os;
  os << "msp " << msp.n_inputs << ' ' << msp.m << '\n';
  for (int i = 0; i < msp.n_inputs; ++i) {
    os << "sys " << i + 1 << '\n';
    for (const auto& row : msp.systems[static_cast<std::size_t>(i)]) {
      for (auto c : row.coeffs) os << int{c} << ' ';
      os << "| " << int{row.rhs} << '\n';
    }
  }
  return os.str();
}

namespace {

Clause msp_row_clause(const MSP::Row& row, std::optional<Var> relax) {
  std::vector<Lit> lits;
  for (int j = 0; j < static_cast<int>(row.coeffs.size()); ++j)
    if (row.coeffs[static_cast<std::size_t>(j)]) lits.push_back(Lit(j + 1));
  if (relax) lits.push_back(Lit(*relax));
  std::sort(lits.begin(), lits.end());
  if (lits.empty()) {
    if (row.rhs) throw Error("msp: empty inconsistent row (0 = 1) not representable");
    return Clause{};
  }
  if (row.rhs) lits.front() = lits.front().complement();
  return Clause(std::move(lits));
}

}  // namespace

MspRelaxation msp_relax(const MSP& msp) {
  MspRelaxation out;
  out.z_of_input.assign(static_cast<std::size_t>(msp.n_inputs), {});
  Var z = msp.m;
  std::vector<Clause> rows;
  for (int i = 0; i < msp.n_inputs; ++i)
    for (const auto& row : msp.systems[static_cast<std::size_t>(i)]) {
      ++z;
      out.z_of_input[static_cast<std::size_t>(i)].push_back(z);
      rows.push_back(msp_row_clause(row, z));
    }
  out.relaxed = XorClauseSet{ClauseSet(std::move(rows))};
  return out;
}

bool msp_eval(const MSP& msp, const std::vector<std::uint8_t>& inputs) {
  if (static_cast<int>(inputs.size()) != msp.n_inputs)
    throw Error("msp_eval: input vector must be total over the switches");
  std::vector<Clause> rows;
  for (int i = 0; i < msp.n_inputs; ++i) {
    if (inputs[static_cast<std::size_t>(i)]) continue;  // inactive
    for (const auto& row : msp.systems[static_cast<std::size_t>(i)])
      rows.push_back(msp_row_clause(row, std::nullopt));
  }
  return xor_sat(XorClauseSet{ClauseSet(std::move(rows))});
}

unsigned hd_two_xor_expected(const Clause& c, const Clause& d) {
  auto cv = c.vars();
  auto dv = d.vars();
  std::vector<Var> shared, all;
  std::set_intersection(cv.begin(), cv.end(), dv.begin(), dv.end(),
                        std::back_inserter(shared));
  std::set_union(cv.begin(), cv.end(), dv.begin(), dv.end(), std::back_inserter(all));
  bool unsat_pair = !xor_sat(XorClauseSet{ClauseSet{c, d}});
  if (!unsat_pair && all.size() == shared.size())
    throw Error("hd_two_xor_expected precondition: pair is satisfiable with equal variable sets");
  return std::max<unsigned>(1, static_cast<unsigned>(shared.size()));
}

}  // namespace xcnf
