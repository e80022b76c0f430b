#include "xcnf/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "xcnf/detail/tn.hpp"

namespace xcnf {

namespace {

// Literals of c clashing with d.
std::vector<Lit> clashes(const Clause& c, const Clause& d) {
  std::vector<Lit> out;
  for (Lit x : c.lits())
    if (d.contains(x.complement())) out.push_back(x);
  return out;
}

bool subsumed_by_any(const Clause& c, const std::vector<Clause>& set) {
  for (const Clause& d : set)
    if (d.size() <= c.size() && d.subset_of(c)) return true;
  return false;
}

struct SizeLexLess {
  bool operator()(const Clause& a, const Clause& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Shared given-clause saturation.  `asym_k < 0` means unrestricted closure;
// `sym_k >= 0` restricts every clause (axioms included) to length <= sym_k.
// Returns true as soon as bot is derived when `stop_at_bot`.
bool saturate(const ClauseSet& f, long asym_k, long sym_k, bool stop_at_bot,
              std::size_t clause_cap, std::vector<Clause>* out) {
  std::set<Clause, SizeLexLess> queue;
  for (const Clause& c : f.clauses()) {
    if (sym_k >= 0 && static_cast<long>(c.size()) > sym_k) continue;
    queue.insert(c);
  }
  std::vector<Clause> active;
  while (!queue.empty()) {
    Clause c = *queue.begin();
    queue.erase(queue.begin());
    if (stop_at_bot && c.empty()) {
      if (out) *out = {c};
      return true;
    }
    if (subsumed_by_any(c, active)) continue;
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](const Clause& d) {
                                  return c.size() < d.size() && c.subset_of(d);
                                }),
                 active.end());
    for (const Clause& d : active) {
      if (asym_k >= 0 && static_cast<long>(std::min(c.size(), d.size())) > asym_k) continue;
      auto xs = clashes(c, d);
      if (xs.size() != 1) continue;
      std::vector<Lit> lits;
      for (Lit x : c.lits())
        if (x != xs[0]) lits.push_back(x);
      for (Lit x : d.lits())
        if (x != xs[0].complement()) lits.push_back(x);
      Clause r(std::move(lits));
      if (sym_k >= 0 && static_cast<long>(r.size()) > sym_k) continue;
      if (stop_at_bot && r.empty()) {
        if (out) *out = {r};
        return true;
      }
      if (!subsumed_by_any(r, active)) queue.insert(std::move(r));
    }
    active.push_back(std::move(c));
    if (active.size() + queue.size() > clause_cap)
      throw CapError("resolution closure exceeds clause cap");
  }
  bool refuted = std::any_of(active.begin(), active.end(),
                             [](const Clause& c) { return c.empty(); });
  if (out) *out = std::move(active);
  return refuted;
}

}  // namespace

Clause resolve(const Clause& c, const Clause& d) {
  auto xs = clashes(c, d);
  if (xs.size() != 1)
    throw Error("not resolvable: " + std::to_string(xs.size()) + " clashing literals");
  std::vector<Lit> lits;
  for (Lit x : c.lits())
    if (x != xs[0]) lits.push_back(x);
  for (Lit x : d.lits())
    if (x != xs[0].complement()) lits.push_back(x);
  return Clause(std::move(lits));
}

TreePtr make_axiom(Clause c) {
  auto t = std::make_shared<ResolutionTree>();
  t->clause = std::move(c);
  return t;
}

TreePtr make_step(TreePtr left, TreePtr right) {
  auto xs = clashes(left->clause, right->clause);
  if (xs.size() != 1)
    throw Error("not resolvable: " + std::to_string(xs.size()) + " clashing literals");
  auto t = std::make_shared<ResolutionTree>();
  t->clause = resolve(left->clause, right->clause);
  t->pivot = xs[0];
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

namespace {

bool check_tree(const TreePtr& t, const ClauseSet& f, std::string path, std::string* diag) {
  if (t->is_axiom()) {
    if (!f.contains(t->clause)) {
      *diag = "leaf at " + (path.empty() ? "root" : path) + " not an axiom: " + t->clause.str();
      return false;
    }
    return true;
  }
  if (!t->pivot || !t->left->clause.contains(*t->pivot) ||
      !t->right->clause.contains(t->pivot->complement())) {
    *diag = "invalid pivot at " + (path.empty() ? "root" : path);
    return false;
  }
  auto xs = clashes(t->left->clause, t->right->clause);
  if (xs.size() != 1) {
    *diag = "parents do not clash in exactly one literal at " + (path.empty() ? "root" : path);
    return false;
  }
  if (resolve(t->left->clause, t->right->clause) != t->clause) {
    *diag = "resolvent mismatch at " + (path.empty() ? "root" : path);
    return false;
  }
  return check_tree(t->left, f, path + "L", diag) && check_tree(t->right, f, path + "R", diag);
}

}  // namespace

CheckReport check_proof(const TreePtr& t, const ClauseSet& f, const Clause& target) {
  CheckReport rep;
  if (t->clause != target) {
    rep.diagnostic = "root clause " + t->clause.str() + " differs from target " + target.str();
    return rep;
  }
  rep.ok = check_tree(t, f, "", &rep.diagnostic);
  return rep;
}

unsigned horton_strahler(const TreePtr& t) {
  if (t->is_axiom()) return 0;
  unsigned l = horton_strahler(t->left), r = horton_strahler(t->right);
  return l == r ? l + 1 : std::max(l, r);
}

std::size_t Proof::max_clause_length() const {
  std::size_t m = 0;
  for (const auto& ln : lines) m = std::max(m, ln.clause.size());
  return m;
}

CheckReport check_proof(const Proof& p, const ClauseSet& f, const Clause& target) {
  CheckReport rep;
  std::map<int, const ProofLine*> byid;
  for (const auto& ln : p.lines) {
    auto where = "line " + std::to_string(ln.id);
    if (byid.count(ln.id)) {
      rep.diagnostic = "duplicate id at " + where;
      return rep;
    }
    if (ln.axiom) {
      if (!f.contains(ln.clause)) {
        rep.diagnostic = where + ": axiom not in clause-set: " + ln.clause.str();
        return rep;
      }
    } else {
      auto p1 = byid.find(ln.parent1), p2 = byid.find(ln.parent2);
      if (p1 == byid.end() || p2 == byid.end()) {
        rep.diagnostic = where + ": parent id not yet defined";
        return rep;
      }
      Lit pivot(ln.pivot);
      if (!p1->second->clause.contains(pivot) ||
          !p2->second->clause.contains(pivot.complement())) {
        rep.diagnostic = where + ": pivot not in parents";
        return rep;
      }
      auto xs = clashes(p1->second->clause, p2->second->clause);
      if (xs.size() != 1) {
        rep.diagnostic = where + ": parents clash in " + std::to_string(xs.size()) + " literals";
        return rep;
      }
      if (resolve(p1->second->clause, p2->second->clause) != ln.clause) {
        rep.diagnostic = where + ": resolvent mismatch";
        return rep;
      }
    }
    byid[ln.id] = &ln;
  }
  if (p.lines.empty()) {
    rep.diagnostic = "empty proof";
    return rep;
  }
  if (p.lines.back().clause != target) {
    rep.diagnostic = "final clause differs from target";
    return rep;
  }
  rep.ok = true;
  return rep;
}

std::string emit_proof(const Proof& p) {
  std::ostringstream os;
  for (const auto& ln : p.lines) {
    os << ln.id << ':';
    for (Lit x : ln.clause.lits()) os << ' ' << x.value();
    os << " 0";
    if (!ln.axiom) os << " <- " << ln.parent1 << ' ' << ln.parent2 << ' ' << ln.pivot;
    os << '\n';
  }
  return os.str();
}

Proof parse_proof(const std::string& text) {
  Proof p;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    ProofLine ln;
    if (tok.back() != ':') throw Error("proof line " + std::to_string(line_no) + ": missing id");
    ln.id = std::stoi(tok.substr(0, tok.size() - 1));
    std::vector<Lit> lits;
    long v;
    while (ls >> v && v != 0) lits.push_back(Lit(static_cast<int>(v)));
    ln.clause = Clause(std::move(lits));
    std::string arrow;
    if (ls >> arrow) {
      if (arrow != "<-") throw Error("proof line " + std::to_string(line_no) + ": bad step");
      if (!(ls >> ln.parent1 >> ln.parent2 >> ln.pivot))
        throw Error("proof line " + std::to_string(line_no) + ": bad step");
      ln.axiom = false;
    }
    p.lines.push_back(std::move(ln));
  }
  return p;
}

TreePtr unfold(const Proof& p, int id) {
  std::map<int, const ProofLine*> byid;
  for (const auto& ln : p.lines) byid[ln.id] = &ln;
  auto it = byid.find(id);
  if (it == byid.end()) throw Error("unfold: unknown id " + std::to_string(id));
  const ProofLine& ln = *it->second;
  if (ln.axiom) return make_axiom(ln.clause);
  return make_step(unfold(p, ln.parent1), unfold(p, ln.parent2));
}

ClauseSet k_resolution_saturate(const ClauseSet& f, unsigned k, std::size_t clause_cap) {
  std::vector<Clause> out;
  saturate(f, static_cast<long>(k), -1, false, clause_cap, &out);
  return ClauseSet(std::move(out));
}

bool k_resolution_refutes(const ClauseSet& f, unsigned k, std::size_t clause_cap) {
  return saturate(f, static_cast<long>(k), -1, true, clause_cap, nullptr);
}

bool symmetric_width_refutes(const ClauseSet& f, unsigned k, std::size_t clause_cap) {
  return saturate(f, -1, static_cast<long>(k), true, clause_cap, nullptr);
}

unsigned min_asymmetric_refutation_width(const ClauseSet& f) {
  for (unsigned k = 0; k <= f.n() + 1; ++k)
    if (k_resolution_refutes(f, k)) return k;
  throw Error("min_asymmetric_refutation_width: clause-set is satisfiable");
}

unsigned min_symmetric_refutation_width(const ClauseSet& f) {
  for (unsigned k = 0; k <= f.n() + 1; ++k)
    if (symmetric_width_refutes(f, k)) return k;
  throw Error("min_symmetric_refutation_width: clause-set is satisfiable");
}

ClauseSet resolution_closure(const ClauseSet& f, std::size_t clause_cap) {
  std::vector<Clause> out;
  saturate(f, -1, -1, false, clause_cap, &out);
  return ClauseSet(std::move(out));
}

// ---------------------------------------------------------------------------
// The explicit T_n refutation (base step on y_{n-1}, n-3 induction steps of
// 10 clauses, 11-clause final refutation; 18n-29 distinct clauses in total).

Proof build_tn_refutation(int n) {
  if (n < 3) throw Error("build_tn_refutation requires n >= 3");
  detail::TnLayout t(n);
  Proof p;
  int next_id = 1;
  std::map<std::vector<int>, int> id_of;  // clause key -> line id

  auto key = [](const Clause& c) {
    std::vector<int> k;
    for (Lit x : c.lits()) k.push_back(x.value());
    return k;
  };
  auto axiom = [&](const Clause& c) {
    auto k = key(c);
    auto it = id_of.find(k);
    if (it != id_of.end()) return it->second;
    ProofLine ln;
    ln.id = next_id++;
    ln.clause = c;
    p.lines.push_back(ln);
    id_of[k] = ln.id;
    return ln.id;
  };
  auto step = [&](int id1, int id2) {
    const Clause& c1 = p.lines[id1 - 1].clause;
    const Clause& c2 = p.lines[id2 - 1].clause;
    auto xs = clashes(c1, c2);
    ProofLine ln;
    ln.id = next_id++;
    ln.clause = resolve(c1, c2);
    ln.axiom = false;
    ln.parent1 = id1;
    ln.parent2 = id2;
    ln.pivot = xs[0].value();
    p.lines.push_back(ln);
    id_of[key(ln.clause)] = ln.id;
    return ln.id;
  };
  auto emit_x0 = [&](const Clause& row) {  // all wrong-parity full clauses
    int w = static_cast<int>(row.size());
    int row_neg = 0;
    for (Lit x : row.lits())
      if (!x.positive()) ++row_neg;
    for (int pat = 0; pat < (1 << w); ++pat) {
      std::vector<Lit> lits;
      int neg = 0;
      for (int i = 0; i < w; ++i) {
        Lit base = row.lits()[static_cast<std::size_t>(i)];
        bool flip = (pat >> i) & 1;
        Lit out = flip ? base.complement() : base;
        if (!out.positive()) ++neg;
        lits.push_back(out);
      }
      if ((neg & 1) == ((row_neg & 1) ^ 1)) axiom(Clause(std::move(lits)));
    }
  };

  // Axioms: all of T_n, in generator order.
  for (const Clause& row : t.chain_rows()) emit_x0(row);

  auto cl = [&](std::initializer_list<int> ls) { return Clause(ls); };
  auto id_of_clause = [&](const Clause& c) {
    auto it = id_of.find(key(c));
    if (it == id_of.end()) throw Error("internal: missing clause " + c.str());
    return it->second;
  };

  int xn = t.x(n);
  // Base step: from the four binary clauses derive y_{n-1} = complement of y'_{n-1}.
  int e1 = step(id_of_clause(cl({-t.y(n - 1), xn})), id_of_clause(cl({-t.yp(n - 1), -xn})));
  int e2 = step(id_of_clause(cl({t.y(n - 1), -xn})), id_of_clause(cl({t.yp(n - 1), xn})));

  // Induction: i = n-1 down to 3 derives the pair one level lower.
  for (int i = n - 1; i >= 3; --i) {
    int yi = t.y(i), ypi = t.yp(i), ylo = t.y(i - 1), yplo = t.yp(i - 1), xi = t.x(i);
    int c1 = id_of_clause(cl({-ylo, -xi, -yi}));
    int c2 = id_of_clause(cl({-ylo, xi, yi}));
    int c3 = id_of_clause(cl({ylo, -xi, yi}));
    int c4 = id_of_clause(cl({ylo, xi, -yi}));
    int d1 = id_of_clause(cl({-yplo, -xi, -ypi}));
    int d2 = id_of_clause(cl({-yplo, xi, ypi}));
    int d3 = id_of_clause(cl({yplo, -xi, ypi}));
    int d4 = id_of_clause(cl({yplo, xi, -ypi}));
    int a1 = step(c1, e2);
    int a2 = step(a1, d2);
    int a3 = step(c2, e1);
    int a4 = step(a3, d1);
    int new_e1 = step(a2, a4);
    int b1 = step(c3, e1);
    int b2 = step(b1, d4);
    int b3 = step(c4, e2);
    int b4 = step(b3, d3);
    int new_e2 = step(b2, b4);
    e1 = new_e1;
    e2 = new_e2;
  }

  // Final refutation over x1, x2, y_2, y'_2.
  int x1 = t.x(1), x2 = t.x(2), y2 = t.y(2), yp2 = t.yp(2);
  int c1 = id_of_clause(cl({-x1, -x2, -y2}));
  int c2 = id_of_clause(cl({-x1, x2, y2}));
  int c3 = id_of_clause(cl({x1, -x2, y2}));
  int c4 = id_of_clause(cl({x1, x2, -y2}));
  int d1 = id_of_clause(cl({-x1, -x2, -yp2}));
  int d2 = id_of_clause(cl({-x1, x2, yp2}));
  int d3 = id_of_clause(cl({x1, -x2, yp2}));
  int d4 = id_of_clause(cl({x1, x2, -yp2}));
  int f1 = step(c1, e2);
  int f2 = step(f1, d1);
  int f3 = step(c2, e1);
  int f4 = step(f3, d2);
  int f5 = step(f2, f4);
  int g1 = step(c3, e1);
  int g2 = step(g1, d3);
  int g3 = step(c4, e2);
  int g4 = step(g3, d4);
  int g5 = step(g2, g4);
  step(f5, g5);
  return p;
}

}  // namespace xcnf
