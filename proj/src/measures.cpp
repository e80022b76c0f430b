#include "xcnf/measures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "xcnf/detail/xorstate.hpp"
#include "xcnf/reductions.hpp"
#include "xcnf/resolution.hpp"

namespace xcnf {

namespace {

const char* kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::Hd: return "hd";
    case MeasureKind::Phd: return "phd";
    case MeasureKind::Whd: return "whd";
    case MeasureKind::Wid: return "wid";
  }
  return "?";
}

std::vector<Var> restrict_scope(const ClauseSet& f, const std::vector<Var>& scope) {
  auto vars = f.vars();
  std::vector<Var> out;
  std::vector<Var> sorted = scope;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set_intersection(sorted.begin(), sorted.end(), vars.begin(), vars.end(),
                        std::back_inserter(out));
  return out;
}

long effective_k_cap(const ClauseSet& f, const MeasureOptions& opts) {
  return opts.k_cap >= 0 ? opts.k_cap : static_cast<long>(f.n()) + 2;
}

// Per-assignment requirement levels.
unsigned unsat_level(RefutationOracle& oracle, const ClauseSet& g, long k_cap) {
  for (long k = 0; k <= k_cap; ++k)
    if (oracle.refutes(g, static_cast<int>(k))) return static_cast<unsigned>(k);
  throw Error("refutation level exceeds k cap");
}

bool scope_forced_free(RefutationOracle& oracle, const ClauseSet& g, unsigned k,
                       const std::vector<Var>& scope) {
  ClauseSet fx = oracle.reduce(g, k).reduced;
  if (fx.has_empty_clause()) return true;  // unsatisfiable side handled by caller
  auto vars = fx.vars();
  for (Var v : scope) {
    if (!std::binary_search(vars.begin(), vars.end(), v)) continue;
    for (Lit x : {Lit(v), Lit(-v)})
      if (!sat_decide(apply(PartialAssignment().with(x, false), fx))) return false;
  }
  return true;
}

unsigned sat_level(RefutationOracle& oracle, const ClauseSet& g, long k_cap,
                   const std::vector<Var>& scope) {
  for (long k = 0; k <= k_cap; ++k)
    if (scope_forced_free(oracle, g, static_cast<unsigned>(k), scope))
      return static_cast<unsigned>(k);
  throw Error("p-hardness level exceeds k cap");
}

// Generic PASS(V) enumeration, lexicographic branch order 0 < 1 < unassigned.
// `leaf_eval` is called once per phi; unsatisfiable prefixes are evaluated
// immediately (extensions can only need lower levels).
struct Enumerator {
  Enumerator(const std::vector<Var>& sc, std::function<unsigned(const ClauseSet&, bool)> ev)
      : scope(sc), eval(std::move(ev)) {}
  const std::vector<Var>& scope;
  std::function<unsigned(const ClauseSet&, bool sat)> eval;  // requirement of one phi
  bool evaluate_sat_leaves = false;
  unsigned best = 0;
  bool have_witness = false;
  PartialAssignment witness;
  long early_stop_above = -1;  // if >= 0: stop as soon as best > this
  bool stopped = false;

  void run(const ClauseSet& f) { walk(f, PartialAssignment(), 0); }

  void record(unsigned val, const PartialAssignment& phi) {
    if (!have_witness || val > best) {
      best = val;
      witness = phi;
      have_witness = true;
    }
    if (early_stop_above >= 0 && best > static_cast<unsigned>(early_stop_above))
      stopped = true;
  }

  void walk(const ClauseSet& g, const PartialAssignment& phi, std::size_t idx) {
    if (stopped) return;
    bool sat = sat_decide(g);
    if (!sat) {
      record(eval(g, false), phi);
      return;
    }
    if (idx == scope.size()) {
      if (evaluate_sat_leaves) record(eval(g, true), phi);
      return;
    }
    if (g.empty() && !evaluate_sat_leaves) return;  // all extensions satisfiable
    Var v = scope[idx];
    walk(apply(PartialAssignment({{v, false}}), g), phi.with(Lit(v), false), idx + 1);
    walk(apply(PartialAssignment({{v, true}}), g), phi.with(Lit(v), true), idx + 1);
    walk(g, phi, idx + 1);
  }
};

// Sat leaves under the p-hardness evaluation need phi-independent data only,
// but the per-leaf cost makes the enumeration the slow path; keep scopes small.

std::optional<detail::AffineEngine> try_engine(const ClauseSet& f, const MeasureOptions& opts,
                                               std::size_t scope_size) {
  if (!opts.allow_fast_path) return std::nullopt;
  if (scope_size <= opts.fast_cutoff) return std::nullopt;
  auto form = detail::recognize_x0(f);
  if (!form) return std::nullopt;
  return detail::AffineEngine(std::move(*form));
}

void require_enum_size(std::size_t scope_size, const MeasureOptions& opts, const char* what) {
  if (scope_size > opts.enum_cap)
    throw CapError(std::string(what) + ": scope size " + std::to_string(scope_size) +
                   " exceeds enumeration cap " + std::to_string(opts.enum_cap) +
                   " and the clause-set is not X0-structured");
}

}  // namespace

std::string MeasureReport::str(bool with_witness) const {
  std::ostringstream os;
  os << kind_name(kind) << ' ' << scope.size() << ' ' << value;
  if (with_witness) {
    os << "\nv";
    for (auto& [v, b] : witness.entries()) os << ' ' << (b ? v : -v);
    os << " 0";
  }
  return os.str();
}

MeasureReport hardness(const ClauseSet& f, const std::vector<Var>& scope,
                       const MeasureOptions& opts) {
  MeasureReport rep;
  rep.kind = MeasureKind::Hd;
  rep.scope = restrict_scope(f, scope);
  long k_cap = effective_k_cap(f, opts);
  RefutationOracle oracle;
  if (!sat_decide(f)) {
    rep.value = unsat_level(oracle, f, k_cap);
    return rep;
  }
  if (auto engine = try_engine(f, opts, rep.scope.size())) {
    auto res = engine->hardness(engine->mask_of(rep.scope));
    rep.value = res.value;
    rep.witness = res.witness;
    return rep;
  }
  require_enum_size(rep.scope.size(), opts, "hardness");
  Enumerator en(rep.scope,
                [&](const ClauseSet& g, bool) { return unsat_level(oracle, g, k_cap); });
  en.run(f);
  rep.value = en.best;
  rep.witness = en.witness;
  return rep;
}

MeasureReport p_hardness(const ClauseSet& f, const std::vector<Var>& scope,
                         const MeasureOptions& opts) {
  MeasureReport rep;
  rep.kind = MeasureKind::Phd;
  rep.scope = restrict_scope(f, scope);
  long k_cap = effective_k_cap(f, opts);
  RefutationOracle oracle;
  if (!sat_decide(f)) {  // phd == hd on unsatisfiable clause-sets
    rep.value = unsat_level(oracle, f, k_cap);
    return rep;
  }
  if (auto engine = try_engine(f, opts, rep.scope.size())) {
    auto res = engine->p_hardness(engine->mask_of(rep.scope));
    rep.value = res.value;
    rep.witness = res.witness;
    return rep;
  }
  require_enum_size(rep.scope.size(), opts, "p_hardness");
  Enumerator en(rep.scope, [&](const ClauseSet& g, bool sat) {
    return sat ? sat_level(oracle, g, k_cap, rep.scope) : unsat_level(oracle, g, k_cap);
  });
  en.evaluate_sat_leaves = true;
  en.run(f);
  rep.value = en.best;
  rep.witness = en.witness;
  return rep;
}

namespace {

MeasureReport width_measure(const ClauseSet& f, const std::vector<Var>& scope,
                            const MeasureOptions& opts, bool symmetric) {
  MeasureReport rep;
  rep.kind = symmetric ? MeasureKind::Wid : MeasureKind::Whd;
  rep.scope = restrict_scope(f, scope);
  auto width_of = [&](const ClauseSet& g) {
    return symmetric ? min_symmetric_refutation_width(g) : min_asymmetric_refutation_width(g);
  };
  if (!sat_decide(f)) {
    rep.value = width_of(f);
    return rep;
  }
  if (auto engine = try_engine(f, opts, rep.scope.size())) {
    auto res = symmetric ? engine->symmetric_width(engine->mask_of(rep.scope))
                         : engine->asymmetric_width(engine->mask_of(rep.scope));
    rep.value = res.value;
    rep.witness = res.witness;
    return rep;
  }
  require_enum_size(rep.scope.size(), opts,
                    symmetric ? "symmetric_width" : "asymmetric_width");
  std::map<std::vector<Clause>, unsigned> memo;
  Enumerator en(rep.scope, [&](const ClauseSet& g, bool) {
    auto it = memo.find(g.clauses());
    if (it != memo.end()) return it->second;
    unsigned w = width_of(g);
    memo.emplace(g.clauses(), w);
    return w;
  });
  en.run(f);
  rep.value = en.best;
  rep.witness = en.witness;
  return rep;
}

}  // namespace

MeasureReport asymmetric_width(const ClauseSet& f, const std::vector<Var>& scope,
                               const MeasureOptions& opts) {
  return width_measure(f, scope, opts, false);
}

MeasureReport symmetric_width(const ClauseSet& f, const std::vector<Var>& scope,
                              const MeasureOptions& opts) {
  return width_measure(f, scope, opts, true);
}

bool hd_at_most(const ClauseSet& f, const std::vector<Var>& scope, unsigned k,
                const MeasureOptions& opts, PartialAssignment* counterexample) {
  auto sc = restrict_scope(f, scope);
  RefutationOracle oracle;
  if (!sat_decide(f)) return oracle.refutes(f, static_cast<int>(k));
  if (auto engine = try_engine(f, opts, sc.size()))
    return engine->hd_at_most(engine->mask_of(sc), k, counterexample);
  require_enum_size(sc.size(), opts, "hd_at_most");
  Enumerator en(sc, [&](const ClauseSet& g, bool) -> unsigned {
    return oracle.refutes(g, static_cast<int>(k)) ? 0 : k + 1;
  });
  en.early_stop_above = k;
  en.run(f);
  if (en.best > k && counterexample) *counterexample = en.witness;
  return en.best <= k;
}

bool phd_at_most(const ClauseSet& f, const std::vector<Var>& scope, unsigned k,
                 const MeasureOptions& opts, PartialAssignment* counterexample) {
  auto sc = restrict_scope(f, scope);
  RefutationOracle oracle;
  if (!sat_decide(f)) return oracle.refutes(f, static_cast<int>(k));
  if (auto engine = try_engine(f, opts, sc.size()))
    return engine->phd_at_most(engine->mask_of(sc), k, counterexample);
  require_enum_size(sc.size(), opts, "phd_at_most");
  Enumerator en(sc, [&](const ClauseSet& g, bool sat) -> unsigned {
    if (!sat) return oracle.refutes(g, static_cast<int>(k)) ? 0 : k + 1;
    return scope_forced_free(oracle, g, k, sc) ? 0 : k + 1;
  });
  en.evaluate_sat_leaves = true;
  en.early_stop_above = k;
  en.run(f);
  if (en.best > k && counterexample) *counterexample = en.witness;
  return en.best <= k;
}

ClassMembership class_membership(const ClauseSet& f, unsigned k, const MeasureOptions& opts) {
  ClassMembership m;
  auto vars = f.vars();
  m.in_uc = hd_at_most(f, vars, k, opts);
  m.in_pc = phd_at_most(f, vars, k, opts);
  m.in_wc = asymmetric_width(f, vars, opts).value <= k;
  return m;
}

bool entails(const ClauseSet& f, const Clause& c) {
  std::vector<Clause> clauses(f.clauses().begin(), f.clauses().end());
  for (Lit x : c.lits()) clauses.push_back(Clause({x.complement()}));
  return !sat_decide(ClauseSet(std::move(clauses)));
}

ClauseSet prime_implicates(const ClauseSet& f, std::size_t clause_cap) {
  if (f.c() > clause_cap)
    throw CapError("prime_implicates: " + std::to_string(f.c()) + " clauses exceed cap " +
                   std::to_string(clause_cap));
  const auto& cs = f.clauses();
  std::vector<Clause> collected;
  for (std::uint64_t sel = 1; sel < (1ULL << cs.size()); ++sel) {
    std::vector<Clause> subset;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (sel >> j & 1) subset.push_back(cs[j]);
    Clause candidate = pure_clause(ClauseSet(std::move(subset)));
    if (entails(f, candidate)) collected.push_back(std::move(candidate));
  }
  return subsumption_eliminate(ClauseSet(std::move(collected)));
}

bool is_minimal_premise_set(const ClauseSet& g) {
  if (g.empty()) return false;
  Clause conclusion = pure_clause(g);
  if (!entails(g, conclusion)) return false;
  const auto& cs = g.clauses();
  for (std::uint64_t sel = 0; sel + 1 < (1ULL << cs.size()); ++sel) {
    std::vector<Clause> subset;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (sel >> j & 1) subset.push_back(cs[j]);
    if (entails(ClauseSet(std::move(subset)), conclusion)) return false;
  }
  return true;
}

}  // namespace xcnf
