#include "xcnf/reductions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

namespace xcnf {

namespace {

// ---------------------------------------------------------------------------
// DPLL engine over an indexed copy of the clause-set.  No watched literals,
// no learning; counting-based unit detection is plenty at oracle scale.

class Dpll {
 public:
  explicit Dpll(const ClauseSet& f) {
    vars_ = f.vars();
    var_index_.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = static_cast<int>(i);
    clauses_.reserve(f.c());
    for (const Clause& c : f.clauses()) {
      std::vector<int> lits;
      lits.reserve(c.size());
      for (Lit x : c.lits()) {
        int idx = var_index_[x.var()] + 1;
        lits.push_back(x.positive() ? idx : -idx);
      }
      clauses_.push_back(std::move(lits));
    }
    value_.assign(vars_.size() + 1, 0);  // 0 unassigned, +1 true, -1 false
    occ_.assign(2 * (vars_.size() + 1), {});
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
      for (int l : clauses_[ci]) occ_[slot(l)].push_back(ci);
  }

  bool solve() {
    std::vector<int> trail;
    // seed units (and detect empty clauses)
    for (const auto& cl : clauses_) {
      if (cl.empty()) return false;
      if (cl.size() == 1 && !assign(cl[0], trail)) {
        undo(trail);
        return false;
      }
    }
    bool result = search(trail, 0);
    undo(trail);
    return result;
  }

 private:
  static std::size_t slot_of(int l) {
    return 2 * static_cast<std::size_t>(l > 0 ? l : -l) + (l > 0 ? 0 : 1);
  }
  std::size_t slot(int l) const { return slot_of(l); }

  int lit_value(int l) const {
    int v = value_[static_cast<std::size_t>(std::abs(l))];
    return l > 0 ? v : -v;
  }

  // Returns false on immediate inconsistency; trail records for undo and
  // doubles as the propagation queue.
  bool assign(int l, std::vector<int>& trail) {
    int v = std::abs(l);
    int want = l > 0 ? 1 : -1;
    if (value_[static_cast<std::size_t>(v)] != 0)
      return value_[static_cast<std::size_t>(v)] == want;
    value_[static_cast<std::size_t>(v)] = want;
    trail.push_back(l);
    return true;
  }

  // Processes trail entries from `head` on: every clause holding the
  // complement of a newly true literal is rescanned.
  bool propagate(std::vector<int>& trail, std::size_t head) {
    while (head < trail.size()) {
      int l = trail[head++];
      for (std::size_t ci : occ_[slot(-l)]) {
        const auto& cl = clauses_[ci];
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int m : cl) {
          int val = lit_value(m);
          if (val > 0) {
            sat = true;
            break;
          }
          if (val == 0) {
            ++unassigned;
            last = m;
            if (unassigned > 1) break;
          }
        }
        if (sat || unassigned > 1) continue;
        if (unassigned == 0) return false;
        if (!assign(last, trail)) return false;
      }
    }
    return true;
  }

  int pick_branch() const {
    for (std::size_t v = 1; v < value_.size(); ++v)
      if (value_[v] == 0) return static_cast<int>(v);
    return 0;
  }

  bool search(std::vector<int>& trail, std::size_t head) {
    if (!propagate(trail, head)) return false;
    int v = pick_branch();
    if (v == 0) return true;  // total assignment without conflict
    for (int phase : {1, -1}) {
      std::vector<int> sub;
      if (assign(phase * v, sub) && search(sub, 0)) {
        for (int w : sub) trail.push_back(w);  // keep; caller undoes
        return true;
      }
      undo(sub);
    }
    return false;
  }

  void undo(std::vector<int>& trail) {
    for (int l : trail) value_[static_cast<std::size_t>(std::abs(l))] = 0;
    trail.clear();
  }

  std::vector<Var> vars_;
  std::unordered_map<Var, int> var_index_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> occ_;
};

// ---------------------------------------------------------------------------
// Queue-based unit propagation; the k = 1 case of r_k, fast enough for the
// large Tseitin-style clause-sets the circuit bridge produces.

ReductionResult fast_ucp(const ClauseSet& f) {
  if (f.has_empty_clause()) return {ClauseSet{Clause{}}, PartialAssignment()};
  auto vars = f.vars();
  std::unordered_map<Var, int> index;
  index.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> clauses;
  clauses.reserve(f.c());
  for (const Clause& c : f.clauses()) {
    std::vector<int> lits;
    for (Lit x : c.lits()) lits.push_back(x.positive() ? index[x.var()] : -index[x.var()]);
    clauses.push_back(std::move(lits));
  }
  std::vector<int> value(vars.size() + 1, 0);
  std::vector<std::vector<std::size_t>> occ(2 * (vars.size() + 1));
  for (std::size_t ci = 0; ci < clauses.size(); ++ci)
    for (int l : clauses[ci])
      occ[2 * static_cast<std::size_t>(std::abs(l)) + (l > 0 ? 0 : 1)].push_back(ci);
  auto lit_value = [&](int l) {
    int v = value[static_cast<std::size_t>(std::abs(l))];
    return l > 0 ? v : -v;
  };
  std::vector<int> queue;
  bool conflict = false;
  auto enqueue = [&](int l) {
    int v = std::abs(l);
    if (value[static_cast<std::size_t>(v)] != 0) {
      if (lit_value(l) < 0) conflict = true;
      return;
    }
    value[static_cast<std::size_t>(v)] = l > 0 ? 1 : -1;
    queue.push_back(l);
  };
  for (const auto& cl : clauses)
    if (cl.size() == 1) enqueue(cl[0]);
  for (std::size_t head = 0; head < queue.size() && !conflict; ++head) {
    int l = queue[head];
    for (std::size_t ci : occ[2 * static_cast<std::size_t>(std::abs(l)) + (l > 0 ? 1 : 0)]) {
      const auto& cl = clauses[ci];
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int m : cl) {
        int val = lit_value(m);
        if (val > 0) {
          sat = true;
          break;
        }
        if (val == 0) {
          ++unassigned;
          last = m;
          if (unassigned > 1) break;
        }
      }
      if (sat || unassigned > 1) continue;
      if (unassigned == 0) {
        conflict = true;
        break;
      }
      enqueue(last);
    }
  }
  if (conflict) return {ClauseSet{Clause{}}, PartialAssignment()};
  std::vector<std::pair<Var, bool>> entries;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (value[i + 1] != 0) entries.emplace_back(vars[i], value[i + 1] > 0);
  PartialAssignment phi(std::move(entries));
  return {apply(phi, f), phi};
}

// ---------------------------------------------------------------------------
// r_k with per-call memoization of refutation queries.

struct RkEngine {
  // key: canonical flattening of a clause-set; value: for which k refutation
  // status is known. lo = max k known NOT to refute, hi = min k known to refute.
  struct Entry {
    int not_refuted_up_to = -1;
    int refuted_from = INT32_MAX;
  };
  std::map<std::vector<int>, Entry> memo;
  LitOrder order;

  static std::vector<int> key(const ClauseSet& f) {
    std::vector<int> k;
    k.reserve(f.ell() + f.c());
    for (const Clause& c : f.clauses()) {
      for (Lit x : c.lits()) k.push_back(x.value());
      k.push_back(0);
    }
    return k;
  }

  std::vector<Lit> candidate_lits(const ClauseSet& f) const {
    std::vector<Lit> lits;
    for (Var v : f.vars()) {
      lits.push_back(Lit(v));
      lits.push_back(Lit(-v));
    }
    if (order == LitOrder::Descending) std::reverse(lits.begin(), lits.end());
    return lits;
  }

  bool refutes(const ClauseSet& f, int k) {
    if (f.has_empty_clause()) return true;
    if (k <= 0) return false;
    if (k == 1) return fast_ucp(f).reduced.has_empty_clause();
    auto ky = key(f);
    auto it = memo.find(ky);
    if (it != memo.end()) {
      if (k >= it->second.refuted_from) return true;
      if (k <= it->second.not_refuted_up_to) return false;
    }
    bool result = refute_search(f, k);
    Entry& e = memo[std::move(ky)];
    if (result)
      e.refuted_from = std::min(e.refuted_from, k);
    else
      e.not_refuted_up_to = std::max(e.not_refuted_up_to, k);
    return result;
  }

  // Core of r_k on unsat-detection: repeatedly set failed literals.
  bool refute_search(ClauseSet f, int k) {
    for (;;) {
      if (f.has_empty_clause()) return true;
      bool advanced = false;
      for (Lit x : candidate_lits(f)) {
        ClauseSet probe = apply(PartialAssignment().with(x, false), f);
        if (refutes(probe, k - 1)) {
          f = apply(PartialAssignment().with(x, true), f);
          advanced = true;
          break;
        }
      }
      if (!advanced) return false;
    }
  }

  ReductionResult reduce(const ClauseSet& f0, unsigned k) {
    ClauseSet f = f0;
    PartialAssignment phi;
    if (k == 0)
      return {f.has_empty_clause() ? ClauseSet{Clause{}} : f, PartialAssignment()};
    if (k == 1) return fast_ucp(f0);
    for (;;) {
      if (f.has_empty_clause()) return {ClauseSet{Clause{}}, phi};
      bool advanced = false;
      for (Lit x : candidate_lits(f)) {
        ClauseSet probe = apply(PartialAssignment().with(x, false), f);
        if (refutes(probe, static_cast<int>(k) - 1)) {
          phi = phi.with(x, true);
          f = apply(PartialAssignment().with(x, true), f);
          advanced = true;
          break;
        }
      }
      if (!advanced) return {f, phi};
    }
  }
};

}  // namespace

bool sat_decide(const ClauseSet& f) {
  if (f.empty()) return true;
  if (f.has_empty_clause()) return false;
  Dpll solver(f);
  return solver.solve();
}

struct RefutationOracle::Impl {
  RkEngine engine;
};

RefutationOracle::RefutationOracle(LitOrder order) : impl_(std::make_unique<Impl>()) {
  impl_->engine.order = order;
}
RefutationOracle::~RefutationOracle() = default;
RefutationOracle::RefutationOracle(RefutationOracle&&) noexcept = default;

bool RefutationOracle::refutes(const ClauseSet& f, int k) {
  return impl_->engine.refutes(f, k);
}

ReductionResult RefutationOracle::reduce(const ClauseSet& f, unsigned k) {
  return impl_->engine.reduce(f, k);
}

ReductionResult r_k(unsigned k, const ClauseSet& f, LitOrder order) {
  RkEngine engine;
  engine.order = order;
  return engine.reduce(f, k);
}

ForcedLiterals forced_literals(const ClauseSet& f) {
  ForcedLiterals out;
  if (!sat_decide(f)) {
    out.all = true;
    return out;
  }
  std::vector<Lit> forced;
  for (Var v : f.vars()) {
    for (Lit x : {Lit(v), Lit(-v)}) {
      if (!sat_decide(apply(PartialAssignment().with(x, false), f))) forced.push_back(x);
    }
  }
  out.literals = Clause(std::move(forced));  // cannot clash: F is satisfiable
  return out;
}

ReductionResult r_inf(const ClauseSet& f0) {
  ClauseSet f = f0;
  PartialAssignment phi;
  for (;;) {
    if (!sat_decide(f)) return {ClauseSet{Clause{}}, phi};
    ForcedLiterals frl = forced_literals(f);
    if (frl.literals.empty()) return {f, phi};
    for (Lit x : frl.literals.lits()) phi = phi.with(x, true);
    f = apply(phi, f0);
  }
}

ClauseSet ropl(const ClauseSet& f0) {
  ClauseSet f = r_k(1, f0).reduced;
  for (;;) {
    if (f.has_empty_clause() || f.empty()) return f;
    Clause pure = pure_clause(f);
    if (pure.empty()) return f;
    PartialAssignment phi;
    for (Lit x : pure.lits()) phi = phi.with(x, true);
    f = r_k(1, apply(phi, f)).reduced;
  }
}

}  // namespace xcnf
