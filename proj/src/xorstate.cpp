#include "xcnf/detail/xorstate.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "xcnf/resolution.hpp"

namespace xcnf::detail {

namespace {

int clause_negatives(const Clause& c) {
  int neg = 0;
  for (Lit x : c.lits())
    if (!x.positive()) ++neg;
  return neg;
}

// Inserts `row` into a basis kept with unique leading (highest) bits.
// Returns true if the basis grew.
bool basis_insert(std::vector<std::uint64_t>& basis, std::uint64_t row) {
  for (std::uint64_t b : basis) {
    std::uint64_t lead = 1ULL << (63 - std::countl_zero(b));
    if (row & lead) row ^= b;
  }
  if (row == 0) return false;
  basis.push_back(row);
  return true;
}

bool in_span(const std::vector<std::uint64_t>& basis, std::uint64_t row) {
  for (std::uint64_t b : basis) {
    std::uint64_t lead = 1ULL << (63 - std::countl_zero(b));
    if (row & lead) row ^= b;
  }
  return row == 0;
}

}  // namespace

std::optional<AffineForm> recognize_x0(const ClauseSet& f) {
  std::map<std::vector<Var>, std::vector<const Clause*>> groups;
  for (const Clause& c : f.clauses()) groups[c.vars()].push_back(&c);

  AffineForm form;
  form.vars = f.vars();
  if (form.vars.size() > 63) return std::nullopt;
  std::map<Var, int> index;
  for (std::size_t i = 0; i < form.vars.size(); ++i) index[form.vars[i]] = static_cast<int>(i);

  for (auto& [vars, clauses] : groups) {
    std::size_t w = vars.size();
    if (w == 0) {
      form.rows.push_back({0, 1});  // the empty clause: 0 = 1
      continue;
    }
    if (w > 20) return std::nullopt;  // 2^19 clauses per group: not worth recognizing
    std::size_t even = 0, odd = 0;
    for (const Clause* c : clauses) (clause_negatives(*c) % 2 ? odd : even) += 1;
    std::uint64_t mask = 0;
    for (Var v : vars) mask |= 1ULL << index[v];
    std::size_t half = 1ULL << (w - 1);
    if (even == half && odd == half)
      form.rows.insert(form.rows.end(), {{mask, 0}, {mask, 1}});
    else if (odd == half && even == 0)
      form.rows.push_back({mask, 0});  // emitted clauses have odd negatives <=> parity 0
    else if (even == half && odd == 0)
      form.rows.push_back({mask, 1});
    else
      return std::nullopt;
  }
  if (form.rows.size() > 64) return std::nullopt;
  // Groups were checked by counting; confirm exactly (guards duplicate patterns).
  if (x0_image(form) != f) return std::nullopt;
  return form;
}

ClauseSet x0_image(const AffineForm& form) {
  std::vector<Clause> out;
  for (const AffineRow& row : form.rows) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < form.vars.size(); ++i)
      if (row.mask & (1ULL << i)) vars.push_back(form.vars[i]);
    int w = static_cast<int>(vars.size());
    if (w == 0) {
      if (row.parity) out.push_back(Clause{});
      continue;
    }
    if (w > 20) throw CapError("x0_image: row width exceeds cap");
    for (std::uint64_t pat = 0; pat < (1ULL << w); ++pat) {
      if ((std::popcount(pat) & 1) != (row.parity ^ 1)) continue;
      std::vector<Lit> lits;
      for (int i = 0; i < w; ++i)
        lits.push_back(Lit((pat >> i) & 1 ? -vars[static_cast<std::size_t>(i)]
                                          : vars[static_cast<std::size_t>(i)]));
      out.push_back(Clause(std::move(lits)));
    }
  }
  return ClauseSet(std::move(out));
}

AffineEngine::AffineEngine(AffineForm form) : form_(std::move(form)) {
  if (form_.vars.size() > 63) throw CapError("affine engine: more than 63 variables");
  if (form_.rows.size() > 64) throw CapError("affine engine: more than 64 rows");
  col_.assign(form_.vars.size(), 0);
  for (std::size_t j = 0; j < form_.rows.size(); ++j)
    for (std::size_t v = 0; v < form_.vars.size(); ++v)
      if (form_.rows[j].mask & (1ULL << v)) col_[v] |= 1ULL << j;
}

std::uint64_t AffineEngine::mask_of(const std::vector<Var>& vars) const {
  std::uint64_t m = 0;
  for (Var v : vars) {
    auto it = std::lower_bound(form_.vars.begin(), form_.vars.end(), v);
    if (it == form_.vars.end() || *it != v)
      throw Error("variable " + std::to_string(v) + " not in affine system");
    m |= 1ULL << (it - form_.vars.begin());
  }
  return m;
}

AffineEngine::State AffineEngine::initial() const {
  State s;
  for (std::size_t j = 0; j < form_.rows.size(); ++j)
    if (form_.rows[j].parity) s.parity |= 1ULL << j;
  return s;
}

AffineEngine::State AffineEngine::assign(const State& s, int v, bool value) const {
  State t = s;
  if (s.assigned >> v & 1) return t;  // callers only assign fresh variables
  t.assigned |= 1ULL << v;
  if (value) t.parity ^= col_[static_cast<std::size_t>(v)];
  return t;
}

bool AffineEngine::has_bot(const State& s) const {
  for (std::size_t j = 0; j < form_.rows.size(); ++j)
    if (active(s, j) == 0 && (s.parity >> j & 1)) return true;
  return false;
}

std::uint64_t AffineEngine::occurring(const State& s) const {
  std::uint64_t occ = 0;
  for (std::size_t j = 0; j < form_.rows.size(); ++j) occ |= active(s, j);
  return occ;
}

bool AffineEngine::is_top(const State& s) const {
  for (std::size_t j = 0; j < form_.rows.size(); ++j)
    if (active(s, j) != 0 || (s.parity >> j & 1)) return false;
  return true;
}

bool AffineEngine::satisfiable(const State& s) const {
  bool unsat = false;
  rref(s, &unsat);
  return !unsat;
}

std::vector<AffineRow> AffineEngine::rref(const State& s, bool* unsat) const {
  *unsat = false;
  std::vector<AffineRow> rows;
  for (std::size_t j = 0; j < form_.rows.size(); ++j) {
    AffineRow r{active(s, j), static_cast<int>(s.parity >> j & 1)};
    for (const AffineRow& piv : rows) {
      std::uint64_t lead = 1ULL << (63 - std::countl_zero(piv.mask));
      if (r.mask & lead) {
        r.mask ^= piv.mask;
        r.parity ^= piv.parity;
      }
    }
    if (r.mask == 0) {
      if (r.parity) *unsat = true;
      continue;
    }
    rows.push_back(r);
  }
  // Back-substitution: make it a full reduced echelon form.
  std::sort(rows.begin(), rows.end(),
            [](const AffineRow& a, const AffineRow& b) { return a.mask > b.mask; });
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::uint64_t lead = 1ULL << (63 - std::countl_zero(rows[i].mask));
    for (std::size_t j = 0; j < i; ++j)
      if (rows[j].mask & lead) {
        rows[j].mask ^= rows[i].mask;
        rows[j].parity ^= rows[i].parity;
      }
  }
  return rows;
}

std::vector<std::pair<int, bool>> AffineEngine::forced(const State& s) const {
  bool unsat = false;
  auto rows = rref(s, &unsat);
  std::vector<std::pair<int, bool>> out;
  for (const AffineRow& r : rows)
    if (std::popcount(r.mask) == 1)
      out.emplace_back(std::countr_zero(r.mask), r.parity != 0);
  std::sort(out.begin(), out.end());
  return out;
}

AffineEngine::State AffineEngine::ucp(const State& s0) const {
  State s = s0;
  for (;;) {
    if (has_bot(s)) return s;
    bool advanced = false;
    for (std::size_t j = 0; j < form_.rows.size(); ++j) {
      std::uint64_t a = active(s, j);
      if (std::popcount(a) == 1) {
        s = assign(s, std::countr_zero(a), (s.parity >> j & 1) != 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) return s;
  }
}

bool AffineEngine::refutes(const State& s, int k) {
  if (has_bot(s)) return true;
  if (k <= 0) return false;
  auto it = refute_memo_.find(s);
  if (it != refute_memo_.end()) {
    if (k >= it->second.refuted_from) return true;
    if (k <= it->second.not_refuted_up_to) return false;
  }
  bool result = refute_search(s, k);
  RefuteEntry& e = refute_memo_[s];
  if (result)
    e.refuted_from = std::min(e.refuted_from, k);
  else
    e.not_refuted_up_to = std::max(e.not_refuted_up_to, k);
  return result;
}

bool AffineEngine::refute_search(State s, int k) {
  for (;;) {
    if (has_bot(s)) return true;
    std::uint64_t occ = occurring(s);
    bool advanced = false;
    for (std::uint64_t rest = occ; rest && !advanced;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      // positive literal v, then negative
      if (refutes(assign(s, v, false), k - 1)) {
        s = assign(s, v, true);
        advanced = true;
      } else if (refutes(assign(s, v, true), k - 1)) {
        s = assign(s, v, false);
        advanced = true;
      }
    }
    if (!advanced) return false;
  }
}

AffineEngine::State AffineEngine::rk_fixpoint(const State& s0, int k) {
  State s = s0;
  if (k <= 0) return s;
  for (;;) {
    if (has_bot(s)) return s;
    std::uint64_t occ = occurring(s);
    bool advanced = false;
    for (std::uint64_t rest = occ; rest && !advanced;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (refutes(assign(s, v, false), k - 1)) {
        s = assign(s, v, true);
        advanced = true;
      } else if (refutes(assign(s, v, true), k - 1)) {
        s = assign(s, v, false);
        advanced = true;
      }
    }
    if (!advanced) return s;
  }
}

int AffineEngine::min_refuting_k(const State& s) {
  for (int k = 0; k <= 64; ++k)
    if (refutes(s, k)) return k;
  throw Error("min_refuting_k: state is satisfiable");
}

ClauseSet AffineEngine::state_cnf(const State& s) const {
  AffineForm residual;
  residual.vars = form_.vars;
  for (std::size_t j = 0; j < form_.rows.size(); ++j) {
    AffineRow r{active(s, j), static_cast<int>(s.parity >> j & 1)};
    if (r.mask == 0 && r.parity == 0) continue;
    if (std::popcount(r.mask) > 12) throw CapError("state_cnf: residual row too wide");
    residual.rows.push_back(r);
  }
  return x0_image(residual);
}

void AffineEngine::sweep_total(std::uint64_t vmask,
                               const std::function<bool(const State&)>& visit) {
  if (std::popcount(vmask) > 24) throw CapError("affine sweep: scope exceeds 24 variables");
  State base = initial();
  std::vector<std::uint64_t> basis;
  for (std::uint64_t rest = vmask; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    basis_insert(basis, col_[static_cast<std::size_t>(v)]);
  }
  std::uint64_t n_images = 1ULL << basis.size();
  std::uint64_t p = base.parity;
  for (std::uint64_t g = 0;; ++g) {
    State s{vmask, p};
    if (!visit(s)) return;
    if (g + 1 >= n_images) break;
    p ^= basis[static_cast<std::size_t>(std::countr_zero(g + 1))];
  }
}

bool AffineEngine::sweep_states(std::uint64_t vmask,
                                const std::function<bool(const State&)>& visit) {
  if (std::popcount(vmask) > 24) throw CapError("affine sweep: scope exceeds 24 variables");
  State base = initial();
  // Enumerate supports as submasks of vmask; for each, the image of parities.
  std::uint64_t sub = vmask;
  for (;;) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t rest = sub; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      basis_insert(basis, col_[static_cast<std::size_t>(v)]);
    }
    if (basis.size() > 26) throw CapError("affine sweep: parity image too large");
    std::uint64_t n_images = 1ULL << basis.size();
    std::uint64_t p = base.parity;
    for (std::uint64_t g = 0;; ++g) {
      State s{sub, p};
      if (!visit(s)) return false;
      if (g + 1 >= n_images) break;
      p ^= basis[static_cast<std::size_t>(std::countr_zero(g + 1))];
    }
    if (sub == 0) break;
    sub = (sub - 1) & vmask;
  }
  return true;
}

std::vector<std::uint64_t> AffineEngine::combo_supports(std::uint64_t vmask) const {
  std::size_t m = form_.rows.size();
  if (m > 22) throw CapError("affine combos: more than 22 rows");
  std::vector<std::uint64_t> supports;
  std::uint64_t cur = 0;
  for (std::uint64_t g = 1; g < (1ULL << m); ++g) {
    cur ^= form_.rows[static_cast<std::size_t>(std::countr_zero(g))].mask;
    if (cur != 0 && (cur & ~vmask) == 0) supports.push_back(cur);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  return supports;
}

template <typename Eval>
AffineEngine::Result AffineEngine::maximize_over_unsat_states(std::uint64_t vmask, Eval eval) {
  Result res;
  State base = initial();
  bool base_unsat = false;
  rref(base, &base_unsat);
  if (base_unsat) {
    res.value = static_cast<unsigned>(eval(base));
    return res;
  }
  std::optional<State> best_state;
  for (std::uint64_t support : combo_supports(vmask)) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t rest = support; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      basis_insert(basis, col_[static_cast<std::size_t>(v)]);
    }
    std::uint64_t n_images = 1ULL << basis.size();
    std::uint64_t p = base.parity;
    for (std::uint64_t g = 0;; ++g) {
      State s{support, p};
      bool unsat = false;
      rref(s, &unsat);
      if (unsat) {
        unsigned val = static_cast<unsigned>(eval(s));
        if (!best_state || val > res.value) {
          res.value = val;
          best_state = s;
        }
      }
      if (g + 1 >= n_images) break;
      p ^= basis[static_cast<std::size_t>(std::countr_zero(g + 1))];
    }
  }
  if (best_state)
    res.witness = solve_assignment(best_state->assigned, best_state->parity ^ base.parity);
  return res;
}

AffineEngine::Result AffineEngine::hardness(std::uint64_t vmask) {
  return maximize_over_unsat_states(vmask, [&](const State& s) { return min_refuting_k(s); });
}

AffineEngine::Result AffineEngine::asymmetric_width(std::uint64_t vmask) {
  return maximize_over_unsat_states(vmask, [&](const State& s) {
    auto it = width_memo_asym_.find(s);
    if (it != width_memo_asym_.end()) return it->second;
    int w = static_cast<int>(min_asymmetric_refutation_width(state_cnf(s)));
    width_memo_asym_[s] = w;
    return w;
  });
}

AffineEngine::Result AffineEngine::symmetric_width(std::uint64_t vmask) {
  return maximize_over_unsat_states(vmask, [&](const State& s) {
    auto it = width_memo_sym_.find(s);
    if (it != width_memo_sym_.end()) return it->second;
    int w = static_cast<int>(min_symmetric_refutation_width(state_cnf(s)));
    width_memo_sym_[s] = w;
    return w;
  });
}

bool AffineEngine::hd_at_most(std::uint64_t vmask, unsigned k,
                              PartialAssignment* counterexample) {
  State base = initial();
  bool base_unsat = false;
  rref(base, &base_unsat);
  if (base_unsat) return refutes(base, static_cast<int>(k));
  for (std::uint64_t support : combo_supports(vmask)) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t rest = support; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      basis_insert(basis, col_[static_cast<std::size_t>(v)]);
    }
    std::uint64_t n_images = 1ULL << basis.size();
    std::uint64_t p = base.parity;
    for (std::uint64_t g = 0;; ++g) {
      State s{support, p};
      bool unsat = false;
      rref(s, &unsat);
      if (unsat && !refutes(s, static_cast<int>(k))) {
        if (counterexample) *counterexample = solve_assignment(s.assigned, s.parity ^ base.parity);
        return false;
      }
      if (g + 1 >= n_images) break;
      p ^= basis[static_cast<std::size_t>(std::countr_zero(g + 1))];
    }
  }
  return true;
}

bool AffineEngine::phd_at_most(std::uint64_t vmask, unsigned k,
                               PartialAssignment* counterexample) {
  bool ok = sweep_states(vmask, [&](const State& s) {
    bool unsat = false;
    rref(s, &unsat);
    bool good;
    if (unsat) {
      good = refutes(s, static_cast<int>(k));
    } else {
      good = true;
      State fx = rk_fixpoint(s, static_cast<int>(k));
      for (auto [v, val] : forced(fx))
        if (vmask >> v & 1) {
          good = false;
          break;
        }
    }
    if (!good && counterexample)
      *counterexample = solve_assignment(s.assigned, s.parity ^ initial().parity);
    return good;
  });
  return ok;
}

AffineEngine::Result AffineEngine::p_hardness(std::uint64_t vmask) {
  Result res;
  std::optional<State> failing;
  for (unsigned k = 0; k <= static_cast<unsigned>(nvars()) + 2; ++k) {
    std::optional<State> fail_here;
    bool pass = sweep_states(vmask, [&](const State& s) {
      bool unsat = false;
      rref(s, &unsat);
      bool ok;
      if (unsat) {
        ok = refutes(s, static_cast<int>(k));
      } else {
        ok = true;
        State fx = rk_fixpoint(s, static_cast<int>(k));
        for (auto [v, val] : forced(fx))
          if (vmask >> v & 1) {
            ok = false;
            break;
          }
      }
      if (!ok) fail_here = s;
      return ok;
    });
    if (pass) {
      res.value = k;
      if (failing)
        res.witness = solve_assignment(failing->assigned, failing->parity ^ initial().parity);
      return res;
    }
    failing = fail_here;
  }
  throw Error("p_hardness: no level passed (internal)");
}

bool AffineEngine::sat_recognition_r1(std::uint64_t vmask) {
  bool ok = true;
  sweep_total(vmask, [&](const State& s) {
    bool unsat = false;
    rref(s, &unsat);
    if (!unsat && !is_top(ucp(s))) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool AffineEngine::usat_recognition_r1(std::uint64_t vmask) {
  bool ok = true;
  sweep_total(vmask, [&](const State& s) {
    bool unsat = false;
    rref(s, &unsat);
    if (unsat && !has_bot(ucp(s))) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

PartialAssignment AffineEngine::solve_assignment(std::uint64_t support,
                                                 std::uint64_t target) const {
  // Greedy lexicographically least solution of  xor_{v chosen} col(v) = target.
  std::vector<int> vars;
  for (std::uint64_t rest = support; rest;) {
    vars.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  std::vector<std::pair<Var, bool>> entries;
  std::uint64_t remaining = target;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    // Can the rest of the variables reach `remaining` without v?
    std::vector<std::uint64_t> basis;
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      basis_insert(basis, col_[static_cast<std::size_t>(vars[j])]);
    bool value;
    if (in_span(basis, remaining)) {
      value = false;
    } else {
      value = true;
      remaining ^= col_[static_cast<std::size_t>(vars[i])];
    }
    entries.emplace_back(form_.vars[static_cast<std::size_t>(vars[i])], value);
  }
  if (remaining != 0) throw Error("solve_assignment: inconsistent target (internal)");
  return PartialAssignment(std::move(entries));
}

}  // namespace xcnf::detail
