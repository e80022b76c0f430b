#include "xcnf/verify.hpp"

#include <algorithm>
#include <sstream>

#include "xcnf/detail/parallel.hpp"
#include "xcnf/detail/smallfunc.hpp"
#include "xcnf/reductions.hpp"

namespace xcnf {

namespace {

std::vector<Var> merge_vars(std::vector<Var> a, const std::vector<Var>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

SemanticFunction SemanticFunction::from_cnf(ClauseSet f) {
  SemanticFunction s;
  s.vars = f.vars();
  s.cnf = std::move(f);
  return s;
}

SemanticFunction SemanticFunction::from_xor(const XorClauseSet& f) {
  SemanticFunction s;
  s.vars = f.clauses.vars();
  s.xors = f.clauses;
  return s;
}

SemanticFunction SemanticFunction::from_xnf(const XnfFile& f) {
  SemanticFunction s;
  s.cnf = f.cnf;
  s.xors = f.xors;
  s.vars = merge_vars(f.cnf.vars(), f.xors.vars());
  return s;
}

// var(f) is the full input set: the recognition guarantees of the Tseitin
// translations propagate from the sources up and need every input assigned.
SemanticFunction SemanticFunction::from_circuit(Circuit c) {
  c.validate();
  SemanticFunction s;
  s.vars = c.inputs;
  s.circuit = std::move(c);
  return s;
}

bool SemanticFunction::eval(const PartialAssignment& total) const {
  for (const Clause& c : cnf.clauses()) {
    bool sat = false;
    for (Lit x : c.lits())
      if (total.value(x).value_or(false)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  for (const Clause& c : xors.clauses()) {
    int sum = 0;
    for (Lit x : c.lits()) {
      auto b = total.value(x);
      if (!b) throw Error("SemanticFunction::eval: assignment not total");
      sum ^= *b ? 1 : 0;
    }
    if (sum != 0) return false;
  }
  if (circuit && !eval_circuit(*circuit, total)) return false;
  return true;
}

namespace {

PartialAssignment assignment_of_index(const std::vector<Var>& vars, std::uint64_t idx) {
  std::vector<std::pair<Var, bool>> entries;
  entries.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    entries.emplace_back(vars[i], (idx >> i & 1) != 0);
  return PartialAssignment(std::move(entries));
}

void require_cap(const SemanticFunction& f, const VerifyOptions& opts) {
  if (f.n() > opts.cap_n)
    throw CapError("verify: n(f) = " + std::to_string(f.n()) + " exceeds cap " +
                   std::to_string(opts.cap_n));
}

void require_scope(const ClauseSet& rep, const SemanticFunction& f) {
  auto rv = rep.vars();
  for (Var v : f.vars)
    if (!std::binary_search(rv.begin(), rv.end(), v))
      throw Error("verify: var(f) must be contained in var(F); missing " + std::to_string(v));
}

Verdict fail(std::string property, std::optional<PartialAssignment> cex = std::nullopt) {
  Verdict v;
  v.property = std::move(property);
  v.pass = false;
  v.counterexample = std::move(cex);
  return v;
}

Verdict pass(std::string property) {
  Verdict v;
  v.property = std::move(property);
  v.pass = true;
  return v;
}

ClauseSet apply_reduction(const ClauseSet& g, ReductionSpec r, RefutationOracle& oracle) {
  switch (r.kind) {
    case ReductionKind::R1: return oracle.reduce(g, 1).reduced;
    case ReductionKind::Ropl: return ropl(g);
    case ReductionKind::Rinf: return r_inf(g).reduced;
    case ReductionKind::Rk: return oracle.reduce(g, r.k).reduced;
  }
  return g;
}

std::string reduction_suffix(ReductionSpec r) {
  switch (r.kind) {
    case ReductionKind::R1: return "r1";
    case ReductionKind::Ropl: return "ropl";
    case ReductionKind::Rinf: return "rinf";
    case ReductionKind::Rk: return "r" + std::to_string(r.k);
  }
  return "?";
}

}  // namespace

std::string Verdict::str() const {
  std::ostringstream os;
  os << property << ' ' << (pass ? "PASS" : "FAIL");
  if (!pass && counterexample) {
    os << " counterexample: v";
    for (auto& [v, b] : counterexample->entries()) os << ' ' << (b ? v : -v);
    os << " 0";
  }
  return os.str();
}

Verdict is_representation(const ClauseSet& rep, const SemanticFunction& f,
                          const VerifyOptions& opts) {
  require_cap(f, opts);
  require_scope(rep, f);
  std::uint64_t total = 1ULL << f.n();
  auto bad = detail::first_failure(total, opts.threads, [&](std::uint64_t idx) {
    PartialAssignment phi = assignment_of_index(f.vars, idx);
    return sat_decide(apply(phi, rep)) == f.eval(phi);
  });
  if (bad) return fail("rep", assignment_of_index(f.vars, *bad));
  if (opts.primec_cross_check && rep.n() <= 8 && rep.c() <= 16 && f.n() <= 8) {
    // Lemma-style cross-check: primes of f == primes of F over var(f).
    ClauseSet f_primes = detail::function_primes(f.vars, [&](std::uint64_t idx) {
      return f.eval(assignment_of_index(f.vars, idx));
    });
    std::vector<Clause> projected;
    auto fv = f.vars;
    ClauseSet rep_primes = prime_implicates(rep);
    for (const Clause& c : rep_primes.clauses()) {
      bool inside = true;
      for (Var v : c.vars())
        if (!std::binary_search(fv.begin(), fv.end(), v)) inside = false;
      if (inside) projected.push_back(c);
    }
    if (f_primes != ClauseSet(std::move(projected))) return fail("rep");
  }
  return pass("rep");
}

namespace {

Verdict threshold_verdict(const ClauseSet& rep, const SemanticFunction& f,
                          const VerifyOptions& opts, bool p_variant, std::string name) {
  Verdict repr = is_representation(rep, f, opts);
  if (!repr.pass) return fail(std::move(name), std::move(repr.counterexample));
  PartialAssignment cex;
  bool ok = p_variant ? phd_at_most(rep, f.vars, 1, opts.measure, &cex)
                      : hd_at_most(rep, f.vars, 1, opts.measure, &cex);
  if (ok) return pass(std::move(name));
  return fail(std::move(name), std::move(cex));
}

}  // namespace

Verdict is_gac(const ClauseSet& rep, const SemanticFunction& f, const VerifyOptions& opts) {
  return threshold_verdict(rep, f, opts, true, "gac");
}

Verdict is_ur(const ClauseSet& rep, const SemanticFunction& f, const VerifyOptions& opts) {
  return threshold_verdict(rep, f, opts, false, "ur");
}

Verdict has_sat_recognition(const ClauseSet& rep, const SemanticFunction& f, ReductionSpec r,
                            const VerifyOptions& opts) {
  require_cap(f, opts);
  require_scope(rep, f);
  std::string name = "satrec-" + reduction_suffix(r);
  RefutationOracle oracle;
  std::uint64_t total = 1ULL << f.n();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    PartialAssignment phi = assignment_of_index(f.vars, idx);
    ClauseSet g = apply(phi, rep);
    if (!sat_decide(g)) continue;
    if (!apply_reduction(g, r, oracle).empty()) return fail(name, phi);
  }
  return pass(name);
}

Verdict has_usat_recognition(const ClauseSet& rep, const SemanticFunction& f, ReductionSpec r,
                             const VerifyOptions& opts) {
  require_cap(f, opts);
  require_scope(rep, f);
  std::string name = "usatrec-" + reduction_suffix(r);
  RefutationOracle oracle;
  std::uint64_t total = 1ULL << f.n();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    PartialAssignment phi = assignment_of_index(f.vars, idx);
    ClauseSet g = apply(phi, rep);
    if (sat_decide(g)) continue;
    ClauseSet red = apply_reduction(g, r, oracle);
    if (!(red.has_empty_clause() && red.c() == 1)) return fail(name, phi);
  }
  return pass(name);
}

Verdict is_up_representation(const ClauseSet& rep, const SemanticFunction& f,
                             const VerifyOptions& opts) {
  Verdict repr = is_representation(rep, f, opts);
  if (!repr.pass) return fail("up", std::move(repr.counterexample));
  Verdict s = has_sat_recognition(rep, f, {ReductionKind::R1, 1}, opts);
  if (!s.pass) return fail("up", std::move(s.counterexample));
  Verdict u = has_usat_recognition(rep, f, {ReductionKind::R1, 1}, opts);
  if (!u.pass) return fail("up", std::move(u.counterexample));
  return pass("up");
}

Verdict is_forcing(const ClauseSet& rep, const SemanticFunction& f, const VerifyOptions& opts) {
  Verdict g = is_gac(rep, f, opts);
  if (!g.pass) return fail("forcing", std::move(g.counterexample));
  Verdict s = has_sat_recognition(rep, f, {ReductionKind::R1, 1}, opts);
  if (!s.pass) return fail("forcing", std::move(s.counterexample));
  return pass("forcing");
}

Verdict is_absolute_forcing(const ClauseSet& rep, const SemanticFunction& f,
                            const VerifyOptions& opts) {
  Verdict fo = is_forcing(rep, f, opts);
  if (!fo.pass) return fail("absolute-forcing", std::move(fo.counterexample));
  PartialAssignment cex;
  if (!phd_at_most(rep, rep.vars(), 1, opts.measure, &cex))
    return fail("absolute-forcing", std::move(cex));
  return pass("absolute-forcing");
}

}  // namespace xcnf
