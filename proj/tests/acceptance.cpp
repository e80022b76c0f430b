// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything here is pinned to explicit expected values; random
// corpora use fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "xcnf/circuits.hpp"
#include "xcnf/io.hpp"
#include "xcnf/measures.hpp"
#include "xcnf/reductions.hpp"
#include "xcnf/resolution.hpp"
#include "xcnf/verify.hpp"
#include "xcnf/xortrans.hpp"

using namespace xcnf;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++failures;
  std::printf("CRITERION %2d: %s — %s (%s, %lld ms)\n", number, ok ? "PASS" : "FAIL",
              title.c_str(), detail.c_str(), static_cast<long long>(ms));
  std::fflush(stdout);
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

MeasureOptions fast_opts() {
  MeasureOptions m;
  m.fast_cutoff = 0;  // engage the affine engine whenever the shape allows
  return m;
}

VerifyOptions fast_verify() {
  VerifyOptions v;
  v.measure = fast_opts();
  return v;
}

ClauseSet full_clauses(int k, bool prime_variant) {
  std::vector<Clause> out;
  for (int pat = 0; pat < (1 << k); ++pat) {
    std::vector<Lit> lits;
    for (int i = 0; i < k; ++i) lits.push_back(Lit(pat >> i & 1 ? -(i + 1) : i + 1));
    if (prime_variant) lits.push_back(Lit(k + 1));
    out.push_back(Clause(std::move(lits)));
  }
  return ClauseSet(std::move(out));
}

Clause random_xor_clause(std::mt19937& rng, int max_var, int min_w, int max_w) {
  std::uniform_int_distribution<int> width(min_w, max_w);
  int w = width(rng);
  std::set<int> vars;
  while (static_cast<int>(vars.size()) < w)
    vars.insert(static_cast<int>(rng() % static_cast<unsigned>(max_var)) + 1);
  std::vector<Lit> lits;
  for (int v : vars) lits.push_back(Lit(rng() & 1 ? v : -v));
  return Clause(std::move(lits));
}

// --------------------------------------------------------------------------

std::string criterion1() {
  for (int n = 3; n <= 8; ++n) {
    ClauseSet tn = generate_tn(n);
    require(tn.n() == static_cast<std::size_t>(3 * n - 4), "n(T_n)");
    require(tn.c() == static_cast<std::size_t>(8 * n - 12), "c(T_n)");
    require(tn.ell() == static_cast<std::size_t>(24 * n - 40), "ell(T_n)");
    require(asymmetric_width(tn, tn.vars(), fast_opts()).value == 3, "whd(T_n) == 3");
    require(symmetric_width(tn, tn.vars(), fast_opts()).value == 3, "wid(T_n) == 3");
    Proof p = build_tn_refutation(n);
    require(p.size() == static_cast<std::size_t>(18 * n - 29), "proof size 18n-29");
    require(p.max_clause_length() <= 3, "proof width <= 3");
    auto rep = check_proof(p, tn, Clause{});
    require(rep.ok, "checker accepts: " + rep.diagnostic);
  }
  return "n in {3..8}: sizes, whd = wid = 3, 18n-29-clause refutations checked";
}

// Criterion 2 helper: canonical flip form of a pair.  Flips never change
// variable ids, X1 commutes with them modulo auxiliary renaming, and all
// measures are isomorphism-invariant (property-tested in the unit suites).
struct PairShape {
  int a, b, i;
  std::uint32_t sigma;  // signs of D on the shared block after normalization
  bool operator<(const PairShape& o) const {
    return std::tie(a, b, i, sigma) < std::tie(o.a, o.b, o.i, o.sigma);
  }
};

std::string criterion2() {
  long instances = 0, corner = 0, spot_checks = 0;
  std::map<PairShape, unsigned> measured;
  MeasureOptions direct = fast_opts();
  long stride_counter = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int i = 0; i <= std::min({a, b, 4}); ++i) {
        // variables: shared 1..i, C-only i+1..a, D-only a+1..a+(b-i)
        for (std::uint32_t cs = 0; cs < (1u << a); ++cs)
          for (std::uint32_t ds = 0; ds < (1u << b); ++ds) {
            std::vector<Lit> c_lits, d_lits;
            for (int j = 0; j < a; ++j) {
              int v = j < i ? j + 1 : (j - i) + i + 1;  // 1..a
              c_lits.push_back(Lit(cs >> j & 1 ? -v : v));
            }
            for (int j = 0; j < b; ++j) {
              int v = j < i ? j + 1 : a + (j - i) + 1;
              d_lits.push_back(Lit(ds >> j & 1 ? -v : v));
            }
            Clause c(c_lits), d(d_lits);
            // hypothesis: pair XOR-unsatisfiable, or union strictly larger
            bool same_vars = (a == i && b == i);
            if (same_vars) {
              bool unsat_pair = ((std::popcount(cs) + std::popcount(ds)) & 1) != 0;
              if (!unsat_pair) continue;
            }
            ++instances;
            unsigned expected = std::max(1, i);
            bool is_corner = (i == 0 && a <= 2 && b <= 2);
            if (is_corner) {
              expected = 0;  // aux-free disjoint pairs; see the notes
              ++corner;
            }
            // canonicalize under flips: C positive, D positive off the
            // shared block
            std::uint32_t sigma = 0;
            for (int j = 0; j < i; ++j) {
              bool d_neg = (ds >> j & 1) != 0;
              bool c_neg = (cs >> j & 1) != 0;
              if (d_neg != c_neg) sigma |= 1u << j;
            }
            PairShape shape{a, b, i, sigma};
            auto it = measured.find(shape);
            if (it == measured.end()) {
              std::vector<Lit> cc, dd;
              for (int j = 1; j <= a; ++j) cc.push_back(Lit(j));
              for (int j = 0; j < b; ++j) {
                int v = j < i ? j + 1 : a + (j - i) + 1;
                dd.push_back(Lit(sigma >> j & 1 ? -v : v));
              }
              ClauseSet f = x1_set(XorClauseSet{ClauseSet{Clause(cc), Clause(dd)}});
              it = measured.emplace(shape, hardness(f, f.vars(), direct).value).first;
            }
            require(it->second == expected,
                    "hd(X1({C,D})) = " + std::to_string(it->second) + ", expected " +
                        std::to_string(expected) + " at a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " i=" + std::to_string(i));
            // spot-check: measure a sample of instances directly, without
            // the flip canonicalization
            if (++stride_counter % 1973 == 0 && a + b <= 10) {
              ClauseSet f = x1_set(XorClauseSet{ClauseSet{c, d}});
              require(hardness(f, f.vars(), direct).value == expected,
                      "direct measurement disagrees at a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " i=" + std::to_string(i));
              ++spot_checks;
            }
          }
      }
  std::ostringstream os;
  os << instances << " instances over " << measured.size() << " flip classes, "
     << spot_checks << " direct spot-checks, " << corner
     << " aux-free disjoint pairs measuring 0 (see notes)";
  return os.str();
}

std::string criterion3() {
  std::mt19937 rng(20260810);
  int done = 0;
  while (done < 200) {
    Clause c = random_xor_clause(rng, 8, 1, 6);
    Clause d = random_xor_clause(rng, 8, 1, 6);
    XorClauseSet f{ClauseSet{c, d}};
    if (f.clauses.c() != 2) continue;  // identical clauses collapse
    ++done;
    ClauseSet rep = x1_set(f);
    unsigned wid = symmetric_width(rep, rep.vars(), fast_opts()).value;
    require(wid <= 3, "wid(X1(F)) = " + std::to_string(wid) + " > 3 for " + f.clauses.str());
  }
  return "200 random two-clause systems, wid(X1) <= 3 exact";
}

std::string criterion4() {
  VerifyOptions opts = fast_verify();
  long done = 0;
  auto check_one = [&](const XorClauseSet& f) {
    XorClauseSet fs = f_star(f);
    require(fs.clauses.c() <= (1ULL << f.clauses.c()), "c(F*) <= 2^c(F)");
    ClauseSet rep = x1_set(fs);
    SemanticFunction sem = SemanticFunction::from_xor(f);
    Verdict gac = is_gac(rep, sem, opts);
    require(gac.pass, "GAC fails on " + f.clauses.str() + ": " + gac.str());
    Verdict sr = has_sat_recognition(rep, sem, {ReductionKind::R1, 1}, opts);
    require(sr.pass, "sat-recognition fails on " + f.clauses.str());
    ++done;
  };
  // randomized corpus
  std::mt19937 rng(20260811);
  int random_done = 0;
  while (random_done < 200) {
    int m = 1 + static_cast<int>(rng() % 3);
    std::vector<Clause> rows;
    for (int j = 0; j < m; ++j) rows.push_back(random_xor_clause(rng, 8, 1, 8));
    XorClauseSet f{ClauseSet(std::move(rows))};
    if (!xor_sat(f)) continue;
    check_one(f);
    ++random_done;
  }
  // exhaustive: all systems with n(F) <= 4 and c(F) <= 3, modulo XOR-clause
  // equivalence (the clause type is a set; equivalent literal patterns give
  // the same clause object after canonicalization)
  std::vector<Clause> universe;
  for (std::uint32_t support = 1; support < 16; ++support)
    for (int parity = 0; parity <= 1; ++parity) {
      std::vector<Lit> lits;
      for (int v = 1; v <= 4; ++v)
        if (support >> (v - 1) & 1) lits.push_back(Lit(v));
      if (parity) lits.front() = lits.front().complement();
      universe.push_back(Clause(std::move(lits)));
    }
  long exhaustive_done = 0;
  for (std::size_t x = 0; x < universe.size(); ++x)
    for (std::size_t y = x; y < universe.size(); ++y)
      for (std::size_t z = y; z < universe.size(); ++z) {
        ClauseSet rows{universe[x], universe[y], universe[z]};
        XorClauseSet f{rows};
        if (!xor_sat(f)) continue;
        check_one(f);
        ++exhaustive_done;
      }
  std::ostringstream os;
  os << random_done << " random + " << exhaustive_done
     << " exhaustive small systems: GAC and r1 sat-recognition";
  (void)done;
  return os.str();
}

std::string criterion5() {
  VerifyOptions opts = fast_verify();
  long instances = 0, spot = 0;
  std::map<PairShape, bool> verdicts;
  long stride = 0;
  for (int i = 2; i <= 3; ++i)
    for (int a = i + 1; a <= 5; ++a)
      for (int b = i + 1; b <= 5; ++b)
        for (std::uint32_t cs = 0; cs < (1u << a); ++cs)
          for (std::uint32_t ds = 0; ds < (1u << b); ++ds) {
            std::vector<Lit> c_lits, d_lits;
            for (int j = 0; j < a; ++j)
              c_lits.push_back(Lit(cs >> j & 1 ? -(j + 1) : j + 1));
            for (int j = 0; j < b; ++j) {
              int v = j < i ? j + 1 : a + (j - i) + 1;
              d_lits.push_back(Lit(ds >> j & 1 ? -v : v));
            }
            Clause c(c_lits), d(d_lits);
            ++instances;
            std::uint32_t sigma = 0;
            for (int j = 0; j < i; ++j)
              if (((ds >> j) & 1) != ((cs >> j) & 1)) sigma |= 1u << j;
            PairShape shape{a, b, i, sigma};
            auto it = verdicts.find(shape);
            if (it == verdicts.end()) {
              std::vector<Lit> cc, dd;
              for (int j = 1; j <= a; ++j) cc.push_back(Lit(j));
              for (int j = 0; j < b; ++j) {
                int v = j < i ? j + 1 : a + (j - i) + 1;
                dd.push_back(Lit(sigma >> j & 1 ? -v : v));
              }
              Clause ccanon(cc), dcanon(dd);
              X2Result r = x2(ccanon, dcanon);
              SemanticFunction sem =
                  SemanticFunction::from_xor(XorClauseSet{ClauseSet{ccanon, dcanon}});
              it = verdicts.emplace(shape, is_absolute_forcing(r.cnf, sem, opts).pass).first;
            }
            require(it->second, "absolute forcing fails at a=" + std::to_string(a) +
                                    " b=" + std::to_string(b) + " i=" + std::to_string(i) +
                                    " sigma=" + std::to_string(sigma));
            if (++stride % 611 == 0) {
              X2Result r = x2(c, d);
              SemanticFunction sem =
                  SemanticFunction::from_xor(XorClauseSet{ClauseSet{c, d}});
              require(is_absolute_forcing(r.cnf, sem, opts).pass,
                      "direct absolute-forcing check fails");
              ++spot;
            }
          }
  std::ostringstream os;
  os << instances << " instances over " << verdicts.size() << " flip classes, " << spot
     << " direct spot-checks";
  return os.str();
}

std::string criterion6() {
  for (int k = 1; k <= 4; ++k) {
    ClauseSet ak = full_clauses(k, false);
    require(hardness(ak, ak.vars()).value == static_cast<unsigned>(k), "hd(A_k) = k");
    require(p_hardness(ak, ak.vars()).value == static_cast<unsigned>(k), "phd(A_k) = k");
    ClauseSet akp = full_clauses(k, true);
    require(hardness(akp, akp.vars()).value == static_cast<unsigned>(k), "hd(A_k') = k");
    require(p_hardness(akp, akp.vars()).value == static_cast<unsigned>(k + 1),
            "phd(A_k') = k+1");
  }
  return "k in {1..4}: hd(A_k) = phd(A_k) = k, hd(A_k') = k, phd(A_k') = k+1";
}

std::string criterion7() {
  std::mt19937 rng(20260812);
  std::vector<ClauseSet> corpus;
  corpus.push_back(ClauseSet{Clause{1}, Clause{-1, 2}, Clause{-1, -2, 3}});
  corpus.push_back(ClauseSet{Clause{1, 3}, Clause{-1, 3}, Clause{2, -3}, Clause{-2, -3}});
  corpus.push_back(full_clauses(3, false));
  corpus.push_back(full_clauses(2, true));
  corpus.push_back(generate_tn(3));
  while (corpus.size() < 40) {
    std::vector<Clause> cs;
    int m = 1 + static_cast<int>(rng() % 8);
    for (int j = 0; j < m; ++j) {
      std::set<int> vars;
      int w = static_cast<int>(rng() % 4);
      while (static_cast<int>(vars.size()) < w)
        vars.insert(static_cast<int>(rng() % 6) + 1);
      std::vector<Lit> lits;
      for (int v : vars) lits.push_back(Lit(rng() & 1 ? v : -v));
      cs.push_back(Clause(std::move(lits)));
    }
    ClauseSet f(std::move(cs));
    if (f.n() <= 6) corpus.push_back(std::move(f));
  }
  long checks = 0;
  for (const ClauseSet& f : corpus) {
    auto vars = f.vars();
    std::size_t max_p = 0;
    for (const Clause& c : f.clauses()) max_p = std::max(max_p, c.size());
    for (std::uint32_t mask = 0; mask < (1u << vars.size()); ++mask) {
      std::vector<Var> scope;
      for (std::size_t j = 0; j < vars.size(); ++j)
        if (mask >> j & 1) scope.push_back(vars[j]);
      unsigned hd = hardness(f, scope).value;
      unsigned phd = p_hardness(f, scope).value;
      unsigned whd = asymmetric_width(f, scope).value;
      unsigned wid = symmetric_width(f, scope).value;
      require(hd <= phd && phd <= hd + 1, "sandwich violated");
      require(whd <= hd, "whd <= hd violated");
      require(wid <= whd + std::max<unsigned>(whd, static_cast<unsigned>(max_p)),
              "wid bound violated");
      ++checks;
    }
  }
  std::ostringstream os;
  os << corpus.size() << " clause-sets, " << checks << " scoped measurements";
  return os.str();
}

std::string criterion8() {
  ClauseSet cls0{Clause{1}, Clause{-1, 2}, Clause{-1, -2, 3}};
  require(prime_implicates(cls0) == ClauseSet{Clause{1}, Clause{2}, Clause{3}},
          "primec of the worked example");
  std::mt19937 rng(20260813);
  long done = 0;
  while (done < 200) {
    std::vector<Clause> cs;
    int m = 1 + static_cast<int>(rng() % 9);
    for (int j = 0; j < m; ++j) {
      std::set<int> vars;
      int w = static_cast<int>(rng() % 5);
      while (static_cast<int>(vars.size()) < w)
        vars.insert(static_cast<int>(rng() % 6) + 1);
      std::vector<Lit> lits;
      for (int v : vars) lits.push_back(Lit(rng() & 1 ? v : -v));
      cs.push_back(Clause(std::move(lits)));
    }
    ClauseSet f(std::move(cs));
    if (f.n() > 6) continue;
    ++done;
    ClauseSet p = prime_implicates(f);
    require(p == resolution_closure(f), "resolution-closure oracle disagrees");
    if (f.c() > 0) {
      double bound = std::min(std::pow(2.0, static_cast<double>(f.c())) - 1,
                              std::pow(3.0, static_cast<double>(f.n())));
      require(static_cast<double>(p.c()) <= bound, "size bound violated");
    }
  }
  return "200 clause-sets vs the resolution-closure oracle, bounds hold";
}

std::string criterion9() {
  VerifyOptions opts;
  long pipelines = 0;
  auto full_check = [&](const ClauseSet& rep, const SemanticFunction& sem) {
    require(is_ur(rep, sem, opts).pass, "corpus member is not UR");
    auto vars = sem.vars;
    MonotoneBridge b = ur_to_monotone(rep, vars);
    require(b.named_nodes <= 2 * rep.n() * (rep.n() + 1) + 1, "node ceiling");
    // oracle equality on every doubled input
    ClauseSet f_cnf = sem.cnf;
    if (!sem.xors.empty()) {
      // use an equivalent CNF for the oracle when f is XOR-structured
      f_cnf = x0_set(XorClauseSet{sem.xors});
    }
    std::size_t n = vars.size();
    for (std::uint64_t m = 0; m < (1ULL << (2 * n)); ++m) {
      std::vector<std::pair<bool, bool>> psi;
      for (std::size_t j = 0; j < n; ++j)
        psi.emplace_back((m >> (2 * j)) & 1, (m >> (2 * j + 1)) & 1);
      require(eval_bridge(b, psi) == monotonisation_oracle(f_cnf, vars, psi),
              "bridge disagrees with the monotonisation oracle");
    }
    ClauseSet ur_back = monotone_to_ur(b);
    require(is_ur(ur_back, sem, opts).pass, "monotone_to_ur output not UR");
    require(has_sat_recognition(ur_back, sem, {ReductionKind::R1, 1}, opts).pass,
            "monotone_to_ur output lacks r1 sat-recognition");
    ClauseSet forcing = to_forcing(b);
    Verdict fv = is_forcing(forcing, sem, opts);
    require(fv.pass, "ur_rep_to_forcing output not forcing: " + fv.str());
    ++pipelines;
  };

  // corpus: prime-implicate representations of random functions
  std::mt19937 rng(20260814);
  int made = 0;
  while (made < 6) {
    std::vector<Clause> cs;
    int m = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < m; ++j) {
      std::set<int> vars;
      int w = 1 + static_cast<int>(rng() % 3);
      while (static_cast<int>(vars.size()) < w)
        vars.insert(static_cast<int>(rng() % 3) + 1);
      std::vector<Lit> lits;
      for (int v : vars) lits.push_back(Lit(rng() & 1 ? v : -v));
      cs.push_back(Clause(std::move(lits)));
    }
    ClauseSet f(std::move(cs));
    ClauseSet rep = prime_implicates(f);
    if (rep.has_empty_clause() || rep.empty()) continue;
    if (rep.vars() != f.vars()) continue;
    full_check(rep, SemanticFunction::from_cnf(rep));
    ++made;
  }
  // X1 chains of single XOR-clauses (n(F) = 2w-2 <= 6)
  for (int w : {3, 4}) {
    std::vector<Lit> lits;
    for (int v = 1; v <= w; ++v) lits.push_back(Lit(v));
    Clause c(lits);
    full_check(x1(c), SemanticFunction::from_xor(XorClauseSet{ClauseSet{c}}));
  }
  // the two-clause prime representation of (a|b|c) & (~a|~b|~c)
  ClauseSet mono_f{Clause{1, 2, 3}, Clause{-1, -2, -3}};
  full_check(mono_f, SemanticFunction::from_cnf(mono_f));

  // exact reproduction of the worked reduced translation
  Circuit mh;
  mh.inputs = {1, 2, 3, 4, 5, 6};
  mh.gates.push_back({7, GateOp::Or, {Lit(1), Lit(3), Lit(5)}, {}});
  mh.gates.push_back({8, GateOp::Or, {Lit(2), Lit(4), Lit(6)}, {}});
  mh.gates.push_back({9, GateOp::Or, {Lit(1), Lit(2)}, {}});
  mh.gates.push_back({10, GateOp::Or, {Lit(3), Lit(4)}, {}});
  mh.gates.push_back({11, GateOp::Or, {Lit(5), Lit(6)}, {}});
  mh.gates.push_back({12, GateOp::And, {Lit(7), Lit(8), Lit(9), Lit(10), Lit(11)}, {}});
  mh.output = 12;
  MonotoneBridge handmade;
  handmade.circuit = mh;
  handmade.f_vars = {1, 2, 3};
  handmade.doubled = {{1, 2}, {3, 4}, {5, 6}};
  ClauseSet listed{Clause{-4, 1, 2, 3}, Clause{-5, -1, -2, -3}, Clause{-9, 4},
                   Clause{-9, 5},       Clause{-9, 6},          Clause{-9, 7},
                   Clause{-9, 8},       Clause{9}};
  require(monotone_to_ur(handmade, TseitinMode::Reduced) == listed,
          "worked example clause list");

  std::ostringstream os;
  os << pipelines << " UR-representations through the full bridge, worked example exact";
  return os.str();
}

std::string criterion10() {
  VerifyOptions opts = fast_verify();
  std::mt19937 rng(20260815);
  int done = 0;
  while (done < 100) {
    int m = 1 + static_cast<int>(rng() % 3);
    std::vector<Clause> rows;
    for (int j = 0; j < m; ++j) rows.push_back(random_xor_clause(rng, 8, 1, 4));
    XorClauseSet f{ClauseSet(std::move(rows))};
    if (f.clauses.empty() || !xor_acyclic(f)) continue;
    ++done;
    SemanticFunction sem = SemanticFunction::from_xor(f);
    Verdict v0 = is_absolute_forcing(x0_set(f), sem, opts);
    require(v0.pass, "X0 of acyclic system: " + v0.str() + " on " + f.clauses.str());
    Verdict v1 = is_absolute_forcing(x1_set(f), sem, opts);
    require(v1.pass, "X1 of acyclic system: " + v1.str() + " on " + f.clauses.str());
  }
  // the cyclic triangle: a+b=0, a+c=0, b+c=1
  XorClauseSet triangle{ClauseSet{Clause{1, 2}, Clause{1, 3}, Clause{-2, 3}}};
  require(!xor_acyclic(triangle), "triangle is cyclic");
  Verdict v = is_ur(x1_set(triangle), SemanticFunction::from_xor(triangle), opts);
  require(!v.pass, "X1 of the triangle must fail UR");
  return "100 acyclic systems absolutely forcing under X0 and X1; triangle fails UR";
}

std::string criterion11() {
  MSP msp = parse_msp(
      "msp 3 2\nsys 1\n1 1 | 1\nsys 2\n1 0 | 0\nsys 3\n0 1 | 0\n");
  for (int m = 0; m < 8; ++m) {
    std::vector<std::uint8_t> in{static_cast<std::uint8_t>(m & 1),
                                 static_cast<std::uint8_t>(m >> 1 & 1),
                                 static_cast<std::uint8_t>(m >> 2 & 1)};
    require(msp_eval(msp, in) == (m != 0), "msp_eval truth table");
  }
  MspRelaxation rel = msp_relax(msp);
  ClauseSet rep = x_star(rel.relaxed);
  RefutationOracle oracle;
  for (int m = 0; m < 8; ++m) {
    PartialAssignment phi;
    for (int j = 0; j < 3; ++j)
      if (!(m >> j & 1))  // x_j = 0 activates system j: all its z -> 0
        for (Var z : rel.z_of_input[static_cast<std::size_t>(j)])
          phi = phi.with(Lit(z), false);
    bool refuted = oracle.reduce(apply(phi, rep), 1).reduced.has_empty_clause();
    require(refuted == (m == 0), "r1 decision under the z-instantiation protocol");
  }
  return "msp_eval matches x1|x2|x3 on all 8 inputs; X* + r1 decides f under the protocol";
}

}  // namespace

int main() {
  std::printf("xcnf acceptance suite\n");
  criterion(1, "T_n metrics and explicit refutations", criterion1);
  criterion(2, "two-clause hardness law", criterion2);
  criterion(3, "width bound for two-clause systems", criterion3);
  criterion(4, "X* forcing (GAC + r1 sat-recognition)", criterion4);
  criterion(5, "X2 absolute forcing", criterion5);
  criterion(6, "hierarchy separators A_k / A_k'", criterion6);
  criterion(7, "sandwich and width bounds on the corpus", criterion7);
  criterion(8, "prime implicates vs resolution closure", criterion8);
  criterion(9, "monotone bridge round trip", criterion9);
  criterion(10, "acyclicity theorems", criterion10);
  criterion(11, "MSP semantics", criterion11);
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria PASS\n");
  return 0;
}
