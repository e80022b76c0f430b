#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "xcnf/reductions.hpp"

using namespace xcnf;
using testutil::brute_sat;

namespace {
const ClauseSet kExampleF{Clause{1}, Clause{-1, 2}, Clause{-1, -2, 3}};

// Direct unit-clause propagation, independent of r_k.
ClauseSet plain_ucp(ClauseSet f) {
  for (;;) {
    if (f.has_empty_clause()) return ClauseSet{Clause{}};
    const Clause* unit = nullptr;
    for (const Clause& c : f.clauses())
      if (c.size() == 1) {
        unit = &c;
        break;
      }
    if (!unit) return f;
    f = apply(PartialAssignment().with(unit->lits()[0], true), f);
  }
}
}  // namespace

TEST_CASE("sat_decide") {
  CHECK(sat_decide(kExampleF));
  CHECK_FALSE(sat_decide(ClauseSet{Clause{1}, Clause{-1}}));
  CHECK(sat_decide(ClauseSet{}));
  CHECK_FALSE(sat_decide(ClauseSet{Clause{}}));
}

TEST_CASE("sat_decide agrees with enumeration") {
  std::mt19937 rng(41);
  for (int round = 0; round < 1500; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 6, 10, 4, true);
    CHECK(sat_decide(f) == brute_sat(f));
  }
}

TEST_CASE("r_1 worked example") {
  auto res = r_k(1, kExampleF);
  CHECK(res.reduced.empty());
  CHECK(res.assignment == PartialAssignment({{1, true}, {2, true}, {3, true}}));
}

TEST_CASE("r_k fixpoint when every clause is longer than k") {
  ClauseSet f{Clause{1, 2}, Clause{-1, 3}, Clause{2, -3}};
  CHECK(r_k(1, f).reduced == f);
  ClauseSet g{Clause{1, 2, 3}, Clause{-1, -2, -3}};
  CHECK(r_k(2, g).reduced == g);
}

TEST_CASE("r_2 refutes the 2-variable full set") {
  ClauseSet f{Clause{1, 2}, Clause{1, -2}, Clause{-1, 2}, Clause{-1, -2}};
  CHECK(r_k(2, f).reduced == ClauseSet{Clause{}});
  CHECK(r_k(1, f).reduced == f);  // no unit clauses
}

TEST_CASE("r_0") {
  CHECK(r_k(0, ClauseSet{Clause{}, Clause{1}}).reduced == ClauseSet{Clause{}});
  CHECK(r_k(0, kExampleF).reduced == kExampleF);
}

TEST_CASE("associated assignment invariant") {
  std::mt19937 rng(43);
  for (int round = 0; round < 300; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 5, 8, 3, true);
    for (unsigned k : {1u, 2u}) {
      auto res = r_k(k, f);
      if (!(res.reduced == ClauseSet{Clause{}})) CHECK(apply(res.assignment, f) == res.reduced);
    }
  }
}

TEST_CASE("confluence: selection order does not matter") {
  std::mt19937 rng(47);
  for (int round = 0; round < 250; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 8, 10, 4, true);
    for (unsigned k : {1u, 2u, 3u})
      CHECK(r_k(k, f, LitOrder::Ascending).reduced == r_k(k, f, LitOrder::Descending).reduced);
  }
}

TEST_CASE("monotonicity in k") {
  std::mt19937 rng(53);
  for (int round = 0; round < 250; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 5, 10, 3, true);
    for (unsigned k = 0; k + 1 <= 3; ++k) {
      if (r_k(k, f).reduced == ClauseSet{Clause{}})
        CHECK(r_k(k + 1, f).reduced == ClauseSet{Clause{}});
    }
  }
}

TEST_CASE("r_1 agrees with direct unit propagation") {
  std::mt19937 rng(59);
  for (int round = 0; round < 600; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 5, 8, 3, true);
    CHECK(r_k(1, f).reduced == plain_ucp(f));
  }
}

TEST_CASE("forced_literals") {
  ForcedLiterals all = forced_literals(ClauseSet{Clause{1}, Clause{-1}});
  CHECK(all.all);

  ForcedLiterals ex = forced_literals(kExampleF);
  CHECK_FALSE(ex.all);
  CHECK(ex.literals == Clause{1, 2, 3});

  CHECK(forced_literals(ClauseSet{Clause{1, 2, 3}}).literals == Clause{});
}

TEST_CASE("forced_literals agrees with enumeration oracle") {
  std::mt19937 rng(61);
  for (int round = 0; round < 400; ++round) {
    ClauseSet f = testutil::random_clause_set(rng, 5, 7, 3);
    if (!brute_sat(f)) continue;
    auto oracle = testutil::brute_forced(f);
    auto got = forced_literals(f);
    REQUIRE_FALSE(got.all);
    CHECK(got.literals == Clause(oracle));
  }
}

TEST_CASE("r_inf") {
  ClauseSet uniq{Clause{1, 2}, Clause{1}};  // uniquely satisfiable mod inessential vars
  CHECK(r_inf(uniq).reduced.empty());
  CHECK(r_inf(ClauseSet{Clause{1}, Clause{-1}}).reduced == ClauseSet{Clause{}});
  ClauseSet open{Clause{1, 2}};
  CHECK(r_inf(open).reduced == open);
}

TEST_CASE("ropl") {
  CHECK(ropl(ClauseSet{}).empty());
  CHECK(ropl(ClauseSet{Clause{1, 2}}).empty());  // both literals pure
  CHECK(ropl(ClauseSet{Clause{1}, Clause{-1}}) == ClauseSet{Clause{}});
  // pure literal exposes nothing new here, but the fixpoint is stable
  ClauseSet f{Clause{1, 2}, Clause{-1, 2}};
  CHECK(ropl(f).empty());  // 2 is pure, then nothing is left
}
