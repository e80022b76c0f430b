#pragma once

// XOR-clause-sets, GF(2) semantics, the translations X0/X1/X*/X2, acyclicity
// tests, and the hard-instance generators (Tseitin graph formulas, T_n,
// MSP relaxations).
//
// An XOR-clause is an ordinary clause C read as "the sum of its literals
// equals 0" over GF(2); an XOR-clause-set is a clause-set of them.

#include <cstdint>
#include <optional>
#include <variant>

#include "xcnf/core.hpp"

namespace xcnf {

// Thin strong typedef: same structure as ClauseSet, different interpretation.
struct XorClauseSet {
  ClauseSet clauses;

  friend bool operator==(const XorClauseSet&, const XorClauseSet&) = default;
};

// A(F) * v = b(F) over GF(2); rows in canonical clause order, columns in
// ascending variable order.
struct GF2System {
  std::vector<std::vector<std::uint8_t>> a;
  std::vector<std::uint8_t> b;
  std::vector<Var> column_vars;
};

GF2System to_linear_system(const XorClauseSet& f);

bool xor_sat(const XorClauseSet& f);

// Semantic implication of the XOR-clause C by F.
bool xor_implies(const XorClauseSet& f, const Clause& c);

// Sum of all clauses of G (symmetric difference + reduction); nullopt when
// the sum is inconsistent (0 = 1).  The choice rule flips the literal of
// minimal variable when a lone clashing pair remains.
std::optional<Clause> xor_sum(const XorClauseSet& g);

// Canonical form of an XOR-clause: same variables, all positive except that
// the minimal variable carries the parity sign.
Clause xor_canonical(const Clause& c);
bool xor_equivalent(const Clause& c, const Clause& d);

// X0(C): the 2^{|C|-1} full clauses over var(C) of complement-parity
// different from C's (top for |C| = 0) — the unique equivalent CNF.
ClauseSet x0(const Clause& c);
ClauseSet x0_set(const XorClauseSet& f);

// Natural splitting of C along `order` (default: ascending variables),
// followed by X0.  Fresh variables start at max(var(C), fresh_floor) + 1.
struct X1Options {
  bool descending = false;
  Var fresh_floor = 0;
};

// The split XOR system of one clause (exposed for reuse by the measures).
XorClauseSet x1_split(const Clause& c, const X1Options& opts = {});
ClauseSet x1(const Clause& c, const X1Options& opts = {});

XorClauseSet x1_split_set(const XorClauseSet& f, const X1Options& opts = {});
ClauseSet x1_set(const XorClauseSet& f, const X1Options& opts = {});

// F* = { xor_sum(F') : F' subseteq F }, deduplicated modulo XOR-clause
// equivalence, tautology dropped.  Requires a satisfiable system.
XorClauseSet f_star(const XorClauseSet& f);
ClauseSet x_star(const XorClauseSet& f, const X1Options& opts = {});

// X2(C, D) for two XOR-clauses sharing I = var(C) & var(D), |I| >= 2,
// |C| > |I|, |D| > |I|: factors the common part through a fresh variable s.
struct X2Result {
  ClauseSet cnf;
  XorClauseSet split;   // the three-clause system {I', C', D'}
  Var s = 0;
  int d_flips = 0;      // parity flips folded into D during sign normalization
};
X2Result x2(const Clause& c, const Clause& d, const X1Options& opts = {});

// Incidence graph (variables vs. family members) acyclicity; a single
// XOR-clause-set is acyclic iff the family of its clauses is.
bool incidence_acyclic(const std::vector<ClauseSet>& family);
bool xor_acyclic(const XorClauseSet& f);

// Variable-interaction graph: vertices = family indices, edge iff two
// members share a variable.  Returned as an adjacency list.
std::vector<std::vector<int>> variable_interaction_graph(const std::vector<ClauseSet>& family);

// General graph with literal-labelled edges (loops allowed) and a 0/1 charge
// per vertex.  Edge labels form a clause: pairwise variable-disjoint.
struct GeneralGraph {
  int n_vertices = 0;
  struct Edge {
    Lit label;
    int u, v;  // u == v encodes a loop
  };
  std::vector<Edge> edges;
  std::vector<std::uint8_t> charge;  // size n_vertices
};

// T(G, rho) = X0 of the vertex equations: the XOR of the literal-edges
// incident with w equals charge(w).
ClauseSet tseitin_formula(const GeneralGraph& g);
XorClauseSet tseitin_xor_system(const GeneralGraph& g);

GeneralGraph bouquet(const Clause& c);     // one vertex, loops = literals, charge 0
GeneralGraph dipole(int n);                // two vertices, edges 1..n, charges 0/1

// T_n = X1_set({ {1..n}, {1..n-1,-n} }); 3n-4 variables, 8n-12 clauses.
ClauseSet generate_tn(int n);
XorClauseSet tn_split_system(int n);

// Monotone span program: n input switches, m shared variables y, one linear
// system per input.  Input i active iff x_i = 0.
struct MSP {
  int n_inputs = 0;
  int m = 0;
  struct Row {
    std::vector<std::uint8_t> coeffs;  // length m
    std::uint8_t rhs = 0;
  };
  std::vector<std::vector<Row>> systems;  // size n_inputs
};

MSP parse_msp(const std::string& text);
std::string emit_msp(const MSP& msp);

// Adds one fresh relaxation variable z to every equation row; y_j has id j,
// the z's are numbered m+1 .. m+N in row order.
struct MspRelaxation {
  XorClauseSet relaxed;
  std::vector<std::vector<Var>> z_of_input;  // relaxation vars per input system
};
MspRelaxation msp_relax(const MSP& msp);

// 0 iff the systems activated by phi(x_i) = 0 are jointly unsatisfiable.
// phi must be total over inputs 1..n.
bool msp_eval(const MSP& msp, const std::vector<std::uint8_t>& inputs);

// Predicted absolute hardness of X1_set({C,D}) = max(1, |var(C) & var(D)|);
// requires the pair to be XOR-unsatisfiable or var(C) u var(D) != var(C) & var(D).
unsigned hd_two_xor_expected(const Clause& c, const Clause& d);

}  // namespace xcnf
