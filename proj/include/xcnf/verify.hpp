#pragma once

// Brute-force predicates for the representation notions: CNF-representation,
// GAC, UR, UP, sat-/usat-recognition, forcing, absolute forcing.  These are
// oracles, not production checks: everything enumerates assignments over
// var(f), hard-capped at 14 variables.

#include <optional>
#include <string>

#include "xcnf/circuits.hpp"
#include "xcnf/io.hpp"
#include "xcnf/measures.hpp"
#include "xcnf/xortrans.hpp"

namespace xcnf {

// A boolean function with an explicit variable set, evaluable on any total
// assignment over vars: a CNF, an XOR system, their conjunction (XNF file),
// or a circuit.
struct SemanticFunction {
  ClauseSet cnf;
  ClauseSet xors;  // read as XOR-clauses
  std::optional<Circuit> circuit;
  std::vector<Var> vars;

  static SemanticFunction from_cnf(ClauseSet f);
  static SemanticFunction from_xor(const XorClauseSet& f);
  static SemanticFunction from_xnf(const XnfFile& f);
  static SemanticFunction from_circuit(Circuit c);

  bool eval(const PartialAssignment& total) const;
  std::size_t n() const { return vars.size(); }
};

struct VerifyOptions {
  std::size_t cap_n = 14;  // hard cap on n(f)
  unsigned threads = 1;
  MeasureOptions measure;
  bool primec_cross_check = true;  // extra check inside is_representation when small
};

struct Verdict {
  std::string property;
  bool pass = false;
  std::optional<PartialAssignment> counterexample;  // lexicographically least phi

  std::string str() const;  // "PROPERTY PASS|FAIL [counterexample: v-lines]"
  explicit operator bool() const { return pass; }
};

enum class ReductionKind { R1, Ropl, Rinf, Rk };
struct ReductionSpec {
  ReductionKind kind = ReductionKind::R1;
  unsigned k = 1;  // for Rk
};

Verdict is_representation(const ClauseSet& rep, const SemanticFunction& f,
                          const VerifyOptions& opts = {});
Verdict is_gac(const ClauseSet& rep, const SemanticFunction& f, const VerifyOptions& opts = {});
Verdict is_ur(const ClauseSet& rep, const SemanticFunction& f, const VerifyOptions& opts = {});
Verdict has_sat_recognition(const ClauseSet& rep, const SemanticFunction& f, ReductionSpec r,
                            const VerifyOptions& opts = {});
Verdict has_usat_recognition(const ClauseSet& rep, const SemanticFunction& f, ReductionSpec r,
                             const VerifyOptions& opts = {});
Verdict is_up_representation(const ClauseSet& rep, const SemanticFunction& f,
                             const VerifyOptions& opts = {});
Verdict is_forcing(const ClauseSet& rep, const SemanticFunction& f,
                   const VerifyOptions& opts = {});
Verdict is_absolute_forcing(const ClauseSet& rep, const SemanticFunction& f,
                            const VerifyOptions& opts = {});

}  // namespace xcnf
