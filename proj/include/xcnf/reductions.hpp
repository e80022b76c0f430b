#pragma once

// Generalized unit-clause propagation r_k, forced literals, and the complete
// SAT oracle behind all brute-force checks.

#include <memory>
#include <optional>

#include "xcnf/core.hpp"

namespace xcnf {

// Complete SAT decision (DPLL with unit propagation and pure literals).
bool sat_decide(const ClauseSet& f);

struct ReductionResult {
  ClauseSet reduced;
  // The associated partial assignment: apply(assignment, input) == reduced
  // whenever reduced != {bot}.
  PartialAssignment assignment;
};

enum class LitOrder { Ascending, Descending };  // selection order inside r_k

// r_0 maps F to {bot} iff bot in F, else F; r_{k+1} repeatedly assigns x -> 1
// whenever r_k(<x->0> * F) = {bot}.  r_1 is unit-clause propagation.
// The result does not depend on `order` (confluence); the parameter exists so
// tests can check exactly that.
ReductionResult r_k(unsigned k, const ClauseSet& f, LitOrder order = LitOrder::Ascending);

// Literals forced for F.  For unsatisfiable F every literal is forced and the
// set is not finitely representable; `all` is the sentinel for that case.
struct ForcedLiterals {
  bool all = false;
  Clause literals;  // frl(F) restricted to lit(F), valid when !all
};

ForcedLiterals forced_literals(const ClauseSet& f);

// Applies all forced assignments (to fixpoint); {bot} for unsatisfiable F,
// and top iff F is uniquely satisfiable modulo inessential variables.
ReductionResult r_inf(const ClauseSet& f);

// Unit-clause propagation followed by repeated elimination of pure literals,
// until stable.  Confluent.
ClauseSet ropl(const ClauseSet& f);

// Memoized refutation queries "r_k(F) == {bot}?" and r_k fixpoints.  One
// instance shares its cache across queries; the free function r_k uses a
// fresh instance per call.
class RefutationOracle {
 public:
  explicit RefutationOracle(LitOrder order = LitOrder::Ascending);
  ~RefutationOracle();
  RefutationOracle(RefutationOracle&&) noexcept;

  bool refutes(const ClauseSet& f, int k);
  ReductionResult reduce(const ClauseSet& f, unsigned k);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace xcnf
