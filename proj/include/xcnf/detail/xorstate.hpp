#pragma once

// Exact measure computations for clause-sets of the shape X0(G), G an XOR
// system.  Instantiating such a clause-set stays inside the shape: a state is
// fully described by the set of assigned variables plus the current row
// parities, satisfiability and forced literals are GF(2) linear algebra, and
// generalized unit-clause propagation mirrors the CNF definition row-wise.
// This is what makes hardness/p-hardness/width computations feasible at
// 14-16 variables, where the generic 3^|V| enumeration is not.
//
// Limits: at most 63 variables and 64 rows.

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "xcnf/core.hpp"

namespace xcnf::detail {

struct AffineRow {
  std::uint64_t mask = 0;  // support over var indices
  int parity = 0;          // xor of the support variables == parity
};

struct AffineForm {
  std::vector<Var> vars;       // sorted external variable ids
  std::vector<AffineRow> rows;
};

// Recognizes F == X0(G): every support group of clauses must consist of all
// full clauses of one parity (one row) or all full clauses (two rows).
std::optional<AffineForm> recognize_x0(const ClauseSet& f);

// X0 image of the rows (external variable ids); inverse of recognize_x0.
ClauseSet x0_image(const AffineForm& form);

class AffineEngine {
 public:
  explicit AffineEngine(AffineForm form);

  struct State {
    std::uint64_t assigned = 0;
    std::uint64_t parity = 0;  // bit j = current parity of row j
    friend bool operator==(const State&, const State&) = default;
  };

  const AffineForm& form() const { return form_; }
  int nvars() const { return static_cast<int>(form_.vars.size()); }
  std::uint64_t all_mask() const { return nvars() == 64 ? ~0ULL : (1ULL << nvars()) - 1; }
  std::uint64_t mask_of(const std::vector<Var>& vars) const;  // throws on unknown var

  State initial() const;
  State assign(const State& s, int v, bool value) const;
  std::uint64_t active(const State& s, std::size_t j) const {
    return form_.rows[j].mask & ~s.assigned;
  }
  bool has_bot(const State& s) const;
  std::uint64_t occurring(const State& s) const;  // vars of nonempty active rows
  bool is_top(const State& s) const;              // every row satisfied

  bool satisfiable(const State& s) const;
  // Full RREF rows of the active system; sets *unsat if (0|1) is derivable.
  std::vector<AffineRow> rref(const State& s, bool* unsat) const;
  // Forced (var index, value) pairs of a satisfiable state.
  std::vector<std::pair<int, bool>> forced(const State& s) const;

  State ucp(const State& s) const;                   // r_1 fixpoint
  bool refutes(const State& s, int k);               // r_k(state) == {bot}?
  State rk_fixpoint(const State& s, int k);
  int min_refuting_k(const State& s);                // state must be unsatisfiable

  // Residual CNF of a state, in external variable ids.
  ClauseSet state_cnf(const State& s) const;

  // --- measures -----------------------------------------------------------

  struct Result {
    unsigned value = 0;
    PartialAssignment witness;
  };

  Result hardness(std::uint64_t vmask);
  Result p_hardness(std::uint64_t vmask);
  bool hd_at_most(std::uint64_t vmask, unsigned k, PartialAssignment* counterexample = nullptr);
  bool phd_at_most(std::uint64_t vmask, unsigned k, PartialAssignment* counterexample = nullptr);
  Result asymmetric_width(std::uint64_t vmask);
  Result symmetric_width(std::uint64_t vmask);

  // For every total assignment over vmask: satisfiable -> r_1 yields top
  // (sat recognition), unsatisfiable -> r_1 yields {bot} (usat recognition).
  bool sat_recognition_r1(std::uint64_t vmask);
  bool usat_recognition_r1(std::uint64_t vmask);

  // Lexicographically least assignment over `support` reaching parity vector
  // `target` (used for witnesses).
  PartialAssignment solve_assignment(std::uint64_t support, std::uint64_t target) const;

 private:
  struct StateHash {
    std::size_t operator()(const State& s) const {
      std::uint64_t h = s.assigned * 0x9e3779b97f4a7c15ULL;
      h ^= s.parity + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };
  struct RefuteEntry {
    int not_refuted_up_to = -1;
    int refuted_from = INT32_MAX;
  };

  bool refute_search(State s, int k);

  // Enumerates all reachable states (S, p) with S a subset of vmask; calls
  // visit(S, p); stops early (returns false) if visit returns false.
  bool sweep_states(std::uint64_t vmask, const std::function<bool(const State&)>& visit);

  // States of total assignments over vmask only.
  void sweep_total(std::uint64_t vmask, const std::function<bool(const State&)>& visit);

  // Supports of nonzero row-space combinations lying inside vmask.
  std::vector<std::uint64_t> combo_supports(std::uint64_t vmask) const;

  template <typename Eval>
  Result maximize_over_unsat_states(std::uint64_t vmask, Eval eval);

  AffineForm form_;
  std::vector<std::uint64_t> col_;  // col_[v]: rows containing variable index v
  std::unordered_map<State, RefuteEntry, StateHash> refute_memo_;
  std::unordered_map<State, int, StateHash> width_memo_asym_;
  std::unordered_map<State, int, StateHash> width_memo_sym_;
};

}  // namespace xcnf::detail
