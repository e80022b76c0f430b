#pragma once

// General boolean circuits, the Tseitin translations (full and reduced), the
// monotonisation oracle, and the compilers between UR-representations and
// monotone circuits.

#include <cstdint>
#include <optional>

#include "xcnf/core.hpp"

namespace xcnf {

enum class GateOp { And, Or, Xor, Not, Const0, Const1, Table };

struct Gate {
  Var node = 0;            // the node variable being defined
  GateOp op = GateOp::And;
  std::vector<Lit> args;   // literals over earlier nodes and inputs
  std::vector<std::uint8_t> table;  // Table only: 2^arity bits, args low-to-high
};

struct Circuit {
  std::vector<Var> inputs;   // sorted
  std::vector<Gate> gates;   // topological order
  Var output = 0;

  void validate() const;  // dag shape, arg scoping, arity caps
  std::vector<Var> node_vars() const;
};

// Topological evaluation under a total assignment of the inputs.
bool eval_circuit(const Circuit& c, const PartialAssignment& inputs);

// Full Tseitin translation: {{o}} plus the prime implicates of each gate
// equivalence; a UP-representation of the circuit function.
ClauseSet tseitin(const Circuit& c);

// Reduced translation (one direction per gate); requires general NNF, i.e.
// negative prime-implicate literals of every gate function come only from
// input variables.  Throws Error naming the offending gate otherwise.
ClauseSet reduced_tseitin(const Circuit& c);

bool is_general_nnf(const Circuit& c, Var* offending = nullptr);

std::string emit_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

// ---------------------------------------------------------------------------
// Monotone bridge.

// A monotone circuit over doubled variables v^0, v^1 of a boolean function.
// v^0 = v^1 = 1 means unassigned, (1,0) means v=1, (0,1) means v=0, (0,0)
// contradiction.
struct MonotoneBridge {
  Circuit circuit;                            // AND/OR/Const gates only
  std::vector<Var> f_vars;                    // variables of f, sorted
  std::vector<std::pair<Var, Var>> doubled;   // (v^0, v^1) input ids per f_var
  std::size_t named_nodes = 0;                // layer nodes surviving folding
};

// Ground truth for the bridge: value of the monotonisation f-hat at psi,
// where f is given by any CNF-representation over (at least) f_vars.
bool monotonisation_oracle(const ClauseSet& f, const std::vector<Var>& f_vars,
                           const std::vector<std::pair<bool, bool>>& psi);

bool eval_bridge(const MonotoneBridge& b, const std::vector<std::pair<bool, bool>>& psi);

// Layered unit-propagation circuit of Thm-style construction; F should be a
// UR-representation w.r.t. V (checked downstream by oracle comparison).
// Rejects V not contained in var(F).
MonotoneBridge ur_to_monotone(const ClauseSet& f, const std::vector<Var>& v);

enum class TseitinMode { Full, Reduced };

// Tseitin-translate the bridge circuit, substitute v for v^0 and -v for v^1,
// drop clash-containing pseudo-clauses.  Full mode: UR-representation with
// sat-recognition via r_1; Reduced mode: sat-recognition via ropl.
ClauseSet monotone_to_ur(const MonotoneBridge& b, TseitinMode mode = TseitinMode::Full);

// Forcing representation: monotone_to_ur plus one specialized side circuit
// per literal of f, reduced-translated at its output node.
ClauseSet to_forcing(const MonotoneBridge& b);

// Composition to_forcing(ur_to_monotone(F, V)).
ClauseSet ur_rep_to_forcing(const ClauseSet& f, const std::vector<Var>& v);

}  // namespace xcnf
