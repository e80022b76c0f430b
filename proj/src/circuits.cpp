#include "xcnf/circuits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "xcnf/detail/smallfunc.hpp"
#include "xcnf/reductions.hpp"
#include "xcnf/xortrans.hpp"

namespace xcnf {

namespace {

Clause negated(const std::vector<Lit>& lits) {
  std::vector<Lit> out;
  out.reserve(lits.size());
  for (Lit x : lits) out.push_back(x.complement());
  return Clause(std::move(out));
}

Clause with_lit(Lit extra, const Clause& c) {
  std::vector<Lit> lits(c.lits().begin(), c.lits().end());
  lits.push_back(extra);
  return Clause(std::move(lits));
}

// b_v as a clause of literals for a XOR gate: sum of args == 1 is the XOR
// clause with the minimal literal flipped.
Clause xor_gate_body(const Gate& g) {
  std::vector<Lit> lits(g.args.begin(), g.args.end());
  std::sort(lits.begin(), lits.end());
  lits.front() = lits.front().complement();
  return Clause(std::move(lits));
}

ClauseSet table_equiv_primes(const Gate& g) {
  std::vector<Var> vars{g.node};
  for (Lit a : g.args) vars.push_back(a.var());
  std::sort(vars.begin(), vars.end());
  auto bit_of = [&](Var v) {
    return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
  };
  return detail::function_primes(vars, [&](std::uint64_t pattern) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      bool val = pattern >> bit_of(g.args[i].var()) & 1;
      if (!g.args[i].positive()) val = !val;
      if (val) idx |= 1ULL << i;
    }
    bool v = pattern >> bit_of(g.node) & 1;
    return v == (g.table[idx] != 0);
  });
}

ClauseSet table_body_primes(const Gate& g) {
  std::vector<Var> vars;
  for (Lit a : g.args) vars.push_back(a.var());
  std::sort(vars.begin(), vars.end());
  auto bit_of = [&](Var v) {
    return std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
  };
  return detail::function_primes(vars, [&](std::uint64_t pattern) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      bool val = pattern >> bit_of(g.args[i].var()) & 1;
      if (!g.args[i].positive()) val = !val;
      if (val) idx |= 1ULL << i;
    }
    return g.table[idx] != 0;
  });
}

std::vector<Clause> gate_equiv_primes(const Gate& g) {
  Lit v(g.node), nv(-g.node);
  std::vector<Clause> out;
  switch (g.op) {
    case GateOp::And:
      for (Lit a : g.args) out.push_back(Clause({nv, a}));
      out.push_back(with_lit(v, negated(g.args)));
      break;
    case GateOp::Or:
      out.push_back(with_lit(nv, Clause(g.args)));
      for (Lit a : g.args) out.push_back(Clause({v, a.complement()}));
      break;
    case GateOp::Not:
      out.push_back(Clause({v, g.args[0]}));
      out.push_back(Clause({nv, g.args[0].complement()}));
      break;
    case GateOp::Xor: {
      std::vector<Lit> lits(g.args.begin(), g.args.end());
      lits.push_back(v);
      ClauseSet image = x0(Clause(std::move(lits)));
      for (const Clause& c : image.clauses()) out.push_back(c);
      break;
    }
    case GateOp::Const0:
      out.push_back(Clause({nv}));
      break;
    case GateOp::Const1:
      out.push_back(Clause({v}));
      break;
    case GateOp::Table: {
      ClauseSet primes = table_equiv_primes(g);
      for (const Clause& c : primes.clauses()) out.push_back(c);
      break;
    }
  }
  return out;
}

std::vector<Clause> gate_impl_primes(const Gate& g) {
  Lit nv(-g.node);
  std::vector<Clause> out;
  switch (g.op) {
    case GateOp::And:
      for (Lit a : g.args) out.push_back(Clause({nv, a}));
      break;
    case GateOp::Or:
      out.push_back(with_lit(nv, Clause(g.args)));
      break;
    case GateOp::Not:
      out.push_back(Clause({nv, g.args[0].complement()}));
      break;
    case GateOp::Xor: {
      ClauseSet image = x0(xor_gate_body(g));
      for (const Clause& c : image.clauses()) out.push_back(with_lit(nv, c));
      break;
    }
    case GateOp::Const0:
      out.push_back(Clause({nv}));
      break;
    case GateOp::Const1:
      break;
    case GateOp::Table: {
      ClauseSet primes = table_body_primes(g);
      for (const Clause& c : primes.clauses()) out.push_back(with_lit(nv, c));
      break;
    }
  }
  return out;
}

}  // namespace

void Circuit::validate() const {
  std::set<Var> known(inputs.begin(), inputs.end());
  if (known.size() != inputs.size()) throw Error("circuit: duplicate input");
  for (Var v : inputs)
    if (v <= 0) throw Error("circuit: nonpositive input id");
  bool output_is_node = false;
  for (const Gate& g : gates) {
    if (g.node <= 0) throw Error("circuit: nonpositive node id");
    if (known.count(g.node)) throw Error("circuit: node " + std::to_string(g.node) + " redefined");
    switch (g.op) {
      case GateOp::And:
      case GateOp::Or:
        if (g.args.empty()) throw Error("circuit: AND/OR gate without arguments");
        break;
      case GateOp::Not:
        if (g.args.size() != 1) throw Error("circuit: NOT gate arity must be 1");
        break;
      case GateOp::Xor: {
        if (g.args.empty()) throw Error("circuit: XOR gate without arguments");
        std::set<Var> vs;
        for (Lit a : g.args) vs.insert(a.var());
        if (vs.size() != g.args.size())
          throw Error("circuit: XOR gate arguments must have distinct variables");
        break;
      }
      case GateOp::Const0:
      case GateOp::Const1:
        if (!g.args.empty()) throw Error("circuit: constant gate takes no arguments");
        break;
      case GateOp::Table:
        if (g.args.size() > 8) throw Error("circuit: table gate arity exceeds 8");
        if (g.table.size() != (1ULL << g.args.size()))
          throw Error("circuit: table size mismatch");
        break;
    }
    for (Lit a : g.args)
      if (!known.count(a.var()))
        throw Error("circuit: gate " + std::to_string(g.node) + " references unknown " +
                    std::to_string(a.var()));
    known.insert(g.node);
    if (g.node == output) output_is_node = true;
  }
  if (!output_is_node) throw Error("circuit: output must be a gate node");
}

std::vector<Var> Circuit::node_vars() const {
  std::vector<Var> out;
  out.reserve(gates.size());
  for (const Gate& g : gates) out.push_back(g.node);
  return out;
}

bool eval_circuit(const Circuit& c, const PartialAssignment& inputs) {
  std::map<Var, bool> value;
  for (Var v : c.inputs) {
    auto b = inputs.value(v);
    if (!b) throw Error("eval_circuit: input " + std::to_string(v) + " unassigned");
    value[v] = *b;
  }
  auto lit_val = [&](Lit x) {
    bool b = value.at(x.var());
    return x.positive() ? b : !b;
  };
  for (const Gate& g : c.gates) {
    bool v = false;
    switch (g.op) {
      case GateOp::And:
        v = std::all_of(g.args.begin(), g.args.end(), lit_val);
        break;
      case GateOp::Or:
        v = std::any_of(g.args.begin(), g.args.end(), lit_val);
        break;
      case GateOp::Not:
        v = !lit_val(g.args[0]);
        break;
      case GateOp::Xor:
        for (Lit a : g.args) v ^= lit_val(a);
        break;
      case GateOp::Const0:
        v = false;
        break;
      case GateOp::Const1:
        v = true;
        break;
      case GateOp::Table: {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < g.args.size(); ++i)
          if (lit_val(g.args[i])) idx |= 1ULL << i;
        v = g.table[idx] != 0;
        break;
      }
    }
    value[g.node] = v;
  }
  return value.at(c.output);
}

ClauseSet tseitin(const Circuit& c) {
  c.validate();
  std::vector<Clause> out{Clause({Lit(c.output)})};
  for (const Gate& g : c.gates)
    for (Clause& cl : gate_equiv_primes(g)) out.push_back(std::move(cl));
  return ClauseSet(std::move(out));
}

bool is_general_nnf(const Circuit& c, Var* offending) {
  std::set<Var> input_set(c.inputs.begin(), c.inputs.end());
  auto is_input = [&](Var v) { return input_set.count(v) != 0; };
  for (const Gate& g : c.gates) {
    bool ok = true;
    switch (g.op) {
      case GateOp::And:
      case GateOp::Or:
        for (Lit a : g.args)
          if (!a.positive() && !is_input(a.var())) ok = false;
        break;
      case GateOp::Not:
        if (g.args[0].positive() && !is_input(g.args[0].var())) ok = false;
        break;
      case GateOp::Xor:
        for (Lit a : g.args)
          if (!is_input(a.var())) ok = false;
        break;
      case GateOp::Const0:
      case GateOp::Const1:
        break;
      case GateOp::Table: {
        ClauseSet primes = table_body_primes(g);
        for (const Clause& cl : primes.clauses())
          for (Lit x : cl.lits())
            if (!x.positive() && !is_input(x.var())) ok = false;
        break;
      }
    }
    if (!ok) {
      if (offending) *offending = g.node;
      return false;
    }
  }
  return true;
}

ClauseSet reduced_tseitin(const Circuit& c) {
  c.validate();
  Var bad = 0;
  if (!is_general_nnf(c, &bad))
    throw Error("reduced_tseitin: gate " + std::to_string(bad) + " violates general NNF");
  std::vector<Clause> out{Clause({Lit(c.output)})};
  for (const Gate& g : c.gates)
    for (Clause& cl : gate_impl_primes(g)) out.push_back(std::move(cl));
  return ClauseSet(std::move(out));
}

std::string emit_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "circuit inputs:";
  for (Var v : c.inputs) os << ' ' << v;
  os << " output: " << c.output << '\n';
  for (const Gate& g : c.gates) {
    os << g.node << " = ";
    switch (g.op) {
      case GateOp::And: os << "AND"; break;
      case GateOp::Or: os << "OR"; break;
      case GateOp::Xor: os << "XOR"; break;
      case GateOp::Not: os << "NOT"; break;
      case GateOp::Const0: os << "CONST0"; break;
      case GateOp::Const1: os << "CONST1"; break;
      case GateOp::Table: os << "TT"; break;
    }
    os << '(';
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      if (i) os << ' ';
      os << g.args[i].value();
    }
    if (g.op == GateOp::Table) {
      os << "; ";
      std::string hex;
      for (std::size_t i = 0; i < g.table.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4 && i + j < g.table.size(); ++j)
          if (g.table[i + j]) nibble |= 1 << j;
        hex.push_back("0123456789abcdef"[nibble]);
      }
      std::reverse(hex.begin(), hex.end());
      os << hex;
    }
    os << ")\n";
  }
  return os.str();
}

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& ch : line)
      if (ch == '(' || ch == ')' || ch == '=' || ch == ';' || ch == ':') ch = ' ';
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c' && tok == "c") continue;
    if (tok == "circuit") {
      std::string kw;
      ls >> kw;
      if (kw != "inputs") throw Error("circuit parse (line " + std::to_string(line_no) + ")");
      std::string t;
      std::vector<std::string> toks;
      while (ls >> t) toks.push_back(t);
      // "... inputs <list> output <node>"
      std::size_t out_pos = 0;
      for (std::size_t i = 0; i < toks.size(); ++i)
        if (toks[i] == "output") out_pos = i;
      if (out_pos + 2 != toks.size())
        throw Error("circuit parse (line " + std::to_string(line_no) + "): bad header");
      for (std::size_t i = 0; i < out_pos; ++i) c.inputs.push_back(std::stoi(toks[i]));
      c.output = std::stoi(toks[out_pos + 1]);
      std::sort(c.inputs.begin(), c.inputs.end());
      header = true;
      continue;
    }
    if (!header) throw Error("circuit parse (line " + std::to_string(line_no) + "): missing header");
    Gate g;
    g.node = std::stoi(tok);
    std::string op;
    if (!(ls >> op)) throw Error("circuit parse (line " + std::to_string(line_no) + "): missing op");
    std::string hex;
    std::vector<std::string> rest;
    std::string t;
    while (ls >> t) rest.push_back(t);
    if (op == "AND") g.op = GateOp::And;
    else if (op == "OR") g.op = GateOp::Or;
    else if (op == "XOR") g.op = GateOp::Xor;
    else if (op == "NOT") g.op = GateOp::Not;
    else if (op == "CONST0") g.op = GateOp::Const0;
    else if (op == "CONST1") g.op = GateOp::Const1;
    else if (op == "TT") g.op = GateOp::Table;
    else throw Error("circuit parse (line " + std::to_string(line_no) + "): unknown op " + op);
    if (g.op == GateOp::Table) {
      if (rest.empty()) throw Error("circuit parse (line " + std::to_string(line_no) + "): TT needs bits");
      hex = rest.back();
      rest.pop_back();
    }
    for (const std::string& a : rest) g.args.push_back(Lit(std::stoi(a)));
    if (g.op == GateOp::Table) {
      g.table.assign(1ULL << g.args.size(), 0);
      std::uint64_t bit = 0;
      for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
        int nib = *it >= 'a' ? *it - 'a' + 10 : (*it >= 'A' ? *it - 'A' + 10 : *it - '0');
        for (int j = 0; j < 4; ++j, ++bit)
          if (bit < g.table.size()) g.table[bit] = (nib >> j) & 1;
      }
    }
    c.gates.push_back(std::move(g));
  }
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// Monotone bridge.

namespace {

// Builder with constant folding and structural hashing; ids 0/1 are the
// constants, inputs follow, gates after that.
class MonoBuilder {
 public:
  explicit MonoBuilder(int n_inputs) : n_inputs_(n_inputs) {
    nodes_.push_back({GateOp::Const0, {}});
    nodes_.push_back({GateOp::Const1, {}});
    for (int i = 0; i < n_inputs; ++i) nodes_.push_back({GateOp::And, {}});  // input marker
  }

  int input(int i) const { return 2 + i; }
  bool is_input(int id) const { return id >= 2 && id < 2 + n_inputs_; }
  bool is_gate(int id) const { return id >= 2 + n_inputs_; }

  int mk(GateOp op, std::vector<int> args) {
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    int absorb = op == GateOp::And ? 0 : 1;
    int neutral = 1 - absorb;
    if (std::find(args.begin(), args.end(), absorb) != args.end()) return absorb;
    args.erase(std::remove(args.begin(), args.end(), neutral), args.end());
    if (args.empty()) return neutral;
    if (args.size() == 1) return args[0];
    auto key = std::make_pair(op == GateOp::And ? 0 : 1, args);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    nodes_.push_back({op, args});
    int id = static_cast<int>(nodes_.size()) - 1;
    cache_[key] = id;
    return id;
  }

  // Exports the cone of `root` as a Circuit.  Inputs are numbered 1..n_inputs
  // in order; gates get ids after that.  A non-gate root is wrapped.
  Circuit export_circuit(int root) const {
    Circuit c;
    for (int i = 0; i < n_inputs_; ++i) c.inputs.push_back(i + 1);
    std::map<int, Var> ext;
    for (int i = 0; i < n_inputs_; ++i) ext[input(i)] = i + 1;
    Var next = n_inputs_;
    std::vector<int> order;
    std::set<int> seen;
    std::function<void(int)> visit = [&](int id) {
      if (seen.count(id)) return;
      seen.insert(id);
      if (is_gate(id))
        for (int a : nodes_[static_cast<std::size_t>(id)].args) visit(a);
      if (is_gate(id) || id < 2) order.push_back(id);
    };
    visit(root);
    for (int id : order) {
      Gate g;
      g.node = ++next;
      ext[id] = g.node;
      if (id == 0) {
        g.op = GateOp::Const0;
      } else if (id == 1) {
        g.op = GateOp::Const1;
      } else {
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        g.op = n.op;
        for (int a : n.args) g.args.push_back(Lit(ext.at(a)));
      }
      c.gates.push_back(std::move(g));
    }
    if (is_input(root)) {  // passthrough output
      Gate g;
      g.node = ++next;
      g.op = GateOp::Or;
      g.args.push_back(Lit(ext.at(root)));
      c.gates.push_back(std::move(g));
      ext[-1] = g.node;
      c.output = g.node;
    } else {
      c.output = ext.at(root);
    }
    c.validate();
    return c;
  }

  std::size_t count_gates(const std::vector<int>& ids) const {
    std::set<int> uniq;
    for (int id : ids)
      if (is_gate(id)) uniq.insert(id);
    return uniq.size();
  }

 private:
  struct Node {
    GateOp op;
    std::vector<int> args;
  };
  int n_inputs_;
  std::vector<Node> nodes_;
  std::map<std::pair<int, std::vector<int>>, int> cache_;
};

}  // namespace

bool monotonisation_oracle(const ClauseSet& f, const std::vector<Var>& f_vars,
                           const std::vector<std::pair<bool, bool>>& psi) {
  if (psi.size() != f_vars.size())
    throw Error("monotonisation_oracle: psi must be total on the doubled variables");
  PartialAssignment phi;
  for (std::size_t i = 0; i < f_vars.size(); ++i) {
    auto [v0, v1] = psi[i];
    if (!v0 && !v1) return false;  // contradiction pair
    if (v0 && v1) continue;        // unassigned
    phi = phi.with(Lit(f_vars[i]), v0);  // v^eps = 1 means v != eps
  }
  return sat_decide(apply(phi, f));
}

bool eval_bridge(const MonotoneBridge& b, const std::vector<std::pair<bool, bool>>& psi) {
  if (psi.size() != b.f_vars.size()) throw Error("eval_bridge: psi size mismatch");
  PartialAssignment inputs;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    inputs = inputs.with(Lit(b.doubled[i].first), psi[i].first);
    inputs = inputs.with(Lit(b.doubled[i].second), psi[i].second);
  }
  return eval_circuit(b.circuit, inputs);
}

MonotoneBridge ur_to_monotone(const ClauseSet& f, const std::vector<Var>& v) {
  MonotoneBridge bridge;
  bridge.f_vars = v;
  std::sort(bridge.f_vars.begin(), bridge.f_vars.end());
  bridge.f_vars.erase(std::unique(bridge.f_vars.begin(), bridge.f_vars.end()),
                      bridge.f_vars.end());
  auto fvars = f.vars();
  for (Var x : bridge.f_vars)
    if (!std::binary_search(fvars.begin(), fvars.end(), x))
      throw Error("ur_to_monotone: designated variable " + std::to_string(x) +
                  " does not occur in the clause-set");

  int n = static_cast<int>(bridge.f_vars.size());
  MonoBuilder mb(2 * n);
  for (int i = 0; i < n; ++i)
    bridge.doubled.emplace_back(2 * i + 1, 2 * i + 2);  // external ids after export

  int root;
  std::vector<int> layer_ids;
  if (f.has_empty_clause()) {
    root = 0;  // constant 0
  } else if (f.empty()) {
    root = 1;  // constant 1
  } else {
    // Variable order: the designated variables first, auxiliaries after.
    std::vector<Var> order = bridge.f_vars;
    for (Var x : fvars)
      if (!std::binary_search(bridge.f_vars.begin(), bridge.f_vars.end(), x))
        order.push_back(x);
    int total = static_cast<int>(order.size());
    std::map<Var, int> idx;
    for (int i = 0; i < total; ++i) idx[order[static_cast<std::size_t>(i)]] = i;

    // cur[2*i + eps] = node id of v_i^eps at the current layer.
    std::vector<int> cur(static_cast<std::size_t>(2 * total), 1);
    for (int i = 0; i < n; ++i) {
      cur[static_cast<std::size_t>(2 * i)] = mb.input(2 * i);
      cur[static_cast<std::size_t>(2 * i + 1)] = mb.input(2 * i + 1);
    }
    auto lit_node = [&](Lit x, const std::vector<int>& layer) {
      return layer[static_cast<std::size_t>(2 * idx.at(x.var()) + (x.positive() ? 0 : 1))];
    };
    for (int stage = 0; stage < total; ++stage) {
      std::vector<int> next(cur.size());
      for (int i = 0; i < total; ++i) {
        for (int eps = 0; eps < 2; ++eps) {
          // v_i gets value eps when a clause holding the opposite literal
          // runs out of alternatives.
          Lit opposite = eps == 0 ? Lit(-order[static_cast<std::size_t>(i)])
                                  : Lit(order[static_cast<std::size_t>(i)]);
          std::vector<int> conj{cur[static_cast<std::size_t>(2 * i + eps)]};
          for (const Clause& c : f.clauses()) {
            if (!c.contains(opposite)) continue;
            std::vector<int> disj;
            for (Lit x : c.lits())
              if (x != opposite) disj.push_back(lit_node(x, cur));
            conj.push_back(mb.mk(GateOp::Or, std::move(disj)));
          }
          next[static_cast<std::size_t>(2 * i + eps)] = mb.mk(GateOp::And, std::move(conj));
          layer_ids.push_back(next[static_cast<std::size_t>(2 * i + eps)]);
        }
      }
      cur = std::move(next);
    }
    std::vector<int> pairs;
    for (int i = 0; i < total; ++i)
      pairs.push_back(mb.mk(GateOp::Or, {cur[static_cast<std::size_t>(2 * i)],
                                         cur[static_cast<std::size_t>(2 * i + 1)]}));
    root = mb.mk(GateOp::And, std::move(pairs));
    layer_ids.push_back(root);
  }
  bridge.named_nodes = mb.count_gates(layer_ids);
  bridge.circuit = mb.export_circuit(root);
  return bridge;
}

namespace {

// Literal substitution for the doubled inputs; node vars remapped to fresh
// external ids.  Clash-containing pseudo-clauses are dropped.
ClauseSet substitute_doubled(const ClauseSet& f0, const MonotoneBridge& b, Var fresh_start) {
  std::map<Var, Lit> input_map;  // circuit input var -> literal over f_vars
  for (std::size_t i = 0; i < b.f_vars.size(); ++i) {
    input_map.emplace(b.doubled[i].first, Lit(b.f_vars[i]));
    input_map.emplace(b.doubled[i].second, Lit(-b.f_vars[i]));
  }
  std::map<Var, Var> node_map;
  Var next = fresh_start;
  for (const Gate& g : b.circuit.gates) node_map[g.node] = ++next;

  std::vector<Clause> out;
  for (const Clause& c : f0.clauses()) {
    std::vector<Lit> lits;
    for (Lit x : c.lits()) {
      auto it = input_map.find(x.var());
      if (it != input_map.end()) {
        lits.push_back(x.positive() ? it->second : it->second.complement());
      } else {
        lits.push_back(Lit(x.positive() ? node_map.at(x.var()) : -node_map.at(x.var())));
      }
    }
    auto mapped = Clause::try_make(std::move(lits));
    if (mapped) out.push_back(std::move(*mapped));
  }
  return ClauseSet(std::move(out));
}

Var max_var_of(const std::vector<Var>& vars) { return vars.empty() ? 0 : vars.back(); }

}  // namespace

ClauseSet monotone_to_ur(const MonotoneBridge& b, TseitinMode mode) {
  ClauseSet f0 = mode == TseitinMode::Full ? tseitin(b.circuit) : reduced_tseitin(b.circuit);
  return substitute_doubled(f0, b, max_var_of(b.f_vars));
}

namespace {

// Specializes the bridge circuit by fixing the doubled pair of one literal to
// "false" and rebuilds with folding; the output keeps its meaning "literal is
// not yet forced".
Circuit specialize_for_literal(const MonotoneBridge& b, std::size_t var_idx, bool positive) {
  const Circuit& c = b.circuit;
  MonoBuilder mb(static_cast<int>(c.inputs.size()));
  std::map<Var, int> id_of;
  for (std::size_t i = 0; i < c.inputs.size(); ++i)
    id_of[c.inputs[i]] = mb.input(static_cast<int>(i));
  // Setting literal x to 0: positive x -> (v^0, v^1) = (0, 1); negative -> (1, 0).
  id_of[b.doubled[var_idx].first] = positive ? 0 : 1;
  id_of[b.doubled[var_idx].second] = positive ? 1 : 0;
  for (const Gate& g : c.gates) {
    int id;
    switch (g.op) {
      case GateOp::Const0: id = 0; break;
      case GateOp::Const1: id = 1; break;
      case GateOp::And:
      case GateOp::Or: {
        std::vector<int> args;
        for (Lit a : g.args) args.push_back(id_of.at(a.var()));
        id = mb.mk(g.op, std::move(args));
        break;
      }
      default:
        throw Error("to_forcing: bridge circuit must be monotone");
    }
    id_of[g.node] = id;
  }
  return mb.export_circuit(id_of.at(c.output));
}

}  // namespace

ClauseSet to_forcing(const MonotoneBridge& b) {
  std::vector<Clause> out;
  ClauseSet base = monotone_to_ur(b, TseitinMode::Full);
  for (const Clause& c : base.clauses()) out.push_back(c);
  Var fresh = std::max(max_var_of(b.f_vars), max_var_of(base.vars()));

  for (std::size_t i = 0; i < b.f_vars.size(); ++i) {
    for (bool positive : {true, false}) {
      Circuit spec = specialize_for_literal(b, i, positive);
      // Tseitin without the output unit; reduced translation at the output
      // node, whose variable becomes the literal itself.
      Lit x(positive ? b.f_vars[i] : -b.f_vars[i]);
      std::vector<Clause> side;
      for (const Gate& g : spec.gates) {
        auto clauses = g.node == spec.output ? gate_impl_primes(g) : gate_equiv_primes(g);
        for (Clause& cl : clauses) side.push_back(std::move(cl));
      }
      // Substitute doubled inputs and rename: output -> x, other nodes fresh.
      std::map<Var, Lit> input_map;
      for (std::size_t j = 0; j < b.f_vars.size(); ++j) {
        input_map.emplace(b.doubled[j].first, Lit(b.f_vars[j]));
        input_map.emplace(b.doubled[j].second, Lit(-b.f_vars[j]));
      }
      // The output node maps to the complement literal: the reduced clauses
      // {not-output} u C then read {x} u C, releasing the unit {x} exactly
      // when the body propagates to 0, i.e. when x is forced.
      std::map<Var, Lit> node_map;
      for (const Gate& g : spec.gates) {
        if (g.node == spec.output)
          node_map.emplace(g.node, x.complement());
        else
          node_map.emplace(g.node, Lit(++fresh));
      }
      for (const Clause& cl : side) {
        std::vector<Lit> lits;
        for (Lit y : cl.lits()) {
          auto it = input_map.find(y.var());
          Lit mapped = it != input_map.end() ? it->second : node_map.at(y.var());
          lits.push_back(y.positive() ? mapped : mapped.complement());
        }
        auto mapped = Clause::try_make(std::move(lits));
        if (mapped) out.push_back(std::move(*mapped));
      }
    }
  }
  return ClauseSet(std::move(out));
}

ClauseSet ur_rep_to_forcing(const ClauseSet& f, const std::vector<Var>& v) {
  return to_forcing(ur_to_monotone(f, v));
}

}  // namespace xcnf
