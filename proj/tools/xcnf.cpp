// xcnf: XOR-to-CNF translation, propagation-quality measurement, and
// representation auditing.
//
// Exit codes: 0 success, 1 property FAIL, 2 input error, 3 cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xcnf/circuits.hpp"
#include "xcnf/io.hpp"
#include "xcnf/measures.hpp"
#include "xcnf/reductions.hpp"
#include "xcnf/resolution.hpp"
#include "xcnf/verify.hpp"
#include "xcnf/xortrans.hpp"

namespace {

using namespace xcnf;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void put(const std::string& out_path, const std::string& contents) {
  if (out_path.empty() || out_path == "-")
    std::cout << contents;
  else
    write_file(out_path, contents);
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::vector<Var> parse_scope(const std::string& scope, const ClauseSet& f) {
  if (scope == "all") return f.vars();
  std::vector<Var> vars;
  std::istringstream ls(scope);
  std::string tok;
  while (std::getline(ls, tok, ','))
    if (!tok.empty()) vars.push_back(std::stoi(tok));
  return vars;
}

struct GlobalOpts {
  std::size_t cap_n = 14;
  long cap_k = -1;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // reserved for randomized corpus workflows

  MeasureOptions measure() const {
    MeasureOptions m;
    m.enum_cap = cap_n;
    m.k_cap = cap_k;
    return m;
  }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.cap_n = cap_n;
    v.threads = threads;
    v.measure = measure();
    return v;
  }
};

int cmd_translate(const GlobalOpts& g, const std::string& input, const std::string& output,
                  const std::string& mode, const std::string& order) {
  std::string text = slurp(input);
  XnfFile file = parse_xnf(text);
  XorClauseSet xors{file.xors};
  X1Options x1opts;
  x1opts.descending = order == "desc";
  auto all_vars = [&] {
    Var m = 0;
    for (Var v : file.cnf.vars()) m = std::max(m, v);
    for (Var v : file.xors.vars()) m = std::max(m, v);
    return m;
  };
  x1opts.fresh_floor = all_vars();

  std::vector<std::string> comments;
  comments.push_back("xcnf translate mode=" + mode + " order=" + order);
  comments.push_back("source=" + input + " hash=" + fnv1a(text));

  std::string chosen = mode;
  if (mode == "auto") {
    if (xor_acyclic(xors))
      chosen = "x1";
    else if (xors.clauses.c() == 2)
      chosen = "x2";
    else
      chosen = "xstar";
  }

  ClauseSet translated;
  if (chosen == "x2" && xors.clauses.c() == 2) {
    const Clause& c = xors.clauses.clauses()[0];
    const Clause& d = xors.clauses.clauses()[1];
    bool ok = true;
    std::string why;
    try {
      if (!xor_sat(xors)) throw Error("unsatisfiable XOR input");
      X2Result r = x2(c, d, x1opts);
      translated = r.cnf;
      comments.push_back("x2 s=" + std::to_string(r.s) +
                         " d_flips=" + std::to_string(r.d_flips));
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    if (!ok) {
      if (!xor_sat(xors)) {
        comments.push_back("unsatisfiable XOR system: emitting {bot}");
        put(output, emit_dimacs(ClauseSet{Clause{}}, comments));
        return 0;
      }
      if (mode == "auto") {
        comments.push_back("x2 preconditions failed (" + why + "); falling back to xstar");
        chosen = "xstar";
      } else {
        throw Error(why);
      }
    }
  } else if (chosen == "x2") {
    throw Error("x2 requires exactly 2 XOR-clauses, got " + std::to_string(xors.clauses.c()));
  }

  if (chosen == "x0") {
    translated = x0_set(xors);
  } else if (chosen == "x1") {
    translated = x1_set(xors, x1opts);
  } else if (chosen == "xstar") {
    if (!xor_sat(xors)) {
      comments.push_back("unsatisfiable XOR system: emitting {bot}");
      put(output, emit_dimacs(ClauseSet{Clause{}}, comments));
      return 0;
    }
    XorClauseSet fs = f_star(xors);
    comments.push_back("fstar clauses=" + std::to_string(fs.clauses.c()));
    translated = x1_set(fs, x1opts);
  } else if (chosen != "x2") {
    throw Error("unknown mode: " + chosen);
  }

  std::vector<Clause> merged(file.cnf.clauses().begin(), file.cnf.clauses().end());
  for (const Clause& c : translated.clauses()) merged.push_back(c);
  Var floor = all_vars();
  auto tv = translated.vars();
  if (!tv.empty() && tv.back() > floor)
    comments.push_back("aux " + std::to_string(floor + 1) + ".." + std::to_string(tv.back()));
  put(output, emit_dimacs(ClauseSet(std::move(merged)), comments));
  (void)g;
  return 0;
}

int cmd_measure(const GlobalOpts& g, const std::string& input, const std::string& scope,
                const std::string& kinds, bool witness) {
  ClauseSet f = read_dimacs_file(input);
  std::vector<Var> sc = parse_scope(scope, f);
  auto fv = f.vars();
  for (Var v : sc)
    if (!std::binary_search(fv.begin(), fv.end(), v))
      throw Error("scope variable " + std::to_string(v) + " does not occur in the input");
  std::istringstream ks(kinds);
  std::string kind;
  MeasureOptions opts = g.measure();
  while (std::getline(ks, kind, ',')) {
    MeasureReport rep;
    if (kind == "hd")
      rep = hardness(f, sc, opts);
    else if (kind == "phd")
      rep = p_hardness(f, sc, opts);
    else if (kind == "whd")
      rep = asymmetric_width(f, sc, opts);
    else if (kind == "wid")
      rep = symmetric_width(f, sc, opts);
    else
      throw Error("unknown measure kind: " + kind);
    std::cout << rep.str(witness) << '\n';
  }
  return 0;
}

SemanticFunction load_spec(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream probe(text);
  std::string first;
  probe >> first;
  while (first == "c") {
    std::string rest;
    std::getline(probe, rest);
    probe >> first;
  }
  if (first == "circuit") return SemanticFunction::from_circuit(parse_circuit(text));
  return SemanticFunction::from_xnf(parse_xnf(text));
}

int cmd_verify(const GlobalOpts& g, const std::string& rep_path, const std::string& spec_path,
               const std::string& props) {
  ClauseSet rep = read_dimacs_file(rep_path);
  SemanticFunction f = load_spec(spec_path);
  VerifyOptions opts = g.verify();
  bool all_pass = true;
  std::istringstream ps(props);
  std::string prop;
  while (std::getline(ps, prop, ',')) {
    Verdict v;
    if (prop == "rep")
      v = is_representation(rep, f, opts);
    else if (prop == "gac")
      v = is_gac(rep, f, opts);
    else if (prop == "ur")
      v = is_ur(rep, f, opts);
    else if (prop == "up")
      v = is_up_representation(rep, f, opts);
    else if (prop == "forcing")
      v = is_forcing(rep, f, opts);
    else if (prop == "absolute-forcing")
      v = is_absolute_forcing(rep, f, opts);
    else if (prop == "satrec-r1")
      v = has_sat_recognition(rep, f, {ReductionKind::R1, 1}, opts);
    else if (prop == "satrec-ropl")
      v = has_sat_recognition(rep, f, {ReductionKind::Ropl, 1}, opts);
    else if (prop == "satrec-rinf")
      v = has_sat_recognition(rep, f, {ReductionKind::Rinf, 1}, opts);
    else if (prop == "usatrec-r1")
      v = has_usat_recognition(rep, f, {ReductionKind::R1, 1}, opts);
    else
      throw Error("unknown property: " + prop);
    std::cout << v.str() << '\n';
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_generate(const GlobalOpts& g, const std::string& kind, const std::vector<std::string>& params,
                 const std::string& output) {
  (void)g;
  std::vector<std::string> comments{"xcnf generate kind=" + kind};
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw Error("generate " + kind + " expects " + std::to_string(n) + " parameter(s)");
  };
  if (kind == "tn") {
    need(1);
    int n = std::stoi(params[0]);
    comments.push_back("n=" + params[0]);
    put(output, emit_dimacs(generate_tn(n), comments));
  } else if (kind == "dipole") {
    need(1);
    int n = std::stoi(params[0]);
    comments.push_back("n=" + params[0]);
    put(output, emit_dimacs(tseitin_formula(dipole(n)), comments));
  } else if (kind == "bouquet") {
    if (params.empty()) throw Error("generate bouquet expects literals");
    std::vector<Lit> lits;
    for (const std::string& p : params) lits.push_back(Lit(std::stoi(p)));
    put(output, emit_dimacs(tseitin_formula(bouquet(Clause(std::move(lits)))), comments));
  } else if (kind == "ak" || kind == "akprime") {
    need(1);
    int k = std::stoi(params[0]);
    if (k < 0 || k > 20) throw Error("ak parameter out of range");
    std::vector<Clause> cs;
    for (int pat = 0; pat < (1 << k); ++pat) {
      std::vector<Lit> lits;
      for (int i = 0; i < k; ++i) lits.push_back(Lit(pat >> i & 1 ? -(i + 1) : i + 1));
      if (kind == "akprime") lits.push_back(Lit(k + 1));
      cs.push_back(Clause(std::move(lits)));
    }
    comments.push_back("k=" + params[0]);
    put(output, emit_dimacs(ClauseSet(std::move(cs)), comments));
  } else if (kind == "msp-relax") {
    need(1);
    std::string text = slurp(params[0]);
    MSP msp = parse_msp(text);
    MspRelaxation rel = msp_relax(msp);
    comments.push_back("source=" + params[0] + " hash=" + fnv1a(text));
    for (std::size_t i = 0; i < rel.z_of_input.size(); ++i) {
      std::string line = "z[" + std::to_string(i + 1) + "] =";
      for (Var z : rel.z_of_input[i]) line += " " + std::to_string(z);
      comments.push_back(line);
    }
    put(output, emit_xnf(XnfFile{ClauseSet{}, rel.relaxed.clauses}, comments));
  } else {
    throw Error("unknown generator kind: " + kind);
  }
  return 0;
}

int cmd_prime(const GlobalOpts& g, const std::string& input, const std::string& output) {
  ClauseSet f = read_dimacs_file(input);
  std::size_t cap = std::min<std::size_t>(g.cap_n + 4, 20);
  put(output, emit_dimacs(prime_implicates(f, cap), {"xcnf prime"}));
  return 0;
}

int cmd_circuit(const GlobalOpts& g, const std::string& op, const std::string& input,
                const std::string& output, const std::string& scope, const std::string& mode) {
  (void)g;
  if (op == "tseitin" || op == "tseitin-reduced") {
    Circuit c = parse_circuit(slurp(input));
    ClauseSet f = op == "tseitin" ? tseitin(c) : reduced_tseitin(c);
    put(output, emit_dimacs(f, {"xcnf circuit op=" + op}));
    return 0;
  }
  if (op == "ur2mono") {
    ClauseSet f = read_dimacs_file(input);
    std::vector<Var> vars = parse_scope(scope, f);
    MonotoneBridge b = ur_to_monotone(f, vars);
    std::ostringstream os;
    os << "c xcnf circuit op=ur2mono named_nodes=" << b.named_nodes << '\n';
    for (std::size_t i = 0; i < b.f_vars.size(); ++i)
      os << "c doubled " << b.f_vars[i] << " -> (" << b.doubled[i].first << ","
         << b.doubled[i].second << ")\n";
    os << emit_circuit(b.circuit);
    put(output, os.str());
    return 0;
  }
  if (op == "mono2ur" || op == "forcing-circuit") {
    // circuit over doubled inputs 1..2n; --scope lists the n function variables
    Circuit c = parse_circuit(slurp(input));
    std::istringstream ls(scope);
    std::string tok;
    MonotoneBridge b;
    while (std::getline(ls, tok, ','))
      if (!tok.empty()) b.f_vars.push_back(std::stoi(tok));
    std::sort(b.f_vars.begin(), b.f_vars.end());
    if (c.inputs.size() != 2 * b.f_vars.size())
      throw Error("mono2ur: circuit must have exactly 2|scope| inputs");
    for (std::size_t i = 0; i < b.f_vars.size(); ++i)
      b.doubled.emplace_back(c.inputs[2 * i], c.inputs[2 * i + 1]);
    b.circuit = std::move(c);
    ClauseSet f = op == "mono2ur"
                      ? monotone_to_ur(b, mode == "reduced" ? TseitinMode::Reduced
                                                            : TseitinMode::Full)
                      : to_forcing(b);
    put(output, emit_dimacs(f, {"xcnf circuit op=" + op + " mode=" + mode}));
    return 0;
  }
  if (op == "forcing") {
    ClauseSet f = read_dimacs_file(input);
    std::vector<Var> vars = parse_scope(scope, f);
    put(output, emit_dimacs(ur_rep_to_forcing(f, vars), {"xcnf circuit op=forcing"}));
    return 0;
  }
  throw Error("unknown circuit op: " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XOR-to-CNF translation and propagation-quality toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--cap-n", g.cap_n, "enumeration cap on scope sizes (default 14)");
  app.add_option("--cap-k", g.cap_k, "ceiling for reduction levels (default n+2)");
  app.add_option("--threads", g.threads, "worker bound for parallel checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized test-corpus generation");

  std::string input, output, spec, mode = "auto", order = "asc", scope = "all";
  std::string kinds = "hd", props = "rep", kind, op;
  std::vector<std::string> params;
  bool witness = false;

  auto* translate = app.add_subcommand("translate", "XNF to CNF with quality guarantees");
  translate->add_option("input", input, "XNF file")->required();
  translate->add_option("-o,--output", output, "output path (default stdout)");
  translate->add_option("--mode", mode, "x0|x1|xstar|x2|auto");
  translate->add_option("--order", order, "variable order for splitting: asc|desc");

  auto* measure = app.add_subcommand("measure", "hardness / p-hardness / width reports");
  measure->add_option("input", input, "DIMACS file")->required();
  measure->add_option("--scope", scope, "\"all\" or comma-separated variables");
  measure->add_option("--kinds", kinds, "subset of hd,phd,whd,wid");
  measure->add_flag("--witness", witness, "emit maximizing assignments");

  auto* verify = app.add_subcommand("verify", "representation predicates");
  verify->add_option("rep", input, "DIMACS representation")->required();
  verify->add_option("spec", spec, "XNF or circuit file with the function")->required();
  verify->add_option("--props", props,
                     "subset of rep,gac,ur,up,forcing,absolute-forcing,satrec-r1,"
                     "satrec-ropl,satrec-rinf,usatrec-r1");

  auto* generate = app.add_subcommand("generate", "instance generators");
  generate->add_option("kind", kind, "tn|dipole|bouquet|ak|akprime|msp-relax")->required();
  generate->add_option("params", params, "generator parameters");
  generate->add_option("-o,--output", output, "output path (default stdout)");

  auto* prime = app.add_subcommand("prime", "prime implicates of a DIMACS file");
  prime->add_option("input", input, "DIMACS file")->required();
  prime->add_option("-o,--output", output, "output path (default stdout)");

  auto* circuit = app.add_subcommand("circuit", "circuit translations and the monotone bridge");
  circuit->add_option("op", op, "tseitin|tseitin-reduced|ur2mono|mono2ur|forcing")->required();
  circuit->add_option("input", input, "input file")->required();
  circuit->add_option("-o,--output", output, "output path (default stdout)");
  circuit->add_option("--scope", scope, "designated variables (comma-separated or \"all\")");
  circuit->add_option("--mode", mode, "mono2ur translation: full|reduced");

  CLI11_PARSE(app, argc, argv);

  try {
    if (translate->parsed()) return cmd_translate(g, input, output, mode, order);
    if (measure->parsed()) return cmd_measure(g, input, scope, kinds, witness);
    if (verify->parsed()) return cmd_verify(g, input, spec, props);
    if (generate->parsed()) return cmd_generate(g, kind, params, output);
    if (prime->parsed()) return cmd_prime(g, input, output);
    if (circuit->parsed())
      return cmd_circuit(g, op, input, output, scope, mode == "auto" ? "full" : mode);
  } catch (const xcnf::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const xcnf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
