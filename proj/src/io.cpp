#include "xcnf/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace xcnf {

namespace {

struct Parsed {
  std::vector<Clause> cnf;
  std::vector<Clause> xors;
};

// Line-oriented scanner shared by DIMACS and XNF. Clauses may span lines;
// an "x" token is only legal at the start of a clause.
Parsed scan(std::istream& in, bool allow_x) {
  Parsed out;
  bool header_seen = false;
  bool header_xnf = false;
  long declared_clauses = 0;
  std::string line;
  int line_no = 0;
  std::vector<Lit> current;
  bool current_is_xor = false;
  bool in_clause = false;
  int clause_start_line = 1;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == 'c') continue;
    if (tok == "p") {
      if (header_seen) throw ParseError("duplicate header", line_no);
      if (in_clause) throw ParseError("header inside clause", line_no);
      std::string fmt;
      long nv = -1, nc = -1;
      if (!(ls >> fmt >> nv >> nc) || nv < 0 || nc < 0)
        throw ParseError("malformed header", line_no);
      if (fmt == "xnf")
        header_xnf = true;
      else if (fmt != "cnf")
        throw ParseError("unknown format '" + fmt + "' in header", line_no);
      if (header_xnf && !allow_x) throw ParseError("xnf header in cnf context", line_no);
      if (ls >> tok) throw ParseError("trailing tokens after header", line_no);
      declared_clauses = nc;
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("clause data before header", line_no);

    // token loop over this line; `tok` already holds the first token
    bool have_tok = true;
    while (have_tok) {
      if (tok == "x") {
        if (!allow_x) throw ParseError("xor line in cnf file", line_no);
        if (in_clause) throw ParseError("'x' inside clause", line_no);
        current_is_xor = true;
        in_clause = true;
        clause_start_line = line_no;
      } else {
        long v;
        try {
          std::size_t used = 0;
          v = std::stol(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ParseError("unexpected token '" + tok + "'", line_no);
        }
        if (v == 0) {
          if (!in_clause) {
            // "0" opening a clause: the empty clause
            current_is_xor = false;
          }
          auto c = Clause::try_make(current);
          if (!c) throw ParseError("clashing literals in clause", line_no);
          (current_is_xor ? out.xors : out.cnf).push_back(*c);
          current.clear();
          in_clause = false;
          current_is_xor = false;
        } else {
          if (v > INT32_MAX || v < INT32_MIN)
            throw ParseError("literal out of range", line_no);
          if (!in_clause) {
            in_clause = true;
            current_is_xor = false;
            clause_start_line = line_no;
          }
          current.push_back(Lit(static_cast<int>(v)));
        }
      }
      have_tok = static_cast<bool>(ls >> tok);
    }
  }
  if (in_clause) throw ParseError("unterminated clause (missing 0)", clause_start_line);
  if (!header_seen) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  long total = static_cast<long>(out.cnf.size() + out.xors.size());
  if (total != declared_clauses)
    throw ParseError("clause count mismatch: header says " + std::to_string(declared_clauses) +
                         ", file has " + std::to_string(total),
                     line_no == 0 ? 1 : line_no);
  return out;
}

Var max_var(const ClauseSet& f) {
  auto vs = f.vars();
  return vs.empty() ? 0 : vs.back();
}

void emit_clause(std::ostringstream& os, const Clause& c, const char* prefix) {
  os << prefix;
  for (Lit x : c.lits()) os << x.value() << ' ';
  os << "0\n";
}

}  // namespace

ClauseSet parse_dimacs(std::istream& in) {
  Parsed p = scan(in, /*allow_x=*/false);
  return ClauseSet(std::move(p.cnf));
}

ClauseSet parse_dimacs(const std::string& text) {
  std::istringstream is(text);
  return parse_dimacs(is);
}

XnfFile parse_xnf(std::istream& in) {
  Parsed p = scan(in, /*allow_x=*/true);
  return XnfFile{ClauseSet(std::move(p.cnf)), ClauseSet(std::move(p.xors))};
}

XnfFile parse_xnf(const std::string& text) {
  std::istringstream is(text);
  return parse_xnf(is);
}

std::string emit_dimacs(const ClauseSet& f, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "p cnf " << max_var(f) << ' ' << f.c() << '\n';
  for (const std::string& s : comments) os << "c " << s << '\n';
  for (const Clause& c : f.clauses()) emit_clause(os, c, "");
  return os.str();
}

std::string emit_xnf(const XnfFile& f, const std::vector<std::string>& comments) {
  std::ostringstream os;
  Var n = std::max(max_var(f.cnf), max_var(f.xors));
  os << "p xnf " << n << ' ' << f.cnf.c() + f.xors.c() << '\n';
  for (const std::string& s : comments) os << "c " << s << '\n';
  for (const Clause& c : f.cnf.clauses()) emit_clause(os, c, "");
  for (const Clause& c : f.xors.clauses()) emit_clause(os, c, "x ");
  return os.str();
}

ClauseSet read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_dimacs(in);
}

XnfFile read_xnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_xnf(in);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << contents;
}

}  // namespace xcnf
