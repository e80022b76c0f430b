#pragma once

// DIMACS CNF and XNF file formats.
//
// DIMACS: comment lines start with 'c', one header "p cnf <n> <m>",
// zero-terminated clauses. XNF extends DIMACS with lines beginning "x"
// carrying one XOR-clause each ("x 1 -2 3 0" = the XOR-clause {1,-2,3},
// sum of its literals equal 0); the header reads "p xnf <n> <m>" and m
// counts CNF and XOR lines together.
//
// Emission is canonical: literals sorted inside clauses, clauses sorted,
// header n = maximal occurring variable.

#include <iosfwd>
#include <string>
#include <vector>

#include "xcnf/core.hpp"

namespace xcnf {

struct ParseError : Error {
  ParseError(const std::string& msg, int line)
      : Error("parse error (line " + std::to_string(line) + "): " + msg), line_no(line) {}
  int line_no;
};

struct XnfFile {
  ClauseSet cnf;
  ClauseSet xors;  // interpreted as XOR-clauses by module xortrans
};

ClauseSet parse_dimacs(std::istream& in);
ClauseSet parse_dimacs(const std::string& text);

XnfFile parse_xnf(std::istream& in);
XnfFile parse_xnf(const std::string& text);

// `comments` are emitted verbatim as "c <line>" after the header.
std::string emit_dimacs(const ClauseSet& f, const std::vector<std::string>& comments = {});
std::string emit_xnf(const XnfFile& f, const std::vector<std::string>& comments = {});

ClauseSet read_dimacs_file(const std::string& path);
XnfFile read_xnf_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace xcnf
