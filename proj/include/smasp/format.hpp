// Text formats: DIMACS CNF, the lp rule language and the two-section pcid
// format, plus the per-mode pipeline that turns an input into the theory the
// engine searches.
#pragma once

#include "smasp/core.hpp"
#include "smasp/engine.hpp"

#include <string>
#include <string_view>

namespace smasp {

class ParseError : public Error {
public:
    using Error::Error;
};

enum class InputFormat { cnf, lp, pcid };

std::string_view format_name(InputFormat f);
InputFormat parse_format(std::string_view name);
// By file extension; lp when the extension is unknown.
InputFormat guess_format(std::string_view path);

struct DimacsCnf {
    std::size_t variables = 0;
    ClauseSet clauses; // atom i is named x<i>
};

DimacsCnf parse_dimacs(std::string_view text);
// Atoms named x<i> keep their index; any other atom is numbered after the
// largest such index in canonical order and listed in a comment line.
std::string print_dimacs(const ClauseSet& f);

Program parse_lp(std::string_view text);
std::string print_lp(const Program& pi);
std::string print_rule(const Rule& r);

// One clause per line, literals joined by " | ".
ClauseSet parse_clause_lines(std::string_view text);
std::string print_clause_lines(const ClauseSet& f);

PcidTheory parse_pcid(std::string_view text);
// Same layout, but constraints are allowed in the program section.
SmaspTheory parse_smasp(std::string_view text);
std::string print_pcid(const PcidTheory& t);
std::string print_smasp(const SmaspTheory& t);

// Literal text as used in traces and clause lines: "a", "-a"; atoms whose name
// starts with "f(" are the fresh body atoms.
Literal parse_literal(std::string_view text);
Atom parse_atom(std::string_view text);

struct Problem {
    InputFormat format = InputFormat::lp;
    Mode mode = Mode::clasp;
    SmaspTheory theory;           // what the engine runs on
    AtomSet reported;             // atoms shown in a model
    bool positive_only = false;   // report M+ only (lp inputs)
    std::optional<PcidTheory> pcid;
    Program program;              // the program as written in the input
};

Problem load_problem(InputFormat format, Mode mode, std::string_view text);

LiteralSet project_model(const Problem& p, const LiteralSet& m);
std::string format_model(const Problem& p, const LiteralSet& m, bool raw);

// Clause excluding the projection of `m` from further models, or nothing when
// the projection is empty.
std::optional<Clause> blocking_clause(const Problem& p, const LiteralSet& m);

} // namespace smasp
