// Small named inputs shared by the test files.
#pragma once

#include "smasp/format.hpp"

#include <sstream>

namespace smasp::testing {

inline Atom at(const char* name) { return Atom(name); }

// "a -b f(b;~c)" -> {a, -b, f_{b,not c}}
inline LiteralSet lits(const std::string& text) {
    LiteralSet out;
    std::istringstream in(text);
    std::string item;
    while (in >> item) out.insert(parse_literal(item));
    return out;
}

inline AtomSet atoms(const std::string& text) {
    AtomSet out;
    std::istringstream in(text);
    std::string item;
    while (in >> item) out.insert(parse_atom(item));
    return out;
}

// "a | -b"
inline Clause cl(const std::string& text) { return *parse_clause_lines(text).begin(); }

inline ClauseSet clauses(std::initializer_list<const char*> lines) {
    ClauseSet out;
    for (const auto* l : lines) out.insert(cl(l));
    return out;
}

inline Program lp(const std::string& text) { return parse_lp(text); }

// a :- b, not c.  b.
inline Program pi0() { return lp("a :- b, not c.\nb."); }
inline ClauseSet f0() { return clauses({"b | -c"}); }
inline ClauseSet f1() { return clauses({"a | b", "-a | c"}); }
inline Program pi2() { return lp("a :- a."); }
inline Program pi3() { return lp("a :- b.\nb :- a."); }
inline Program pi4() { return lp("a :- not not a."); }

} // namespace smasp::testing
