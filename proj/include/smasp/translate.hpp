// Syntactic reductions between clauses, programs and theories.
#pragma once

#include "smasp/core.hpp"
#include "smasp/semantics.hpp"

#include <cstddef>

namespace smasp {

inline constexpr std::size_t kDefaultClauseBudget = 1'000'000;

Clause rule_clause(const Rule& r);
ClauseSet clausal(const Program& pi); // Pi^cl

AtomSet open_atoms(const Program& pi, const AtomSet& a);
Program open_program(const Program& pi, const AtomSet& a);
Program open_program(const SmaspTheory& t); // Pi^o
Program open_program(const PcidTheory& t);

ClauseSet completion(const Program& pi, std::size_t max_clauses = kDefaultClauseBudget);

// The literal standing for a body in ED-completion: s(l) for a one-element
// body, otherwise the fresh atom f_B named after the canonical body text.
struct NamedBody {
    Body body;
    Literal name;
};

NamedBody name_body(const Body& b);
std::string body_key(const Body& b);
ClauseSet ed_completion(const Program& pi);

Rule clause_constraint(const Clause& c); // C^r
Program pi_translation(const PcidTheory& t);

bool is_pi_safe(const ClauseSet& f, const Program& pi, std::size_t cap = kDefaultEnumerationCap);

// A singleton choice rule {atom} :- body.
struct ChoiceRule {
    Atom atom;
    Body body;
};

Rule desugar_choice(const ChoiceRule& r);

} // namespace smasp
