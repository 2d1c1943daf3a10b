#include "smasp/translate.hpp"

#include <algorithm>

namespace smasp {

Clause rule_clause(const Rule& r) {
    std::vector<Literal> lits;
    if (r.head()) {
        lits.push_back(pos(*r.head()));
    }
    for (const auto& a : r.body().pos) {
        lits.push_back(neg(a));
    }
    for (const auto& a : r.body().neg) {
        lits.push_back(pos(a));
    }
    for (const auto& a : r.body().negneg) {
        lits.push_back(neg(a));
    }
    return Clause(std::move(lits));
}

ClauseSet clausal(const Program& pi) {
    ClauseSet out;
    for (const auto& r : pi.rules) {
        out.insert(rule_clause(r));
    }
    return out;
}

AtomSet open_atoms(const Program& pi, const AtomSet& a) {
    auto h = heads(pi);
    AtomSet out;
    std::set_difference(a.begin(), a.end(), h.begin(), h.end(), std::inserter(out, out.end()));
    return out;
}

Program open_program(const Program& pi, const AtomSet& a) {
    Program out = pi;
    for (const auto& x : open_atoms(pi, a)) {
        out.rules.emplace_back(x, Body{{}, {}, {x}});
    }
    return out;
}

Program open_program(const SmaspTheory& t) { return open_program(t.pi, t.atoms()); }

Program open_program(const PcidTheory& t) { return open_program(t.pi(), t.atoms()); }

ClauseSet completion(const Program& pi, std::size_t max_clauses) {
    ClauseSet out = clausal(pi);
    auto over_budget = [&](std::size_t n) {
        if (n > max_clauses) {
            throw LimitExceeded("clausified completion exceeds the budget of " + std::to_string(max_clauses) +
                                " clauses");
        }
    };
    over_budget(out.size());
    for (const auto& a : atoms_of(pi)) {
        if (is_fact(pi, a)) {
            continue;
        }
        // Distribute  -a ∨ B1 ∨ ... ∨ Bk  into clauses, one literal per body.
        std::set<std::vector<Literal>> partial{{neg(a)}};
        for (const auto& b : bodies(pi, a)) {
            std::set<std::vector<Literal>> next;
            for (const auto& c : partial) {
                for (const auto& l : body_literals(b)) {
                    auto grown = c;
                    if (std::find(grown.begin(), grown.end(), l) == grown.end()) {
                        grown.push_back(l);
                        std::sort(grown.begin(), grown.end());
                    }
                    next.insert(std::move(grown));
                    over_budget(next.size() + out.size());
                }
            }
            partial = std::move(next);
        }
        for (auto& c : partial) {
            out.insert(Clause(c));
        }
        over_budget(out.size());
    }
    return out;
}

std::string body_key(const Body& b) {
    std::string key;
    auto add = [&](const std::string& prefix, const AtomSet& atoms) {
        for (const auto& a : atoms) {
            if (!key.empty()) {
                key += ';';
            }
            key += prefix + a.name();
        }
    };
    add("", b.pos);
    add("~", b.neg);
    add("~~", b.negneg);
    return key;
}

NamedBody name_body(const Body& b) {
    if (b.size() == 1) {
        return NamedBody{b, *body_literals(b).begin()};
    }
    return NamedBody{b, pos(Atom("f(" + body_key(b) + ")", AtomOrigin::fresh_body))};
}

ClauseSet ed_completion(const Program& pi) {
    ClauseSet out = clausal(pi);
    for (const auto& a : atoms_of(pi)) {
        if (is_fact(pi, a)) {
            continue;
        }
        auto bs = bodies(pi, a);
        if (bs.empty()) {
            out.insert(Clause{neg(a)});
            continue;
        }
        std::vector<Literal> support{neg(a)};
        for (const auto& b : bs) {
            auto named = name_body(b);
            support.push_back(named.name);
            if (b.size() <= 1) {
                continue;
            }
            // f_B <-> B
            auto s = body_literals(b);
            std::vector<Literal> back{named.name};
            for (const auto& l : s) {
                back.push_back(complement(l));
                out.insert(Clause{complement(named.name), l});
            }
            out.insert(Clause(std::move(back)));
        }
        out.insert(Clause(std::move(support)));
    }
    return out;
}

Rule clause_constraint(const Clause& c) {
    Body b;
    for (const auto& l : c) {
        (l.positive ? b.neg : b.pos).insert(l.atom);
    }
    return Rule(std::nullopt, std::move(b));
}

Program pi_translation(const PcidTheory& t) {
    Program out = open_program(t);
    for (const auto& c : t.f()) {
        out.rules.push_back(clause_constraint(c));
    }
    return out;
}

bool is_pi_safe(const ClauseSet& f, const Program& pi, std::size_t cap) {
    auto universe = atoms_of(f);
    auto program_atoms = atoms_of(pi);
    universe.insert(program_atoms.begin(), program_atoms.end());
    auto models = classical_models(f, universe, cap);

    for (const auto& a : open_atoms(pi, program_atoms)) {
        bool entailed = std::all_of(models.begin(), models.end(),
                                    [&](const LiteralSet& m) { return m.contains(neg(a)); });
        if (!entailed) {
            return false;
        }
    }
    auto h = heads(pi);
    for (const auto& x : enumerate_answer_sets(pi, program_atoms, cap)) {
        bool witnessed = std::any_of(models.begin(), models.end(), [&](const LiteralSet& m) {
            AtomSet projected;
            for (const auto& a : positive_atoms(m)) {
                if (h.contains(a)) {
                    projected.insert(a);
                }
            }
            return projected == x;
        });
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

Rule desugar_choice(const ChoiceRule& r) {
    Body b = r.body;
    b.negneg.insert(r.atom);
    return Rule(r.atom, std::move(b));
}

} // namespace smasp
