#include "smasp/semantics.hpp"

#include "smasp/translate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace smasp {

namespace {

void require_consistent(const LiteralSet& m, const char* what) {
    if (!is_consistent(m)) {
        throw PreconditionError(std::string(what) + ": literal set must be consistent");
    }
}

void require_no_constraints(const Program& pi) {
    if (!is_weakly_normal(pi)) {
        throw PreconditionError("the W operator is defined for weakly normal programs only");
    }
}

bool subset(const AtomSet& a, const AtomSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const AtomSet& a, const AtomSet& b) {
    return std::any_of(a.begin(), a.end(), [&](const Atom& x) { return b.contains(x); });
}

// Reduct rules are positive: a head (or none) and a positive body. They are kept
// outside Rule because a surviving constraint may have an empty body.
struct PositiveRule {
    std::optional<Atom> head;
    AtomSet body;
};

std::vector<PositiveRule> positive_reduct(const Program& pi, const AtomSet& x) {
    std::vector<PositiveRule> out;
    for (const auto& r : pi.rules) {
        const auto& b = r.body();
        if (intersects(b.neg, x) || !subset(b.negneg, x)) {
            continue;
        }
        out.push_back(PositiveRule{r.head(), b.pos});
    }
    return out;
}

AtomSet least_model(const std::vector<PositiveRule>& rules) {
    AtomSet model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            if (r.head && !model.contains(*r.head) && subset(r.body, model)) {
                model.insert(*r.head);
                changed = true;
            }
        }
    }
    return model;
}

// True iff some literal of s(B) has its dual in M.
bool body_falsified(const Body& b, const LiteralSet& m) {
    for (const auto& l : body_literals(b)) {
        if (m.contains(complement(l))) {
            return true;
        }
    }
    return false;
}

std::vector<Atom> ordered(const AtomSet& s) { return {s.begin(), s.end()}; }

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n > 62) {
        throw LimitExceeded("enumeration over " + std::to_string(n) + " atoms exceeds the cap of " +
                            std::to_string(std::min<std::size_t>(cap, 62)));
    }
}

// Bit-level evaluation used by the model enumerators.
struct MaskedProgram {
    struct MaskedRule {
        int head = -1; // -1 for constraints
        std::uint64_t pos = 0, neg = 0, negneg = 0;
    };
    std::vector<MaskedRule> rules;
    std::uint64_t head_mask = 0;
    std::uint64_t program_atoms = 0;

    MaskedProgram(const Program& pi, const std::map<Atom, int>& index) {
        auto mask_of = [&](const AtomSet& s) {
            std::uint64_t m = 0;
            for (const auto& a : s) {
                m |= std::uint64_t{1} << index.at(a);
            }
            return m;
        };
        for (const auto& r : pi.rules) {
            MaskedRule mr;
            if (r.head()) {
                mr.head = index.at(*r.head());
                head_mask |= std::uint64_t{1} << mr.head;
            }
            mr.pos = mask_of(r.body().pos);
            mr.neg = mask_of(r.body().neg);
            mr.negneg = mask_of(r.body().negneg);
            rules.push_back(mr);
        }
        program_atoms = mask_of(atoms_of(pi));
    }

    // X is an input answer set: the answer set of Pi ∪ (X \ Head(Pi)).
    bool input_answer_set(std::uint64_t x) const {
        std::uint64_t lm = x & ~head_mask;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rules) {
                if (r.head < 0 || (r.neg & x) != 0 || (r.negneg & ~x) != 0) {
                    continue;
                }
                std::uint64_t bit = std::uint64_t{1} << r.head;
                if ((lm & bit) == 0 && (r.pos & ~lm) == 0) {
                    lm |= bit;
                    changed = true;
                }
            }
        }
        if (lm != x) {
            return false;
        }
        for (const auto& r : rules) {
            if (r.head < 0 && (r.neg & x) == 0 && (r.negneg & ~x) == 0 && (r.pos & ~x) == 0) {
                return false;
            }
        }
        return true;
    }
};

std::map<Atom, int> index_of(const std::vector<Atom>& atoms) {
    std::map<Atom, int> index;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        index.emplace(atoms[i], static_cast<int>(i));
    }
    return index;
}

LiteralSet from_mask(const std::vector<Atom>& atoms, std::uint64_t bits) {
    LiteralSet m;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        m.insert(Literal{atoms[i], ((bits >> i) & 1) != 0});
    }
    return m;
}

std::vector<std::uint64_t> masked_classical_models(const ClauseSet& f, const std::vector<Atom>& atoms,
                                                   const std::map<Atom, int>& index) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clauses; // (positive, negative)
    for (const auto& c : f) {
        std::uint64_t p = 0, n = 0;
        for (const auto& l : c) {
            (l.positive ? p : n) |= std::uint64_t{1} << index.at(l.atom);
        }
        clauses.emplace_back(p, n);
    }
    std::vector<std::uint64_t> out;
    const std::uint64_t count = std::uint64_t{1} << atoms.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        bool ok = std::all_of(clauses.begin(), clauses.end(), [&](const auto& c) {
            return (bits & c.first) != 0 || (~bits & c.second) != 0;
        });
        if (ok) {
            out.push_back(bits);
        }
    }
    return out;
}

} // namespace

LiteralSet duals(const LiteralSet& m) {
    LiteralSet out;
    for (const auto& l : m) {
        out.insert(complement(l));
    }
    return out;
}

AtomSet positive_atoms(const LiteralSet& m) {
    AtomSet out;
    for (const auto& l : m) {
        if (l.positive) {
            out.insert(l.atom);
        }
    }
    return out;
}

AtomSet atoms_of(const LiteralSet& m) {
    AtomSet out;
    for (const auto& l : m) {
        out.insert(l.atom);
    }
    return out;
}

LiteralSet restrict_to(const LiteralSet& m, const AtomSet& a) {
    LiteralSet out;
    for (const auto& l : m) {
        if (a.contains(l.atom)) {
            out.insert(l);
        }
    }
    return out;
}

bool is_consistent(const LiteralSet& m) {
    return std::none_of(m.begin(), m.end(), [&](const Literal& l) { return l.positive && m.contains(complement(l)); });
}

bool is_complete_over(const LiteralSet& m, const AtomSet& universe) {
    return atoms_of(m) == universe;
}

LiteralSet interpretation(const AtomSet& x, const AtomSet& universe) {
    LiteralSet out;
    for (const auto& a : universe) {
        out.insert(Literal{a, x.contains(a)});
    }
    return out;
}

Program reduct(const Program& pi, const AtomSet& x) {
    Program out;
    for (const auto& r : positive_reduct(pi, x)) {
        if (r.head || !r.body.empty()) {
            out.rules.emplace_back(r.head, Body{r.body, {}, {}});
        } else {
            // A surviving constraint with an empty positive body cannot be a
            // Rule; it rejects every candidate, which `is_answer_set` handles.
            throw PreconditionError("reduct contains an empty-bodied constraint");
        }
    }
    return out;
}

bool is_answer_set(const Program& pi, const AtomSet& x) {
    auto red = positive_reduct(pi, x);
    if (least_model(red) != x) {
        return false;
    }
    return std::none_of(red.begin(), red.end(),
                        [&](const PositiveRule& r) { return !r.head && subset(r.body, x); });
}

std::vector<AtomSet> enumerate_answer_sets(const Program& pi, const AtomSet& universe, std::size_t cap) {
    check_cap(universe.size(), cap);
    auto atoms = ordered(universe);
    std::set<AtomSet> found;
    const std::uint64_t count = std::uint64_t{1} << atoms.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        AtomSet x;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if ((bits >> i) & 1) {
                x.insert(atoms[i]);
            }
        }
        if (is_answer_set(pi, x)) {
            found.insert(std::move(x));
        }
    }
    return {found.begin(), found.end()};
}

bool is_input_answer_set(const Program& pi, const AtomSet& x) {
    Program extended = pi;
    auto h = heads(pi);
    for (const auto& a : x) {
        if (!h.contains(a)) {
            extended.rules.push_back(Rule::fact(a));
        }
    }
    return is_answer_set(extended, x);
}

bool is_unfounded(const AtomSet& u, const LiteralSet& m, const Program& pi) {
    require_consistent(m, "is_unfounded");
    for (const auto& a : u) {
        for (const auto& b : bodies(pi, a)) {
            if (!body_falsified(b, m) && !intersects(u, b.pos)) {
                return false;
            }
        }
    }
    return true;
}

AtomSet greatest_unfounded_set(const LiteralSet& m, const Program& pi, const AtomSet& signature) {
    require_consistent(m, "greatest_unfounded_set");
    AtomSet founded;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : pi.rules) {
            if (!r.head() || founded.contains(*r.head())) {
                continue;
            }
            if (!body_falsified(r.body(), m) && subset(r.body().pos, founded)) {
                founded.insert(*r.head());
                changed = true;
            }
        }
    }
    AtomSet out;
    for (const auto& a : signature) {
        if (!founded.contains(a)) {
            out.insert(a);
        }
    }
    return out;
}

AtomSet greatest_unfounded_set(const LiteralSet& m, const Program& pi) {
    return greatest_unfounded_set(m, pi, atoms_of(pi));
}

LiteralSet w_step(const Program& pi, const LiteralSet& m, const AtomSet& signature) {
    require_no_constraints(pi);
    LiteralSet out = m;
    if (!is_consistent(m)) {
        for (const auto& a : signature) {
            out.insert(pos(a));
            out.insert(neg(a));
        }
        return out;
    }
    for (const auto& r : pi.rules) {
        auto s = body_literals(r);
        if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
            out.insert(pos(*r.head()));
        }
    }
    for (const auto& a : greatest_unfounded_set(m, pi, signature)) {
        out.insert(neg(a));
    }
    return out;
}

LiteralSet w_step(const Program& pi, const LiteralSet& m) { return w_step(pi, m, atoms_of(pi)); }

LiteralSet w_fix(const Program& pi, const LiteralSet& m) {
    const auto signature = atoms_of(pi);
    LiteralSet current = m;
    for (;;) {
        auto next = w_step(pi, current, signature);
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
}

ThreeValuedModel well_founded_model(const Program& pi) {
    auto m = w_fix(pi, {});
    if (!is_consistent(m)) {
        throw std::logic_error("least fixpoint of W is inconsistent");
    }
    return ThreeValuedModel{std::move(m), atoms_of(pi)};
}

bool is_pcid_model(const PcidTheory& t, const LiteralSet& m) {
    auto universe = t.atoms();
    if (!is_consistent(m) || !is_complete_over(m, universe) || !satisfies(m, t.f())) {
        return false;
    }
    auto open = open_atoms(t.pi(), universe);
    return m == w_fix(open_program(t), restrict_to(m, open));
}

bool is_smasp_model(const SmaspTheory& t, const LiteralSet& m) {
    if (!is_consistent(m) || !is_complete_over(m, t.atoms()) || !satisfies(m, t.f)) {
        return false;
    }
    return is_input_answer_set(t.pi, positive_atoms(m));
}

void for_each_classical_model(const ClauseSet& f, const AtomSet& universe, std::size_t cap,
                              const std::function<bool(const LiteralSet&)>& visit) {
    check_cap(universe.size(), cap);
    auto mentioned = atoms_of(f);
    if (!std::includes(universe.begin(), universe.end(), mentioned.begin(), mentioned.end())) {
        throw PreconditionError("formula mentions atoms outside the enumeration universe");
    }
    auto atoms = ordered(universe);
    auto index = index_of(atoms);
    for (auto bits : masked_classical_models(f, atoms, index)) {
        if (!visit(from_mask(atoms, bits))) {
            return;
        }
    }
}

std::vector<LiteralSet> classical_models(const ClauseSet& f, const AtomSet& universe, std::size_t cap) {
    std::vector<LiteralSet> out;
    for_each_classical_model(f, universe, cap, [&](const LiteralSet& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<LiteralSet> enumerate_smasp_models(const SmaspTheory& t, std::size_t cap) {
    auto universe = t.atoms();
    check_cap(universe.size(), cap);
    auto atoms = ordered(universe);
    auto index = index_of(atoms);
    MaskedProgram program(t.pi, index);
    std::vector<LiteralSet> out;
    for (auto bits : masked_classical_models(t.f, atoms, index)) {
        if (program.input_answer_set(bits)) {
            out.push_back(from_mask(atoms, bits));
        }
    }
    return out;
}

std::vector<LiteralSet> enumerate_pcid_models(const PcidTheory& t, std::size_t cap) {
    std::vector<LiteralSet> out;
    for_each_classical_model(t.f(), t.atoms(), cap, [&](const LiteralSet& m) {
        if (is_pcid_model(t, m)) {
            out.push_back(m);
        }
        return true;
    });
    return out;
}

EntailmentOracle::EntailmentOracle(const SmaspTheory& t, std::size_t cap)
    : universe_(t.atoms()), models_(enumerate_smasp_models(t, cap)) {}

bool EntailmentOracle::entails(const Clause& c) const {
    for (const auto& l : c) {
        if (!universe_.contains(l.atom)) {
            throw PreconditionError("entailment query mentions foreign atom " + l.atom.name());
        }
    }
    return std::all_of(models_.begin(), models_.end(), [&](const LiteralSet& m) { return satisfies(m, c); });
}

bool entails(const SmaspTheory& t, const std::vector<Clause>& g, std::size_t cap) {
    EntailmentOracle oracle(t, cap);
    return std::all_of(g.begin(), g.end(), [&](const Clause& c) { return oracle.entails(c); });
}

bool entails(const SmaspTheory& t, const Clause& g, std::size_t cap) {
    return entails(t, std::vector<Clause>{g}, cap);
}

bool program_entails(const Program& pi, const std::vector<Clause>& g, const AtomSet& universe,
                     std::size_t cap) {
    auto program_atoms = atoms_of(pi);
    bool holds = true;
    for_each_classical_model({}, universe, cap, [&](const LiteralSet& n) {
        AtomSet x;
        for (const auto& a : positive_atoms(n)) {
            if (program_atoms.contains(a)) {
                x.insert(a);
            }
        }
        if (is_answer_set(pi, x)) {
            for (const auto& c : g) {
                if (!satisfies(n, c)) {
                    holds = false;
                    return false;
                }
            }
        }
        return true;
    });
    return holds;
}

bool is_total_on(const PcidTheory& t, const LiteralSet& m) {
    auto universe = t.atoms();
    auto fix = w_fix(open_program(t), restrict_to(m, open_atoms(t.pi(), universe)));
    auto assigned = atoms_of(fix);
    return std::includes(assigned.begin(), assigned.end(), universe.begin(), universe.end());
}

bool is_total(const PcidTheory& t, std::size_t cap) {
    bool total = true;
    for_each_classical_model(t.f(), t.atoms(), cap, [&](const LiteralSet& m) {
        total = is_total_on(t, m);
        return total;
    });
    return total;
}

Program simplify_by(const Program& pi, const LiteralSet& n) {
    require_consistent(n, "simplify_by");
    Program out;
    for (const auto& r : pi.rules) {
        if (body_falsified(r.body(), n)) {
            continue;
        }
        Body b;
        for (const auto& a : r.body().pos) {
            if (!n.contains(pos(a))) {
                b.pos.insert(a);
            }
        }
        for (const auto& a : r.body().neg) {
            if (!n.contains(neg(a))) {
                b.neg.insert(a);
            }
        }
        for (const auto& a : r.body().negneg) {
            if (!n.contains(pos(a))) {
                b.negneg.insert(a);
            }
        }
        if (r.is_constraint() && b.empty()) {
            throw PreconditionError("simplification leaves a constraint with an empty body");
        }
        out.rules.emplace_back(r.head(), std::move(b));
    }
    return out;
}

} // namespace smasp
