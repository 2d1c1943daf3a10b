#include "smasp/core.hpp"

#include <algorithm>

namespace smasp {

Atom::Atom(std::string name, AtomOrigin origin) : origin_(origin), name_(std::move(name)) {
    if (name_.empty()) {
        throw PreconditionError("atom name must be non-empty");
    }
}

std::string to_string(const Literal& l) {
    return l.positive ? l.atom.name() : "-" + l.atom.name();
}

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
    if (lits_.empty()) {
        throw PreconditionError("a clause must contain at least one literal");
    }
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause::Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}

bool Clause::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::string to_string(const Clause& c) {
    std::string out;
    for (const auto& l : c) {
        if (!out.empty()) {
            out += " | ";
        }
        out += to_string(l);
    }
    return out;
}

AtomSet atoms_of(const Clause& c) {
    AtomSet out;
    for (const auto& l : c) {
        out.insert(l.atom);
    }
    return out;
}

AtomSet atoms_of(const ClauseSet& f) {
    AtomSet out;
    for (const auto& c : f) {
        for (const auto& l : c) {
            out.insert(l.atom);
        }
    }
    return out;
}

bool satisfies(const LiteralSet& m, const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return m.contains(l); });
}

bool satisfies(const LiteralSet& m, const ClauseSet& f) {
    return std::all_of(f.begin(), f.end(), [&](const Clause& c) { return satisfies(m, c); });
}

LiteralSet body_literals(const Body& b) {
    LiteralSet out;
    for (const auto& a : b.pos) {
        out.insert(pos(a));
    }
    for (const auto& a : b.neg) {
        out.insert(neg(a));
    }
    for (const auto& a : b.negneg) {
        out.insert(pos(a));
    }
    return out;
}

AtomSet atoms_of(const Body& b) {
    AtomSet out = b.pos;
    out.insert(b.neg.begin(), b.neg.end());
    out.insert(b.negneg.begin(), b.negneg.end());
    return out;
}

Rule::Rule(std::optional<Atom> head, Body body) : head_(std::move(head)), body_(std::move(body)) {
    if (!head_ && body_.empty()) {
        throw PreconditionError("a constraint must have a non-empty body");
    }
}

LiteralSet body_literals(const Rule& r) { return body_literals(r.body()); }

AtomSet heads(const Program& pi) {
    AtomSet out;
    for (const auto& r : pi.rules) {
        if (r.head()) {
            out.insert(*r.head());
        }
    }
    return out;
}

AtomSet atoms_of(const Program& pi) {
    AtomSet out;
    for (const auto& r : pi.rules) {
        if (r.head()) {
            out.insert(*r.head());
        }
        auto body = atoms_of(r.body());
        out.insert(body.begin(), body.end());
    }
    return out;
}

std::set<Body> bodies(const Program& pi, const Atom& a) {
    std::set<Body> out;
    for (const auto& r : pi.rules) {
        if (r.head() == a) {
            out.insert(r.body());
        }
    }
    return out;
}

bool is_fact(const Program& pi, const Atom& a) {
    return std::any_of(pi.rules.begin(), pi.rules.end(),
                       [&](const Rule& r) { return r.head() == a && r.body().empty(); });
}

bool is_weakly_normal(const Program& pi) {
    return std::all_of(pi.rules.begin(), pi.rules.end(),
                       [](const Rule& r) { return r.is_weakly_normal(); });
}

bool is_normal(const Program& pi) {
    return std::all_of(pi.rules.begin(), pi.rules.end(), [](const Rule& r) { return r.is_normal(); });
}

Program concat(Program a, const Program& b) {
    a.rules.insert(a.rules.end(), b.rules.begin(), b.rules.end());
    return a;
}

Trail::Trail(std::initializer_list<TrailEntry> entries) {
    for (const auto& e : entries) {
        push(e);
    }
}

void Trail::push(TrailEntry entry) {
    if (contains(entry.literal)) {
        throw PreconditionError("literal " + to_string(entry.literal) + " already occurs in the trail");
    }
    entries_.push_back(std::move(entry));
}

bool Trail::contains(const Literal& l) const { return position(l).has_value(); }

std::optional<std::size_t> Trail::position(const Literal& l) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].literal == l) {
            return i;
        }
    }
    return std::nullopt;
}

bool Trail::assigns(const Atom& a) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const TrailEntry& e) { return e.literal.atom == a; });
}

bool Trail::has_decision() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const TrailEntry& e) { return e.decision; });
}

TrailState Trail::state() const {
    return consistent_prefix_length() == entries_.size() ? TrailState::consistent
                                                         : TrailState::inconsistent;
}

std::size_t Trail::consistent_prefix_length() const {
    LiteralSet seen;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (seen.contains(complement(entries_[i].literal))) {
            return i;
        }
        seen.insert(entries_[i].literal);
    }
    return entries_.size();
}

Trail Trail::prefix(std::size_t n) const {
    Trail out;
    out.entries_.assign(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
    return out;
}

std::size_t Trail::level_at(std::size_t position) const {
    std::size_t level = 0;
    for (std::size_t i = 0; i <= position && i < entries_.size(); ++i) {
        level += entries_[i].decision ? 1 : 0;
    }
    return level;
}

std::size_t Trail::decision_level(const Literal& l) const {
    auto p = position(l);
    if (!p) {
        throw PreconditionError("literal " + to_string(l) + " does not occur in the trail");
    }
    return level_at(*p);
}

LiteralSet Trail::literal_set() const {
    LiteralSet out;
    for (const auto& e : entries_) {
        out.insert(e.literal);
    }
    return out;
}

std::string to_string(const Trail& m) {
    std::string out;
    for (const auto& e : m) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(e.literal);
        if (e.decision) {
            out += '^';
        }
    }
    return out;
}

AtomSet SmaspTheory::atoms() const {
    auto out = atoms_of(f);
    auto p = atoms_of(pi);
    out.insert(p.begin(), p.end());
    return out;
}

PcidTheory::PcidTheory(ClauseSet f, Program pi) : f_(std::move(f)), pi_(std::move(pi)) {
    if (!is_weakly_normal(pi_)) {
        throw PreconditionError("the program of a PC(ID) theory must be weakly normal (no constraints)");
    }
}

AtomSet PcidTheory::atoms() const { return as_smasp().atoms(); }

std::string to_string(const LiteralSet& m) {
    std::string out = "{";
    for (const auto& l : m) {
        if (out.size() > 1) {
            out += ' ';
        }
        out += to_string(l);
    }
    return out + "}";
}

std::string to_string(const AtomSet& x) {
    std::string out = "{";
    for (const auto& a : x) {
        if (out.size() > 1) {
            out += ' ';
        }
        out += a.name();
    }
    return out + "}";
}

} // namespace smasp
