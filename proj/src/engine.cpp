#include "smasp/engine.hpp"

#include "smasp/semantics.hpp"
#include "smasp/translate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>

namespace smasp {

namespace {

constexpr std::array<std::pair<RuleKind, std::string_view>, 8> kRuleNames{{
    {RuleKind::unit_propagate, "UnitPropagate"},
    {RuleKind::decide, "Decide"},
    {RuleKind::fail, "Fail"},
    {RuleKind::backtrack, "Backtrack"},
    {RuleKind::unfounded, "Unfounded"},
    {RuleKind::unit_propagate_learn, "UnitPropagateLearn"},
    {RuleKind::backjump, "Backjump"},
    {RuleKind::learn, "Learn"},
}};

constexpr std::array<std::pair<Mode, std::string_view>, 5> kModeNames{{
    {Mode::dpll, "dpll"},
    {Mode::smodels, "smodels"},
    {Mode::cmodels, "cmodels"},
    {Mode::clasp, "clasp"},
    {Mode::minisatid, "minisatid"},
}};

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string_view rule_name(RuleKind r) {
    for (const auto& [kind, name] : kRuleNames) {
        if (kind == r) {
            return name;
        }
    }
    return "?";
}

std::optional<RuleKind> parse_rule_name(std::string_view name) {
    for (const auto& [kind, n] : kRuleNames) {
        if (n == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string_view mode_name(Mode m) {
    for (const auto& [mode, name] : kModeNames) {
        if (mode == m) {
            return name;
        }
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    for (const auto& [mode, n] : kModeNames) {
        if (n == name) {
            return mode;
        }
    }
    throw PreconditionError("unknown strategy mode '" + std::string(name) + "'");
}

PriorityGroups strategy_priority(Mode m) {
    using enum RuleKind;
    switch (m) {
    case Mode::dpll:
        // Unfounded ranks last so that programs are still decided soundly; on
        // a pure clause set it never applies.
        return {{fail, backtrack}, {unit_propagate}, {decide}, {unfounded}};
    case Mode::smodels:
        return {{fail, backtrack}, {unit_propagate}, {unfounded}, {decide}};
    case Mode::cmodels:
        return {{backjump, fail}, {unit_propagate_learn}, {decide}, {unfounded}};
    case Mode::clasp:
    case Mode::minisatid:
        return {{backjump, fail}, {unit_propagate_learn}, {unfounded}, {decide}};
    }
    throw PreconditionError("unknown strategy mode");
}

Strategy Strategy::of(Mode m) {
    return Strategy{m, strategy_priority(m), m != Mode::dpll && m != Mode::smodels};
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::model:
        return "MODEL";
    case Verdict::unsatisfiable:
        return "UNSATISFIABLE";
    case Verdict::limit_exceeded:
        return "LIMIT_EXCEEDED";
    }
    return "?";
}

std::string text_digest(std::string_view text) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

std::string state_digest(const AugmentedState& s) {
    std::string text;
    if (s.failed) {
        text = "FAIL";
    } else {
        for (const auto& e : s.trail) {
            text += to_string(e.literal);
            text += e.decision ? "^ " : " ";
        }
        text += '|';
        for (const auto& c : s.learned) {
            text += to_string(c);
            text += ';';
        }
    }
    return text_digest(text);
}

std::string to_string(const Transition& t) {
    std::string out(rule_name(t.rule));
    if (t.literal) {
        out += ' ' + to_string(*t.literal);
    }
    if (t.clause) {
        out += " [" + to_string(*t.clause) + "]";
    }
    if (!t.witness.empty()) {
        out += " U=" + to_string(t.witness);
    }
    if (t.rule == RuleKind::backjump) {
        out += " P=" + std::to_string(t.prefix_length);
    }
    return out;
}

Clause unfounded_reason(const Atom& a, const AtomSet& u, const Trail& m, const Program& pio) {
    if (!u.contains(a)) {
        throw PreconditionError("atom " + a.name() + " is not in the unfounded set");
    }
    auto assigned = m.literal_set();
    std::vector<Literal> lits{neg(a)};
    for (const auto& x : u) {
        for (const auto& b : bodies(pio, x)) {
            bool external = std::none_of(b.pos.begin(), b.pos.end(), [&](const Atom& p) { return u.contains(p); });
            if (!external) {
                continue;
            }
            auto s = body_literals(b);
            auto f = std::find_if(s.begin(), s.end(), [&](const Literal& l) { return assigned.contains(complement(l)); });
            if (f == s.end()) {
                throw PreconditionError("set " + to_string(u) + " is not unfounded on the trail");
            }
            lits.push_back(*f);
        }
    }
    return Clause(std::move(lits));
}

// ---------------------------------------------------------------------------

struct Engine::Impl {
    struct IndexedRule {
        int head;
        std::vector<int> pos, neg, negneg;
    };

    // Assignment view of a trail: position of every literal code, or -1.
    struct View {
        std::vector<int> where;
        bool consistent = true;
        bool has_decision = false;

        bool holds(int code) const { return where[static_cast<std::size_t>(code)] >= 0; }
    };

    SmaspTheory theory;
    Strategy strategy;
    Program pio;
    ClauseSet picl;
    AtomSet atoms;
    std::vector<Atom> vars;
    std::map<Atom, int> index;
    std::vector<const Clause*> scan;       // F then Pi^cl, canonical order
    std::vector<std::vector<int>> scan_codes;
    std::vector<IndexedRule> rules;        // Pi^o
    std::size_t oracle_cap = kDefaultEnumerationCap;
    mutable std::unique_ptr<EntailmentOracle> oracle;

    Impl(SmaspTheory t, Strategy s) : theory(std::move(t)), strategy(std::move(s)) {
        pio = smasp::open_program(theory);
        picl = clausal(theory.pi);
        atoms = theory.atoms();
        vars.assign(atoms.begin(), atoms.end());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            index.emplace(vars[i], static_cast<int>(i));
        }
        for (const auto* set : {&theory.f, &picl}) {
            for (const auto& c : *set) {
                scan.push_back(&c);
                scan_codes.push_back(codes(c));
            }
        }
        for (const auto& r : pio.rules) {
            if (r.is_constraint()) continue; // supports nothing
            IndexedRule ir{var(*r.head()), {}, {}, {}};
            for (const auto& a : r.body().pos) ir.pos.push_back(var(a));
            for (const auto& a : r.body().neg) ir.neg.push_back(var(a));
            for (const auto& a : r.body().negneg) ir.negneg.push_back(var(a));
            rules.push_back(std::move(ir));
        }
    }

    int var(const Atom& a) const {
        auto it = index.find(a);
        if (it == index.end()) {
            throw PreconditionError("atom " + a.name() + " does not occur in the theory");
        }
        return it->second;
    }
    int code(const Literal& l) const { return var(l.atom) * 2 + (l.positive ? 0 : 1); }
    static int flip(int c) { return c ^ 1; }
    std::vector<int> codes(const Clause& c) const {
        std::vector<int> out;
        for (const auto& l : c) out.push_back(code(l));
        return out;
    }

    View view(const AugmentedState& s) const {
        if (s.failed) {
            throw PreconditionError("no transition leaves the Fail state");
        }
        View v;
        v.where.assign(vars.size() * 2, -1);
        for (std::size_t i = 0; i < s.trail.size(); ++i) {
            const auto& e = s.trail[i];
            int c = code(e.literal);
            v.where[static_cast<std::size_t>(c)] = static_cast<int>(i);
            if (v.holds(flip(c))) v.consistent = false;
            if (e.decision) v.has_decision = true;
        }
        return v;
    }

    // First literal of `c` that is not on the trail while every other literal
    // is falsified by it, if any.
    static std::optional<std::size_t> unit_literal(const std::vector<int>& c, const View& v) {
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (v.holds(flip(c[i]))) continue;
            if (found || v.holds(c[i])) return std::nullopt;
            found = i;
        }
        return found;
    }

    std::vector<UnitCandidate> unit_candidates(const AugmentedState& s, const View& v, bool first_only) const {
        std::vector<UnitCandidate> out;
        auto consider = [&](const Clause& c, const std::vector<int>& cc) {
            // With an inconsistent trail several literals of one clause can qualify.
            for (std::size_t i = 0; i < cc.size(); ++i) {
                if (v.holds(cc[i])) continue;
                bool rest = true;
                for (std::size_t j = 0; j < cc.size() && rest; ++j) {
                    rest = j == i || v.holds(flip(cc[j]));
                }
                if (rest) {
                    out.push_back(UnitCandidate{c.literals()[i], c});
                    if (first_only) return true;
                }
            }
            return false;
        };
        for (std::size_t k = 0; k < scan.size(); ++k) {
            if (consider(*scan[k], scan_codes[k])) return out;
        }
        if (strategy.learning) {
            for (const auto& c : s.learned) {
                if (consider(c, codes(c))) return out;
            }
        }
        return out;
    }

    std::vector<Literal> decide_candidates(const View& v) const {
        std::vector<Literal> out;
        if (!v.consistent) return out;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            int c = static_cast<int>(i) * 2;
            if (!v.holds(c) && !v.holds(c + 1)) {
                out.push_back(pos(vars[i]));
                out.push_back(neg(vars[i]));
            }
        }
        return out;
    }

    bool falsified(const IndexedRule& r, const View& v) const {
        for (int p : r.pos) if (v.holds(p * 2 + 1)) return true;
        for (int n : r.neg) if (v.holds(n * 2)) return true;
        for (int n : r.negneg) if (v.holds(n * 2 + 1)) return true;
        return false;
    }

    // Complement of the least set of founded atoms; requires a consistent view.
    AtomSet gus(const View& v) const {
        std::vector<char> founded(vars.size(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rules) {
                if (founded[static_cast<std::size_t>(r.head)]) continue;
                if (falsified(r, v)) continue;
                if (std::all_of(r.pos.begin(), r.pos.end(), [&](int p) { return founded[static_cast<std::size_t>(p)] != 0; })) {
                    founded[static_cast<std::size_t>(r.head)] = 1;
                    changed = true;
                }
            }
        }
        AtomSet out;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!founded[i]) out.insert(vars[i]);
        }
        return out;
    }

    std::vector<UnfoundedCandidate> unfounded_candidates(const View& v, bool first_only) const {
        std::vector<UnfoundedCandidate> out;
        if (!v.consistent) return out;
        auto u = gus(v);
        for (const auto& a : u) {
            if (v.holds(var(a) * 2 + 1)) continue;
            out.push_back(UnfoundedCandidate{neg(a), u});
            if (first_only) break;
        }
        return out;
    }

    std::optional<std::size_t> last_decision(const Trail& m) const {
        for (std::size_t i = m.size(); i-- > 0;) {
            if (m[i].decision) return i;
        }
        return std::nullopt;
    }

    std::optional<Literal> backtrack_literal(const AugmentedState& s, const View& v) const {
        if (strategy.learning || v.consistent) return std::nullopt;
        auto d = last_decision(s.trail);
        if (!d) return std::nullopt;
        return complement(s.trail[*d].literal);
    }

    // The flipped literal together with the negations of the older decisions.
    Clause backtrack_reason(const Trail& m) const {
        auto d = *last_decision(m);
        std::vector<Literal> lits{complement(m[d].literal)};
        for (std::size_t i = 0; i < d; ++i) {
            if (m[i].decision) lits.push_back(complement(m[i].literal));
        }
        return Clause(std::move(lits));
    }

    bool graph_has(RuleKind r) const {
        using enum RuleKind;
        switch (r) {
        case decide:
        case fail:
        case unfounded:
            return true;
        case unit_propagate:
        case backtrack:
            return !strategy.learning;
        case unit_propagate_learn:
        case backjump:
        case learn:
            return strategy.learning;
        }
        return false;
    }

    bool entailed(const Clause& c) const {
        if (!oracle) {
            if (atoms.size() > oracle_cap) {
                throw LimitExceeded("cannot verify entailment of " + to_string(c) + ": theory too large");
            }
            oracle = std::make_unique<EntailmentOracle>(theory, oracle_cap);
        }
        return oracle->entails(c);
    }
};

Engine::Engine(SmaspTheory theory, Strategy strategy)
    : impl_(std::make_unique<Impl>(std::move(theory), std::move(strategy))) {}
Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

const SmaspTheory& Engine::theory() const { return impl_->theory; }
const Strategy& Engine::strategy() const { return impl_->strategy; }
const Program& Engine::open_program() const { return impl_->pio; }
const ClauseSet& Engine::program_clauses() const { return impl_->picl; }
const AtomSet& Engine::atoms() const { return impl_->atoms; }

std::vector<UnitCandidate> Engine::applicable_unit_propagate(const AugmentedState& s) const {
    return impl_->unit_candidates(s, impl_->view(s), false);
}

std::vector<Literal> Engine::applicable_decide(const AugmentedState& s) const {
    return impl_->decide_candidates(impl_->view(s));
}

bool Engine::applicable_fail(const AugmentedState& s) const {
    auto v = impl_->view(s);
    return !v.consistent && !v.has_decision;
}

std::optional<Literal> Engine::applicable_backtrack(const AugmentedState& s) const {
    return impl_->backtrack_literal(s, impl_->view(s));
}

std::vector<UnfoundedCandidate> Engine::applicable_unfounded(const AugmentedState& s) const {
    return impl_->unfounded_candidates(impl_->view(s), false);
}

Clause Engine::conflicting_clause(const AugmentedState& s) const {
    auto k = s.trail.consistent_prefix_length();
    if (k == s.trail.size()) {
        throw PreconditionError("trail is consistent: no conflict");
    }
    const auto& e = s.trail[k];
    if (!e.reason) {
        throw PreconditionError("literal " + to_string(e.literal) + " closing the conflict has no reason");
    }
    return *e.reason;
}

ConflictAnalysis Engine::analyze_conflict(const AugmentedState& s, const Clause& conflicting) const {
    const Trail& m = s.trail;
    if (m.is_consistent() || !m.has_decision()) {
        throw PreconditionError("conflict analysis needs an inconsistent trail with a decision literal");
    }
    const std::size_t k = m.consistent_prefix_length();
    std::map<Literal, std::size_t> where; // positions within consistent(M)
    std::vector<std::size_t> level(k);
    std::size_t current = 0;
    for (std::size_t i = 0; i < k; ++i) {
        current += m[i].decision ? 1 : 0;
        level[i] = current;
        where.emplace(m[i].literal, i);
    }
    auto position_of_dual = [&](const Literal& l) {
        auto it = where.find(complement(l));
        if (it == where.end()) {
            throw PreconditionError("clause is not falsified by the consistent prefix: " + to_string(l));
        }
        return it->second;
    };

    LiteralSet clause(conflicting.begin(), conflicting.end());
    std::size_t dec = 0;
    for (const auto& l : clause) {
        dec = std::max(dec, level[position_of_dual(l)]);
    }
    for (;;) {
        std::size_t count = 0;
        std::optional<std::size_t> latest; // most recent resolvable position at level dec
        for (const auto& l : clause) {
            auto p = position_of_dual(l);
            if (level[p] != dec) continue;
            ++count;
            if (!m[p].decision && (!latest || p > *latest)) latest = p;
        }
        if (count <= 1) break;
        const auto& entry = m[*latest];
        if (!entry.reason || !entry.reason->contains(entry.literal)) {
            throw PreconditionError("literal " + to_string(entry.literal) + " lacks a usable reason");
        }
        clause.erase(complement(entry.literal));
        for (const auto& l : *entry.reason) {
            if (l == entry.literal) continue;
            if (position_of_dual(l) >= *latest) {
                throw PreconditionError("reason of " + to_string(entry.literal) + " is not falsified by older literals");
            }
            clause.insert(l);
        }
    }

    std::optional<Literal> asserting;
    for (const auto& l : clause) {
        if (level[position_of_dual(l)] == dec) asserting = l;
    }
    std::size_t prefix = 0;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].decision) continue;
        ++seen;
        if (dec == 0 || seen == dec) {
            prefix = i;
            break;
        }
    }
    return ConflictAnalysis{Clause(std::vector<Literal>(clause.begin(), clause.end())), *asserting, prefix};
}

bool Engine::is_singular_unfounded(const AugmentedState& s) const {
    auto v = impl_->view(s);
    if (impl_->unfounded_candidates(v, true).empty()) {
        return false;
    }
    if (!impl_->unit_candidates(s, v, true).empty()) {
        return true;
    }
    return !v.consistent; // Fail, Backtrack or Backjump would apply
}

std::optional<Transition> Engine::select(const AugmentedState& s) const {
    if (s.failed) {
        return std::nullopt;
    }
    const auto& im = *impl_;
    auto v = im.view(s);
    using enum RuleKind;
    for (const auto& group : im.strategy.priority) {
        for (auto rule : group) {
            switch (rule) {
            case fail:
                if (!v.consistent && !v.has_decision) return Transition{fail};
                break;
            case backtrack:
                if (auto l = im.backtrack_literal(s, v)) {
                    return Transition{backtrack, *l, im.backtrack_reason(s.trail)};
                }
                break;
            case backjump:
                if (im.strategy.learning && !v.consistent && v.has_decision) {
                    auto a = analyze_conflict(s, conflicting_clause(s));
                    return Transition{backjump, a.asserting, a.learned, {}, a.prefix_length};
                }
                break;
            case unit_propagate:
            case unit_propagate_learn:
                if (auto c = im.unit_candidates(s, v, true); !c.empty()) {
                    return Transition{rule, c.front().literal, c.front().clause};
                }
                break;
            case decide:
                if (auto d = im.decide_candidates(v); !d.empty()) {
                    return Transition{decide, d.front()};
                }
                break;
            case unfounded:
                if (auto u = im.unfounded_candidates(v, true); !u.empty()) {
                    const auto& c = u.front();
                    return Transition{unfounded, c.literal,
                                      unfounded_reason(c.literal.atom, c.witness, s.trail, im.pio), c.witness};
                }
                break;
            case learn:
                break;
            }
        }
    }
    return std::nullopt;
}

Transition Engine::complete(const AugmentedState& s, const Transition& t) const {
    const auto& im = *impl_;
    auto v = im.view(s);
    auto reject = [&](const std::string& why) -> Transition {
        throw PreconditionError(std::string(rule_name(t.rule)) + " is not applicable: " + why);
    };
    if (!im.graph_has(t.rule)) {
        return reject("rule does not belong to the " + std::string(mode_name(im.strategy.mode)) + " graph");
    }
    Transition out = t;
    using enum RuleKind;
    switch (t.rule) {
    case unit_propagate:
    case unit_propagate_learn: {
        if (!t.literal || !t.clause) return reject("literal and clause required");
        bool known = im.theory.f.contains(*t.clause) || im.picl.contains(*t.clause) ||
                     (im.strategy.learning &&
                      std::find(s.learned.begin(), s.learned.end(), *t.clause) != s.learned.end());
        if (!known) return reject("clause " + to_string(*t.clause) + " is not in F, Pi^cl or Gamma");
        if (!t.clause->contains(*t.literal)) return reject("literal not in clause");
        auto cc = im.codes(*t.clause);
        int lc = im.code(*t.literal);
        if (v.holds(lc)) return reject("literal already on the trail");
        for (int c : cc) {
            if (c != lc && !v.holds(Impl::flip(c))) return reject("clause is not unit on the trail");
        }
        break;
    }
    case decide: {
        if (!t.literal) return reject("literal required");
        if (!v.consistent) return reject("trail is inconsistent");
        int c = im.code(*t.literal);
        if (v.holds(c) || v.holds(Impl::flip(c))) return reject("literal is assigned");
        out.clause.reset();
        break;
    }
    case fail:
        if (v.consistent || v.has_decision) return reject("trail must be inconsistent and decision-free");
        break;
    case backtrack: {
        auto l = im.backtrack_literal(s, v);
        if (!l) return reject("trail must be inconsistent with a decision literal");
        if (t.literal && *t.literal != *l) return reject("must flip the last decision literal");
        out.literal = *l;
        auto reason = im.backtrack_reason(s.trail);
        if (t.clause && *t.clause != reason) return reject("unexpected reason clause");
        out.clause = reason;
        break;
    }
    case unfounded: {
        if (!t.literal || t.literal->positive) return reject("a negative literal is required");
        if (!v.consistent) return reject("trail is inconsistent");
        if (v.holds(im.code(*t.literal))) return reject("literal already on the trail");
        if (out.witness.empty()) out.witness = im.gus(v);
        if (!out.witness.contains(t.literal->atom)) return reject("atom is not in the witness set");
        for (const auto& a : out.witness) im.var(a);
        if (!is_unfounded(out.witness, s.trail.literal_set(), im.pio)) return reject("witness is not unfounded");
        auto reason = unfounded_reason(t.literal->atom, out.witness, s.trail, im.pio);
        if (t.clause && *t.clause != reason) return reject("unexpected reason clause");
        out.clause = reason;
        break;
    }
    case backjump: {
        if (v.consistent || !v.has_decision) return reject("trail must be inconsistent with a decision literal");
        if (!t.literal || !t.clause) return reject("literal and clause required");
        if (t.prefix_length >= s.trail.size() || !s.trail[t.prefix_length].decision) {
            return reject("prefix must end right before a decision literal");
        }
        auto p = s.trail.prefix(t.prefix_length).literal_set();
        if (!t.clause->contains(*t.literal) || p.contains(*t.literal)) return reject("bad asserting literal");
        for (const auto& l : *t.clause) {
            if (l != *t.literal && !p.contains(complement(l))) return reject("clause is not falsified by P");
        }
        auto analysed = analyze_conflict(s, conflicting_clause(s));
        if (analysed.learned != *t.clause && !im.entailed(*t.clause)) return reject("clause is not entailed");
        break;
    }
    case learn: {
        if (!t.clause) return reject("clause required");
        if (std::find(s.learned.begin(), s.learned.end(), *t.clause) != s.learned.end()) {
            return reject("clause already learned");
        }
        for (const auto& l : *t.clause) im.var(l.atom);
        bool known = im.theory.f.contains(*t.clause) || im.picl.contains(*t.clause) ||
                     std::any_of(s.trail.begin(), s.trail.end(), [&](const TrailEntry& e) { return e.reason == t.clause; });
        if (!known && !im.entailed(*t.clause)) return reject("clause is not entailed");
        out.literal.reset();
        break;
    }
    }
    return out;
}

namespace {

AugmentedState apply(const AugmentedState& s, const Transition& t, std::optional<std::size_t> last_decision) {
    using enum RuleKind;
    AugmentedState next = s;
    switch (t.rule) {
    case unit_propagate:
    case unit_propagate_learn:
    case unfounded:
        next.trail.push_implied(*t.literal, t.clause);
        break;
    case decide:
        next.trail.push_decision(*t.literal);
        break;
    case fail:
        return AugmentedState::fail_state();
    case backtrack:
        next.trail = s.trail.prefix(*last_decision);
        next.trail.push_implied(*t.literal, t.clause);
        break;
    case backjump:
        next.trail = s.trail.prefix(t.prefix_length);
        next.trail.push_implied(*t.literal, t.clause);
        break;
    case learn:
        next.learned.push_back(*t.clause);
        break;
    }
    return next;
}

} // namespace

AugmentedState Engine::step(const AugmentedState& s, const Transition& t) const {
    auto full = complete(s, t);
    return apply(s, full, impl_->last_decision(s.trail));
}

Outcome Engine::run(const RunLimits& limits) const {
    const auto& im = *impl_;
    Outcome out;
    AugmentedState state;
    std::optional<Clause> pending_learn;
    auto record = [&](const Transition& t) {
        state = apply(state, t, im.last_decision(state.trail));
        ++out.stats[t.rule];
        out.trace.push_back(TraceStep{out.trace.size() + 1, t, state_digest(state)});
    };
    for (;;) {
        if (state.failed) {
            out.verdict = Verdict::unsatisfiable;
            break;
        }
        auto t = select(state);
        if (!t) {
            out.verdict = Verdict::model;
            out.model = state.trail.literal_set();
            break;
        }
        if (out.trace.size() >= limits.max_steps) {
            out.verdict = Verdict::limit_exceeded;
            break;
        }
        if (pending_learn) {
            auto clause = std::move(*pending_learn);
            pending_learn.reset();
            if (std::find(state.learned.begin(), state.learned.end(), clause) == state.learned.end()) {
                if (state.learned.size() >= limits.max_learned) {
                    out.verdict = Verdict::limit_exceeded;
                    break;
                }
                record(Transition{RuleKind::learn, std::nullopt, std::move(clause)});
                continue;
            }
        }
        record(*t);
        if (t->rule == RuleKind::backjump) {
            pending_learn = t->clause;
        }
    }
    if (out.verdict == Verdict::model && limits.self_check_atoms > 0 && im.atoms.size() <= limits.self_check_atoms &&
        !is_smasp_model(im.theory, out.model)) {
        throw std::logic_error("engine returned " + to_string(out.model) + ", which is not a model of the theory");
    }
    return out;
}

} // namespace smasp
