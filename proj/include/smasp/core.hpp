// Value types shared by every part of the solver framework: atoms, literals,
// clauses, rule bodies, programs, trails and the two theory kinds.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace smasp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside of its domain (e.g. an inconsistent
// literal set passed to an unfoundedness check).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An exhaustive oracle or translation refused to exceed its configured budget.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

enum class AtomOrigin : std::uint8_t {
    user = 0,
    fresh_body = 1, // f_B atoms introduced by ED-completion
};

class Atom {
public:
    explicit Atom(std::string name, AtomOrigin origin = AtomOrigin::user);

    const std::string& name() const noexcept { return name_; }
    AtomOrigin origin() const noexcept { return origin_; }
    bool fresh() const noexcept { return origin_ == AtomOrigin::fresh_body; }

    // (origin, name) lexicographic: user atoms precede fresh ones.
    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;

private:
    AtomOrigin origin_;
    std::string name_;
};

struct Literal {
    Atom atom;
    bool positive = true;

    // Atom order first, positive polarity before negative.
    friend std::strong_ordering operator<=>(const Literal& x, const Literal& y) {
        if (auto c = x.atom <=> y.atom; c != 0) {
            return c;
        }
        return y.positive <=> x.positive;
    }
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(Atom a) { return Literal{std::move(a), true}; }
inline Literal neg(Atom a) { return Literal{std::move(a), false}; }
inline Literal complement(const Literal& l) { return Literal{l.atom, !l.positive}; }

std::string to_string(const Literal& l); // "a" or "-a"

using AtomSet = std::set<Atom>;
using LiteralSet = std::set<Literal>;

// A non-empty disjunction, stored as a sorted duplicate-free literal list.
class Clause {
public:
    explicit Clause(std::vector<Literal> literals);
    Clause(std::initializer_list<Literal> literals);

    std::span<const Literal> literals() const noexcept { return lits_; }
    std::size_t size() const noexcept { return lits_.size(); }
    auto begin() const noexcept { return lits_.begin(); }
    auto end() const noexcept { return lits_.end(); }
    bool contains(const Literal& l) const;

    friend auto operator<=>(const Clause&, const Clause&) = default;
    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
};

using ClauseSet = std::set<Clause>;

std::string to_string(const Clause& c); // "a | -b"
AtomSet atoms_of(const Clause& c);
AtomSet atoms_of(const ClauseSet& f);
bool satisfies(const LiteralSet& m, const Clause& c);
bool satisfies(const LiteralSet& m, const ClauseSet& f);

// Rule body split into its three parts: a, not a, not not a.
struct Body {
    AtomSet pos;
    AtomSet neg;
    AtomSet negneg;

    std::size_t size() const noexcept { return pos.size() + neg.size() + negneg.size(); }
    bool empty() const noexcept { return size() == 0; }

    friend auto operator<=>(const Body&, const Body&) = default;
    friend bool operator==(const Body&, const Body&) = default;
};

// s(B): a and not not a contribute a, not a contributes -a.
LiteralSet body_literals(const Body& b);
AtomSet atoms_of(const Body& b);

// head absent = constraint (head is bottom).
class Rule {
public:
    Rule(std::optional<Atom> head, Body body);

    static Rule fact(Atom head) { return Rule(std::move(head), Body{}); }

    const std::optional<Atom>& head() const noexcept { return head_; }
    const Body& body() const noexcept { return body_; }

    bool is_constraint() const noexcept { return !head_.has_value(); }
    bool is_weakly_normal() const noexcept { return head_.has_value(); }
    bool is_normal() const noexcept { return head_.has_value() && body_.negneg.empty(); }
    bool is_fact() const noexcept { return head_.has_value() && body_.empty(); }

    friend auto operator<=>(const Rule&, const Rule&) = default;
    friend bool operator==(const Rule&, const Rule&) = default;

private:
    std::optional<Atom> head_;
    Body body_;
};

LiteralSet body_literals(const Rule& r);

struct Program {
    std::vector<Rule> rules;

    friend bool operator==(const Program&, const Program&) = default;
};

AtomSet heads(const Program& pi);
AtomSet atoms_of(const Program& pi);
std::set<Body> bodies(const Program& pi, const Atom& a);
bool is_fact(const Program& pi, const Atom& a);
bool is_weakly_normal(const Program& pi);
bool is_normal(const Program& pi);
Program concat(Program a, const Program& b);

struct TrailEntry {
    Literal literal;
    bool decision = false;
    std::optional<Clause> reason; // absent for decision literals

    friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

enum class TrailState { consistent, inconsistent };

// The record M: an ordered, annotated list of literals. A literal occurs at
// most once; an atom may occur in both polarities.
class Trail {
public:
    Trail() = default;
    Trail(std::initializer_list<TrailEntry> entries);

    void push(TrailEntry entry);
    void push_decision(Literal l) { push(TrailEntry{std::move(l), true, std::nullopt}); }
    void push_implied(Literal l, std::optional<Clause> reason = std::nullopt) {
        push(TrailEntry{std::move(l), false, std::move(reason)});
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const TrailEntry& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const TrailEntry> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool contains(const Literal& l) const;
    std::optional<std::size_t> position(const Literal& l) const;
    bool assigns(const Atom& a) const;
    bool has_decision() const;

    TrailState state() const;
    bool is_consistent() const { return state() == TrailState::consistent; }
    std::size_t consistent_prefix_length() const;
    Trail consistent_prefix() const { return prefix(consistent_prefix_length()); }
    Trail prefix(std::size_t n) const;

    // Number of decision literals at or before the literal's position.
    std::size_t decision_level(const Literal& l) const;
    std::size_t level_at(std::size_t position) const;

    LiteralSet literal_set() const;

    friend bool operator==(const Trail&, const Trail&) = default;

private:
    std::vector<TrailEntry> entries_;
};

inline TrailState trail_state(const Trail& m) { return m.state(); }
inline Trail consistent_prefix(const Trail& m) { return m.consistent_prefix(); }

std::string to_string(const Trail& m); // decisions carry a trailing '^'

// [F, Pi]
struct SmaspTheory {
    ClauseSet f;
    Program pi;

    AtomSet atoms() const;
    friend bool operator==(const SmaspTheory&, const SmaspTheory&) = default;
};

// (F, Pi) with Pi weakly normal.
class PcidTheory {
public:
    PcidTheory(ClauseSet f, Program pi);

    const ClauseSet& f() const noexcept { return f_; }
    const Program& pi() const noexcept { return pi_; }
    AtomSet atoms() const;
    SmaspTheory as_smasp() const { return SmaspTheory{f_, pi_}; }

    friend bool operator==(const PcidTheory&, const PcidTheory&) = default;

private:
    ClauseSet f_;
    Program pi_;
};

std::string to_string(const LiteralSet& m); // "{a -b}"
std::string to_string(const AtomSet& x);    // "{a b}"

} // namespace smasp
