// Transition systems for SM(ASP) search: the DPLL rules, the Unfounded rule and
// the learning extension (UnitPropagateLearn, Backjump, Learn). A strategy is a
// priority order over rule groups; `Engine::run` walks the graph from the empty
// state by always taking the highest-priority applicable edge.
#pragma once

#include "smasp/core.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smasp {

enum class RuleKind {
    unit_propagate,
    decide,
    fail,
    backtrack,
    unfounded,
    unit_propagate_learn,
    backjump,
    learn,
};

std::string_view rule_name(RuleKind r);
std::optional<RuleKind> parse_rule_name(std::string_view name);

enum class Mode { dpll, smodels, cmodels, clasp, minisatid };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view name); // throws PreconditionError on unknown names

using PriorityGroups = std::vector<std::vector<RuleKind>>;

PriorityGroups strategy_priority(Mode m);

struct Strategy {
    Mode mode = Mode::clasp;
    PriorityGroups priority;
    bool learning = true;

    static Strategy of(Mode m);
};

struct AugmentedState {
    Trail trail;
    std::vector<Clause> learned; // Gamma, in insertion order
    bool failed = false;

    static AugmentedState fail_state() { return AugmentedState{{}, {}, true}; }
    friend bool operator==(const AugmentedState&, const AugmentedState&) = default;
};

// 64-bit FNV-1a of `text` as 16 hex digits.
std::string text_digest(std::string_view text);
// Order-sensitive hash of the annotated trail and the learned clauses.
std::string state_digest(const AugmentedState& s);

struct Transition {
    RuleKind rule = RuleKind::decide;
    std::optional<Literal> literal;
    std::optional<Clause> clause;  // propagating clause, reason or learned clause
    AtomSet witness;               // unfounded set for Unfounded
    std::size_t prefix_length = 0; // length of P for Backjump

    friend bool operator==(const Transition&, const Transition&) = default;
};

std::string to_string(const Transition& t);

struct UnitCandidate {
    Literal literal;
    Clause clause;
    friend bool operator==(const UnitCandidate&, const UnitCandidate&) = default;
};

struct UnfoundedCandidate {
    Literal literal;
    AtomSet witness;
    friend bool operator==(const UnfoundedCandidate&, const UnfoundedCandidate&) = default;
};

struct ConflictAnalysis {
    Clause learned;
    Literal asserting;
    std::size_t prefix_length;
    friend bool operator==(const ConflictAnalysis&, const ConflictAnalysis&) = default;
};

// Reason for -a after Unfounded with witness `u`: -a together with, for every
// external body of `u`, the first literal of s(B) falsified by `m`.
Clause unfounded_reason(const Atom& a, const AtomSet& u, const Trail& m, const Program& pio);

struct TraceStep {
    std::size_t index = 0;
    Transition transition;
    std::string digest; // state digest after the step

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class Verdict { model, unsatisfiable, limit_exceeded };

std::string_view verdict_name(Verdict v);

struct Outcome {
    Verdict verdict = Verdict::limit_exceeded;
    LiteralSet model;
    std::vector<TraceStep> trace;
    std::map<RuleKind, std::size_t> stats;
};

struct RunLimits {
    std::size_t max_steps = 1'000'000;
    std::size_t max_learned = 100'000;
    // Verify model verdicts against the SM(ASP) model definition when the
    // theory has at most this many atoms; 0 disables the check.
    std::size_t self_check_atoms = 12;
};

class Engine {
public:
    Engine(SmaspTheory theory, Strategy strategy);
    ~Engine();
    Engine(Engine&&) noexcept;
    Engine& operator=(Engine&&) noexcept;
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const SmaspTheory& theory() const;
    const Strategy& strategy() const;
    const Program& open_program() const; // Pi^o
    const ClauseSet& program_clauses() const; // Pi^cl
    const AtomSet& atoms() const;

    std::vector<UnitCandidate> applicable_unit_propagate(const AugmentedState& s) const;
    std::vector<Literal> applicable_decide(const AugmentedState& s) const;
    bool applicable_fail(const AugmentedState& s) const;
    std::optional<Literal> applicable_backtrack(const AugmentedState& s) const;
    std::vector<UnfoundedCandidate> applicable_unfounded(const AugmentedState& s) const;

    // Reason of the first literal past the consistent prefix.
    Clause conflicting_clause(const AugmentedState& s) const;
    ConflictAnalysis analyze_conflict(const AugmentedState& s, const Clause& conflicting) const;

    bool is_singular_unfounded(const AugmentedState& s) const;

    // Highest-priority basic transition with the canonical payload, or nothing
    // when the state is (semi-)terminal.
    std::optional<Transition> select(const AugmentedState& s) const;

    // Applies a transition after checking it is an edge of the graph. Payloads
    // may omit reason clauses and witnesses; they are filled in canonically.
    AugmentedState step(const AugmentedState& s, const Transition& t) const;
    // Completes the payload of `t` the way `step` would, or throws.
    Transition complete(const AugmentedState& s, const Transition& t) const;

    Outcome run(const RunLimits& limits = {}) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace smasp
