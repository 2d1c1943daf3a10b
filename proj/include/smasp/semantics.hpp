// Direct, exhaustive implementations of the semantic notions: reducts,
// answer sets, unfounded sets, the W operator and model checks. These are the
// trusted reference the search engine is validated against, so they favour
// definitional clarity over speed.
#pragma once

#include "smasp/core.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace smasp {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

LiteralSet duals(const LiteralSet& m);
AtomSet positive_atoms(const LiteralSet& m);                     // M+
AtomSet atoms_of(const LiteralSet& m);                           // |M|
LiteralSet restrict_to(const LiteralSet& m, const AtomSet& a);   // M^A
bool is_consistent(const LiteralSet& m);
bool is_complete_over(const LiteralSet& m, const AtomSet& universe);
// The complete interpretation over `universe` that makes exactly `x` true.
LiteralSet interpretation(const AtomSet& x, const AtomSet& universe);

struct ThreeValuedModel {
    LiteralSet literals;
    AtomSet universe;

    bool is_total() const { return is_complete_over(literals, universe); }
    friend bool operator==(const ThreeValuedModel&, const ThreeValuedModel&) = default;
};

Program reduct(const Program& pi, const AtomSet& x);
bool is_answer_set(const Program& pi, const AtomSet& x);
std::vector<AtomSet> enumerate_answer_sets(const Program& pi, const AtomSet& universe,
                                           std::size_t cap = kDefaultEnumerationCap);
bool is_input_answer_set(const Program& pi, const AtomSet& x);

bool is_unfounded(const AtomSet& u, const LiteralSet& m, const Program& pi);
AtomSet greatest_unfounded_set(const LiteralSet& m, const Program& pi);
// GUS over an explicit signature: atoms of `signature` without rules in `pi`
// are unfounded on every M.
AtomSet greatest_unfounded_set(const LiteralSet& m, const Program& pi, const AtomSet& signature);

LiteralSet w_step(const Program& pi, const LiteralSet& m);
LiteralSet w_step(const Program& pi, const LiteralSet& m, const AtomSet& signature);
LiteralSet w_fix(const Program& pi, const LiteralSet& m);
ThreeValuedModel well_founded_model(const Program& pi);

bool is_pcid_model(const PcidTheory& t, const LiteralSet& m);
bool is_smasp_model(const SmaspTheory& t, const LiteralSet& m);

// Complete interpretations over `universe` satisfying `f`, in ascending order of
// the bit pattern over the canonically sorted universe. The callback may return
// false to stop early.
void for_each_classical_model(const ClauseSet& f, const AtomSet& universe, std::size_t cap,
                              const std::function<bool(const LiteralSet&)>& visit);
std::vector<LiteralSet> classical_models(const ClauseSet& f, const AtomSet& universe,
                                         std::size_t cap = kDefaultEnumerationCap);

std::vector<LiteralSet> enumerate_smasp_models(const SmaspTheory& t,
                                               std::size_t cap = kDefaultEnumerationCap);
std::vector<LiteralSet> enumerate_pcid_models(const PcidTheory& t,
                                              std::size_t cap = kDefaultEnumerationCap);

// [F, Pi] |= G: every model of the theory satisfies every clause of G.
bool entails(const SmaspTheory& t, const std::vector<Clause>& g,
             std::size_t cap = kDefaultEnumerationCap);
bool entails(const SmaspTheory& t, const Clause& g, std::size_t cap = kDefaultEnumerationCap);

// Pi |= G over `universe`: every interpretation N with N+ ∩ At(Pi) an answer
// set of Pi satisfies G. Kept apart from the theory-level relation above.
bool program_entails(const Program& pi, const std::vector<Clause>& g, const AtomSet& universe,
                     std::size_t cap = kDefaultEnumerationCap);

// Enumerates the models of a theory once and answers many entailment queries.
class EntailmentOracle {
public:
    explicit EntailmentOracle(const SmaspTheory& t, std::size_t cap = kDefaultEnumerationCap);

    bool entails(const Clause& c) const;
    bool has_model() const { return !models_.empty(); }
    const std::vector<LiteralSet>& models() const { return models_; }
    const AtomSet& universe() const { return universe_; }

private:
    AtomSet universe_;
    std::vector<LiteralSet> models_;
};

bool is_total_on(const PcidTheory& t, const LiteralSet& m);
bool is_total(const PcidTheory& t, std::size_t cap = kDefaultEnumerationCap);

// Pi(N)
Program simplify_by(const Program& pi, const LiteralSet& n);

} // namespace smasp
