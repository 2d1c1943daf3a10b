#include "smasp/semantics.hpp"
#include "smasp/translate.hpp"

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_programs.hpp"

#include <catch2/catch.hpp>

using namespace smasp;
using namespace smasp::testing;

TEST_CASE("reduct reads not-not as membership", "[semantics]") {
    auto r = reduct(lp("a :- b, not c, not not d."), atoms("d"));
    REQUIRE(r.rules.size() == 1);
    CHECK(r.rules[0].body() == Body{atoms("b"), {}, {}});
    CHECK(reduct(lp("a :- b, not c, not not d."), atoms("c d")).rules.empty());
    CHECK(reduct(lp("a :- not not d."), {}).rules.empty());
}

TEST_CASE("answer sets of the small programs", "[semantics]") {
    CHECK(is_answer_set(pi0(), atoms("a b")));
    CHECK_FALSE(is_answer_set(pi3(), atoms("a b")));
    CHECK(is_answer_set(pi3(), {}));
    CHECK(enumerate_answer_sets(pi0(), atoms("a b c")) == bf_answer_sets(pi0(), atoms("a b c")));
    CHECK(enumerate_answer_sets(pi3(), atoms("a b")) == std::vector<AtomSet>{{}});
    CHECK(enumerate_answer_sets(Program{}, {}) == std::vector<AtomSet>{{}});
    CHECK(enumerate_answer_sets(pi4(), atoms("a")) == std::vector<AtomSet>{{}, atoms("a")});
}

TEST_CASE("constraints filter answer sets", "[semantics]") {
    auto p = lp("{a}.\n:- a.");
    CHECK(enumerate_answer_sets(p, atoms("a")) == std::vector<AtomSet>{{}});
    CHECK_FALSE(is_answer_set(lp("a.\n:- not not a."), atoms("a")));
}

TEST_CASE("enumeration refuses universes above the cap", "[semantics]") {
    CHECK_THROWS_AS(enumerate_answer_sets(pi0(), atoms("a b c"), 2), LimitExceeded);
}

TEST_CASE("input answer sets of the running program", "[semantics]") {
    CHECK(is_input_answer_set(pi0(), atoms("b c")));
    CHECK(is_input_answer_set(pi0(), atoms("a b")));
    CHECK_FALSE(is_input_answer_set(pi0(), atoms("a b c")));
}

TEST_CASE("unfounded sets", "[semantics]") {
    CHECK(is_unfounded(atoms("a"), {}, pi2()));
    CHECK(is_unfounded(atoms("a b"), {}, pi3()));
    CHECK_FALSE(is_unfounded(atoms("b"), {}, pi0()));
    CHECK_THROWS_AS(is_unfounded(atoms("a"), lits("a -a"), pi2()), PreconditionError);

    CHECK(greatest_unfounded_set({}, pi0()) == bf_gus({}, pi0(), atoms("a b c")));
    CHECK(greatest_unfounded_set({}, pi0()) == atoms("c"));
    auto pio = open_program(pi0(), atoms("a b c"));
    CHECK(greatest_unfounded_set(lits("b"), pio) == bf_gus(lits("b"), pio, atoms("a b c")));
    CHECK(greatest_unfounded_set(lits("b"), pio).empty());
    CHECK(greatest_unfounded_set({}, pi2()) == atoms("a"));
    CHECK_THROWS_AS(greatest_unfounded_set(lits("a -a"), pi2()), PreconditionError);
}

TEST_CASE("the W operator", "[semantics]") {
    CHECK(w_step(pi0(), {}) == lits("b -c"));
    CHECK(w_step(pi0(), lits("b -c")) == lits("a b -c"));
    CHECK(w_step(pi0(), lits("a -a")) == lits("a b c -a -b -c"));
    CHECK_THROWS_AS(w_step(lp(":- a."), {}), PreconditionError);

    CHECK(w_fix(pi0(), {}) == lits("a b -c"));
    CHECK(w_fix(open_program(pi0(), atoms("a b c")), lits("c")) == lits("b c -a"));
    CHECK(w_fix(pi4(), {}).empty());
}

TEST_CASE("well-founded models", "[semantics]") {
    auto m0 = well_founded_model(pi0());
    CHECK(m0.literals == lits("a b -c"));
    CHECK(m0.is_total());
    auto m4 = well_founded_model(pi4());
    CHECK(m4.literals.empty());
    CHECK_FALSE(m4.is_total());
    CHECK(well_founded_model(pi3()).literals == lits("-a -b"));
}

TEST_CASE("PC(ID) and SM(ASP) models of the running theory", "[semantics]") {
    PcidTheory t(f0(), pi0());
    CHECK(is_pcid_model(t, lits("b -c a")));
    CHECK(is_pcid_model(t, lits("b c -a")));
    CHECK_FALSE(is_pcid_model(t, lits("-b -c a")));
    CHECK(enumerate_pcid_models(t) == std::vector<LiteralSet>{lits("a b -c"), lits("-a b c")});

    auto s = t.as_smasp();
    CHECK(is_smasp_model(s, lits("b -c a")));
    CHECK(is_smasp_model(s, lits("b c -a")));
    CHECK_FALSE(is_smasp_model(s, lits("-b -c -a")));
    CHECK_FALSE(is_smasp_model(s, lits("b -c")));
    CHECK(enumerate_smasp_models(s) == enumerate_pcid_models(t));
}

TEST_CASE("entailment", "[semantics]") {
    SmaspTheory t{f0(), pi0()};
    CHECK(entails(t, cl("b")));
    CHECK_FALSE(entails(t, cl("-c")));
    CHECK(entails(SmaspTheory{{}, pi2()}, cl("-a")));
    CHECK_THROWS_AS(entails(t, cl("z")), PreconditionError);
    EntailmentOracle o(t);
    CHECK(o.has_model());
    CHECK(o.entails(cl("a | c")));
    CHECK_FALSE(o.entails(cl("a")));
    CHECK(program_entails(pi0(), {cl("a")}, atoms("a b c")));
}

TEST_CASE("totality", "[semantics]") {
    CHECK(is_total(PcidTheory(f0(), pi0())));
    CHECK_FALSE(is_total(PcidTheory({}, pi4())));
    CHECK(is_total(PcidTheory({}, {})));
}

TEST_CASE("simplification by a literal set", "[semantics]") {
    CHECK(simplify_by(pi0(), lits("-c")) == lp("a :- b.\nb."));
    CHECK(simplify_by(pi0(), lits("c")) == lp("b."));
    CHECK(simplify_by(pi0(), {}) == pi0());
    CHECK_THROWS_AS(simplify_by(pi0(), lits("c -c")), PreconditionError);
}

TEST_CASE("dropping vanished atoms breaks the fixpoint identity", "[semantics]") {
    // a loses its only rule in Pi(N); over At(Pi(N)) nothing is said about a.
    auto pi = lp("a :- b.");
    auto n = lits("-b");
    Program with_choice = pi;
    with_choice.rules.emplace_back(at("b"), Body{{}, {}, atoms("b")});
    auto left = w_step(with_choice, n);
    auto right = w_step(simplify_by(pi, n), {});
    right.insert(n.begin(), n.end());
    CHECK(left == lits("-a -b"));
    CHECK(right == lits("-b"));
    auto signature = atoms("a b");
    auto fixed = w_step(simplify_by(pi, n), {}, signature);
    fixed.insert(n.begin(), n.end());
    CHECK(fixed == left);
}

// --- properties -------------------------------------------------------------

namespace {

Program normal_program(Rng& rng, int n_atoms) {
    ProgramShape shape;
    shape.atoms = n_atoms;
    shape.negneg = false;
    shape.constraints = false;
    return random_program(rng, shape);
}

} // namespace

TEST_CASE("answer sets agree with the direct definition", "[semantics][property]") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto pi = random_program(rng, ProgramShape{});
        auto universe = atoms_of(pi);
        CAPTURE(print_lp(pi));
        CHECK(enumerate_answer_sets(pi, universe) == bf_answer_sets(pi, universe));
        bf_subsets(universe, [&](const AtomSet& x) { CHECK(is_input_answer_set(pi, x) == bf_is_input_answer_set(pi, x)); });
    }
}

TEST_CASE("greatest unfounded set is the union of unfounded subsets", "[semantics][property]") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        ProgramShape shape;
        shape.atoms = 8;
        shape.constraints = false;
        auto pi = random_program(rng, shape);
        auto m = random_consistent_literals(rng, atom_pool(8));
        CAPTURE(print_lp(pi), to_string(m));
        auto gus = greatest_unfounded_set(m, pi);
        CHECK(gus == bf_gus(m, pi, atoms_of(pi)));
        CHECK(is_unfounded(gus, m, pi));
    }
}

TEST_CASE("W is increasing and monotone; the least fixpoint is consistent", "[semantics][property]") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        ProgramShape shape;
        shape.constraints = false;
        auto pi = random_program(rng, shape);
        auto small = random_consistent_literals(rng, atom_pool(6));
        auto big = small;
        auto extra = random_consistent_literals(rng, atom_pool(6));
        for (const auto& l : extra) {
            if (!big.contains(complement(l))) big.insert(l);
        }
        CAPTURE(print_lp(pi), to_string(small), to_string(big));
        auto ws = w_step(pi, small);
        auto wb = w_step(pi, big);
        CHECK(std::includes(ws.begin(), ws.end(), small.begin(), small.end()));
        CHECK(std::includes(wb.begin(), wb.end(), ws.begin(), ws.end()));
        CHECK(ws == bf_w_step(pi, small, atoms_of(pi)));
        CHECK(is_consistent(well_founded_model(pi).literals));
    }
}

TEST_CASE("well-founded model matches the alternating fixpoint on normal programs", "[semantics][property]") {
    Rng rng(14);
    for (int i = 0; i < 300; ++i) {
        auto pi = normal_program(rng, 6);
        CAPTURE(print_lp(pi));
        CHECK(well_founded_model(pi).literals == bf_alternating_wfm(pi));
    }
}

TEST_CASE("input answer sets versus answer sets", "[semantics][property]") {
    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        auto pi = random_program(rng, ProgramShape{});
        auto h = heads(pi);
        auto universe = atoms_of(pi);
        universe.insert(Atom("z")); // outside At(Pi)
        CAPTURE(print_lp(pi));
        bf_subsets(universe, [&](const AtomSet& x) {
            if (std::includes(h.begin(), h.end(), x.begin(), x.end())) {
                CHECK(is_input_answer_set(pi, x) == is_answer_set(pi, x));
            }
            bool outside_only = std::none_of(x.begin(), x.end(), [&](const Atom& a) {
                return !h.contains(a) && atoms_of(pi).contains(a);
            });
            if (outside_only) {
                AtomSet inner;
                for (const auto& a : x) {
                    if (h.contains(a)) inner.insert(a);
                }
                CHECK(is_input_answer_set(pi, x) == is_answer_set(pi, inner));
            }
        });
    }
}

TEST_CASE("answer sets via unfounded sets", "[semantics][property]") {
    Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        ProgramShape shape;
        shape.atoms = 5;
        auto pi = random_program(rng, shape);
        auto universe = atoms_of(pi);
        auto rules_as_clauses = clausal(pi);
        CAPTURE(print_lp(pi));
        bf_subsets(universe, [&](const AtomSet& x) {
            auto m = interpretation(x, universe);
            bool no_unfounded = true;
            bf_subsets(x, [&](const AtomSet& u) {
                if (!u.empty() && is_unfounded(u, m, pi)) no_unfounded = false;
            });
            CHECK(is_answer_set(pi, x) == (satisfies(m, rules_as_clauses) && no_unfounded));
        });
    }
}

TEST_CASE("opening a program keeps SM(ASP) models", "[semantics][property]") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto pi = random_program(rng, ProgramShape{});
        auto f = random_clauses(rng, atom_pool(6), 3, 3);
        SmaspTheory t{f, pi};
        SmaspTheory opened{f, open_program(t)};
        CAPTURE(print_lp(pi), print_clause_lines(f));
        auto models = enumerate_smasp_models(t);
        CHECK(models == bf_smasp_models(f, pi));
        CHECK(models == enumerate_smasp_models(opened));
    }
}

TEST_CASE("PC(ID) models agree with SM(ASP) models on total theories", "[semantics][property]") {
    Rng rng(18);
    int total = 0;
    for (int i = 0; i < 400 && total < 150; ++i) {
        ProgramShape shape;
        shape.constraints = false;
        auto pi = random_program(rng, shape);
        auto f = random_clauses(rng, atom_pool(6), 3, 3);
        PcidTheory t(f, pi);
        CAPTURE(print_pcid(t));
        auto pcid = enumerate_pcid_models(t);
        CHECK(pcid == bf_pcid_models(f, pi));
        if (!is_total(t)) continue;
        ++total;
        CHECK(pcid == enumerate_smasp_models(t.as_smasp()));
    }
    CHECK(total >= 100);
}

TEST_CASE("fixpoint identity with choice rules over a fixed signature", "[semantics][property]") {
    Rng rng(19);
    for (int i = 0; i < 300; ++i) {
        auto pi = normal_program(rng, 6);
        auto h = heads(pi);
        LiteralSet n;
        for (const auto& l : random_consistent_literals(rng, atom_pool(6))) {
            if (!h.contains(l.atom)) n.insert(l);
        }
        Program with_choice = pi;
        for (const auto& a : atoms_of(n)) with_choice.rules.emplace_back(a, Body{{}, {}, {a}});
        auto signature = atoms_of(with_choice);
        auto simplified = simplify_by(pi, n);
        CAPTURE(print_lp(pi), to_string(n));
        LiteralSet left = n;
        LiteralSet right;
        for (int step = 0; step < 12; ++step) {
            auto shifted = right;
            shifted.insert(n.begin(), n.end());
            REQUIRE(left == shifted);
            left = w_step(with_choice, left, signature);
            AtomSet rest;
            for (const auto& a : signature) {
                if (!atoms_of(n).contains(a)) rest.insert(a);
            }
            right = w_step(simplified, right, rest);
        }
    }
}
