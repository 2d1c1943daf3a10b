// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "smasp/cli.hpp"
#include "smasp/engine.hpp"
#include "smasp/format.hpp"
#include "smasp/semantics.hpp"
#include "smasp/trace.hpp"
#include "smasp/translate.hpp"

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_programs.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace smasp;
using namespace smasp::testing;

namespace {

const std::vector<Mode> kModes{Mode::dpll, Mode::smodels, Mode::cmodels, Mode::clasp, Mode::minisatid};

// Collects failed checks for one criterion; only the first few are printed.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }
};

// Halting and digest uniqueness for one run, shared by every engine-driven criterion.
struct RunLedger {
    long runs = 0;
    long failures = 0;
    std::string first;

    void record(const Outcome& o, const std::string& where) {
        ++runs;
        std::set<std::string> seen{state_digest(AugmentedState{})};
        bool ok = o.verdict != Verdict::limit_exceeded;
        for (const auto& s : o.trace) ok = ok && seen.insert(s.digest).second;
        if (!ok && failures++ == 0) first = where;
    }
};

RunLedger g_runs;

bool report(int id, const std::string& title, const Tally& t, double budget_s,
            std::chrono::steady_clock::duration elapsed, const std::string& extra = "") {
    double secs = std::chrono::duration<double>(elapsed).count();
    bool pass = t.failures == 0 && secs < budget_s;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.checks
              << " checks, " << t.failures << " failed" << (extra.empty() ? "" : ", " + extra) << ", "
              << static_cast<long>(secs * 1000) << " ms of " << budget_s << " s)\n";
    for (const auto& n : t.notes) std::cout << "    " << n << "\n";
    if (secs >= budget_s) std::cout << "    over the time budget\n";
    return pass;
}

template <class F>
std::chrono::steady_clock::duration timed(F&& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::steady_clock::now() - start;
}

std::vector<AugmentedState> replay(const Engine& e, const Outcome& o) {
    std::vector<AugmentedState> states{AugmentedState{}};
    for (const auto& s : o.trace) states.push_back(e.step(states.back(), s.transition));
    return states;
}

std::vector<std::string> rule_names(const std::vector<TraceStep>& trace) {
    std::vector<std::string> out;
    for (const auto& s : trace) {
        std::string text(rule_name(s.transition.rule));
        if (s.transition.literal) text += " " + to_string(*s.transition.literal);
        out.push_back(text);
    }
    return out;
}

bool c1() {
    Tally t;
    auto elapsed = timed([&] {
        auto pi = pi0();
        t.expect(is_input_answer_set(pi, atoms("b c")), "{b,c} is an input answer set");
        t.expect(is_input_answer_set(pi, atoms("a b")), "{a,b} is an input answer set");
        t.expect(!is_input_answer_set(pi, atoms("a b c")), "{a,b,c} is not an input answer set");

        std::vector<LiteralSet> expected{lits("a b -c"), lits("-a b c")};
        t.expect(enumerate_pcid_models(PcidTheory(f0(), pi)) == expected, "PC(ID) models");
        t.expect(enumerate_smasp_models(SmaspTheory{f0(), pi}) == expected, "SM(ASP) models");

        t.expect(completion(pi) == clauses({"a | -b | c", "-a | b", "-a | -c", "b", "-c"}), "Comp clauses");
        Atom f("f(b;~c)", AtomOrigin::fresh_body);
        ClauseSet ed{cl("a | -b | c"), Clause{neg(at("a")), pos(f)},   Clause{pos(f), neg(at("b")), pos(at("c"))},
                     Clause{neg(f), pos(at("b"))}, Clause{neg(f), neg(at("c"))}, cl("b"),
                     cl("-c")};
        auto got = ed_completion(pi);
        t.expect(got == ed && got.size() == 7, "ED-Comp clauses: " + print_clause_lines(got));

        for (auto m : kModes) {
            auto o = Engine(SmaspTheory{f0(), pi}, Strategy::of(m)).run();
            g_runs.record(o, "running example");
            t.expect(o.verdict == Verdict::model &&
                         std::find(expected.begin(), expected.end(), o.model) != expected.end(),
                     std::string("engine model in mode ") + std::string(mode_name(m)));
        }
    });
    return report(1, "running-example exactness", t, 1.0, elapsed);
}

bool c2() {
    Tally t;
    auto elapsed = timed([&] {
        // Engine level, with the atoms named as in the example.
        auto o = Engine(SmaspTheory{f1(), {}}, Strategy::of(Mode::dpll)).run();
        g_runs.record(o, "DPLL path");
        auto names = rule_names(o.trace);
        t.expect(names == std::vector<std::string>{"Decide a", "UnitPropagate c", "Decide b"},
                 "engine trace differs");
        t.expect(o.verdict == Verdict::model && o.model == lits("a b c"), "engine model " + to_string(o.model));

        // Command line on DIMACS input, where a, b, c are x1, x2, x3.
        auto dir = std::filesystem::temp_directory_path() / "smasp-acceptance";
        std::filesystem::create_directories(dir);
        auto input = (dir / "f1.cnf").string();
        auto trace = (dir / "f1.jsonl").string();
        std::ofstream(input) << "p cnf 3 2\n1 2 0\n-1 3 0\n";
        std::ostringstream out, err;
        int code = cli_main({"solve", "--mode", "dpll", "--format", "cnf", "--trace", trace, input}, out, err);
        t.expect(code == kExitModel, "exit code " + std::to_string(code));
        t.expect(out.str().find("v x1 x2 x3\n") != std::string::npos, "model line: " + out.str());
        std::ifstream in(trace);
        std::stringstream text;
        text << in.rdbuf();
        auto file = read_trace(text.str());
        t.expect(rule_names(file.steps) == std::vector<std::string>{"Decide x1", "UnitPropagate x3", "Decide x2"},
                 "trace file differs");
        std::filesystem::remove_all(dir);
    });
    return report(2, "DPLL path", t, 1.0, elapsed);
}

// Criteria 3, 7 and 9 share the same runs.
struct SearchResult {
    Tally agree, learning, singular;
    long conflict_runs = 0;
    long unfounded_steps = 0;
    std::chrono::steady_clock::duration elapsed{};
};

SearchResult search_runs() {
    SearchResult r;
    r.elapsed = timed([&] {
        Rng rng(2024);
        ProgramShape shape; // at most 6 atoms and 10 rules, with not not and constraints
        for (int i = 0; i < 500; ++i) {
            auto pi = random_program(rng, shape);
            for (const auto& f : {completion(pi), ed_completion(pi)}) {
                SmaspTheory theory{f, pi};
                auto models = bf_smasp_models(f, pi);
                auto entailed = [&](const Clause& c) {
                    return std::all_of(models.begin(), models.end(),
                                       [&](const LiteralSet& m) { return bf_satisfies(m, {c}); });
                };
                for (auto m : kModes) {
                    std::string where = print_lp(pi) + " in mode " + std::string(mode_name(m));
                    Engine e(theory, Strategy::of(m));
                    auto o = e.run();
                    g_runs.record(o, where);
                    bool found = o.verdict == Verdict::model;
                    r.agree.expect(found == !models.empty(), "verdict: " + where);
                    if (found) r.agree.expect(is_smasp_model(theory, o.model), "model check: " + where);

                    auto states = replay(e, o);
                    bool conflict = std::any_of(o.trace.begin(), o.trace.end(), [](const TraceStep& s) {
                        auto k = s.transition.rule;
                        return k == RuleKind::backjump || k == RuleKind::backtrack || k == RuleKind::fail;
                    });
                    if (conflict) ++r.conflict_runs;
                    for (std::size_t k = 0; k < o.trace.size(); ++k) {
                        const auto& tr = o.trace[k].transition;
                        if (conflict && tr.clause && tr.rule != RuleKind::decide) {
                            r.learning.expect(entailed(*tr.clause), "clause " + to_string(*tr.clause) + ": " + where);
                        }
                        if (m == Mode::smodels && tr.rule == RuleKind::unfounded) {
                            ++r.unfounded_steps;
                            const auto& s = states[k];
                            r.singular.expect(e.applicable_unit_propagate(s).empty() && !e.applicable_fail(s) &&
                                                  !e.applicable_backtrack(s),
                                              "step " + std::to_string(k + 1) + ": " + where);
                        }
                    }
                    if (conflict) {
                        for (const auto& c : states.back().learned) {
                            r.learning.expect(entailed(c), "learned " + to_string(c) + ": " + where);
                        }
                    }
                }
            }
        }
    });
    return r;
}

bool c4() {
    Tally t;
    auto elapsed = timed([&] {
        Rng rng(4);
        ProgramShape shape;
        shape.atoms = 8;
        for (int i = 0; i < 250; ++i) {
            auto pi = random_program(rng, shape);
            auto m = random_consistent_literals(rng, atom_pool(8));
            t.expect(greatest_unfounded_set(m, pi) == bf_gus(m, pi, bf_atoms(pi)),
                     print_lp(pi) + " under " + to_string(m));
        }
    });
    return report(4, "greatest unfounded set exactness", t, 30.0, elapsed);
}

bool c5() {
    Tally t;
    long iterations = 0;
    auto elapsed = timed([&] {
        Rng rng(5);
        ProgramShape shape;
        shape.negneg = false;
        shape.constraints = false;
        for (int i = 0; i < 250; ++i) {
            auto pi = random_program(rng, shape);
            auto h = heads(pi);
            LiteralSet n;
            for (const auto& l : random_consistent_literals(rng, atom_pool(6))) {
                if (!h.contains(l.atom)) n.insert(l);
            }
            auto n_atoms = atoms_of(n);
            // Route one: the program opened on |N|, iterated from N.
            Program opened = pi;
            for (const auto& a : n_atoms) opened.rules.emplace_back(a, Body{{}, {}, {a}});
            auto signature = atoms_of(opened);
            // Route two: Pi(N), iterated from the empty set over the remaining atoms.
            auto simplified = simplify_by(pi, n);
            AtomSet rest;
            for (const auto& a : signature) {
                if (!n_atoms.contains(a)) rest.insert(a);
            }
            std::string where = print_lp(pi) + " with N = " + to_string(n);
            LiteralSet left = n;
            LiteralSet right;
            bool settled = false;
            for (std::size_t k = 0; k <= 2 * signature.size() + 2; ++k) {
                ++iterations;
                auto shifted = right;
                shifted.insert(n.begin(), n.end());
                t.expect(left == shifted, "iteration " + std::to_string(k) + ": " + where);
                auto next_left = w_step(opened, left, signature);
                auto next_right = w_step(simplified, right, rest);
                if (next_left == left && next_right == right) {
                    settled = true;
                    break;
                }
                left = std::move(next_left);
                right = std::move(next_right);
            }
            t.expect(settled, "no fixpoint: " + where);
        }
    });
    return report(5, "fixpoint cross-check of the two model-check routes", t, 30.0, elapsed,
                  std::to_string(iterations) + " iterations");
}

bool c6() {
    Tally t;
    int totals = 0;
    auto elapsed = timed([&] {
        Rng rng(6);
        ProgramShape shape;
        shape.constraints = false;
        for (int i = 0; i < 2000 && totals < 120; ++i) {
            auto pi = random_program(rng, shape);
            auto f = random_clauses(rng, atom_pool(6), 3, 3);
            PcidTheory theory(f, pi);
            if (!is_total(theory)) continue;
            ++totals;
            std::string where = print_pcid(theory);

            auto translated = pi_translation(theory);
            auto via_pi = ed_completion(translated);
            auto direct = ed_completion(open_program(theory));
            direct.insert(f.begin(), f.end());
            t.expect(via_pi == direct, "clause sets differ: " + where);

            auto a = Engine(SmaspTheory{via_pi, translated}, Strategy::of(Mode::clasp)).run();
            auto b = Engine(SmaspTheory{direct, open_program(theory)}, Strategy::of(Mode::minisatid)).run();
            g_runs.record(a, where + " (clasp)");
            g_runs.record(b, where + " (minisatid)");
            t.expect(a.verdict == b.verdict && a.trace == b.trace, "traces differ: " + where);
            auto models = bf_pcid_models(f, pi);
            t.expect((a.verdict == Verdict::model) == !models.empty(), "verdict: " + where);
        }
        t.expect(totals >= 100, "only " + std::to_string(totals) + " total theories");
    });
    return report(6, "structural and trace identity on total PC(ID) theories", t, 60.0, elapsed,
                  std::to_string(totals) + " theories");
}

} // namespace

int main() {
    bool ok = true;
    ok &= c1();
    ok &= c2();
    auto search = search_runs();
    ok &= report(3, "oracle equivalence over 500 programs x 2 completions x 5 modes", search.agree, 60.0,
                 search.elapsed);
    ok &= c4();
    ok &= c5();
    ok &= c6();
    ok &= report(7, "learning soundness", search.learning, 60.0, search.elapsed,
                 std::to_string(search.conflict_runs) + " conflict-bearing runs");

    Tally halting;
    halting.checks = g_runs.runs;
    halting.failures = g_runs.failures;
    if (g_runs.failures) halting.notes.push_back(g_runs.first);
    ok &= report(8, "termination without repeated trail digests", halting, 1e9, {},
                 std::to_string(g_runs.runs) + " runs");

    ok &= report(9, "smodels non-singularity", search.singular, 60.0, search.elapsed,
                 std::to_string(search.unfounded_steps) + " Unfounded steps");
    return ok ? 0 : 1;
}
