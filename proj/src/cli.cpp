#include "smasp/cli.hpp"

#include "smasp/format.hpp"
#include "smasp/semantics.hpp"
#include "smasp/trace.hpp"
#include "smasp/translate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace smasp {

namespace {

// Oracles refuse theories above this many atoms when called from the CLI.
constexpr std::size_t kSelfCheckAtoms = 12;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

LiteralSet parse_literal_list(const std::string& text) {
    LiteralSet out;
    std::string item;
    std::istringstream in(text);
    while (in >> item) {
        std::stringstream parts(item);
        std::string piece;
        while (std::getline(parts, piece, ',')) {
            if (!piece.empty()) out.insert(parse_literal(piece));
        }
    }
    return out;
}

InputFormat resolve_format(const std::string& given, const std::string& path) {
    return given.empty() ? guess_format(path) : parse_format(given);
}

// The theory an oracle task talks about: [F, {}] for clauses, [{}, Pi] for
// programs and [F, Pi] for pcid inputs.
SmaspTheory plain_theory(InputFormat f, const std::string& text) {
    switch (f) {
    case InputFormat::cnf:
        return SmaspTheory{parse_dimacs(text).clauses, {}};
    case InputFormat::lp:
        return SmaspTheory{{}, parse_lp(text)};
    case InputFormat::pcid:
        return parse_pcid(text).as_smasp();
    }
    return {};
}

struct SolveOptions {
    std::string mode = "clasp";
    std::string format;
    std::string trace;
    std::size_t max_steps = RunLimits{}.max_steps;
    std::size_t enumerate = 1;
    bool self_check = false;
    bool raw = false;
    std::string input;
};

int run_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
    const auto format = resolve_format(o.format, o.input);
    const auto mode = parse_mode(o.mode);
    auto problem = load_problem(format, mode, read_input(o.input));

    const bool small = problem.theory.atoms().size() <= kSelfCheckAtoms;
    if (o.self_check && problem.pcid && mode == Mode::minisatid) {
        if (!small) {
            err << "c warning: theory too large to verify totality\n";
        } else if (!is_total(*problem.pcid)) {
            err << "error: minisatid mode needs a total PC(ID) theory\n";
            return kExitInputError;
        }
    }

    const auto strategy = Strategy::of(mode);
    RunLimits limits;
    limits.max_steps = o.max_steps;
    limits.self_check_atoms = o.self_check ? kSelfCheckAtoms : 0;

    std::vector<std::string> models;
    bool limited = false;
    std::map<RuleKind, std::size_t> stats;
    const std::size_t wanted = o.enumerate == 0 ? SIZE_MAX : o.enumerate;
    for (std::size_t round = 0; models.size() < wanted; ++round) {
        Engine engine(problem.theory, strategy);
        auto outcome = engine.run(limits);
        if (round == 0) {
            stats = outcome.stats;
            if (!o.trace.empty()) {
                std::ofstream t(o.trace, std::ios::binary);
                if (!t) throw Error("cannot write '" + o.trace + "'");
                TraceFile file{{std::string(mode_name(mode)), std::string(format_name(format)),
                                theory_digest(problem.theory)},
                               outcome.trace};
                t << write_trace(file);
            }
        }
        if (outcome.verdict == Verdict::limit_exceeded) {
            limited = true;
            break;
        }
        if (outcome.verdict == Verdict::unsatisfiable) {
            if (o.self_check && small && !enumerate_smasp_models(problem.theory, kSelfCheckAtoms).empty()) {
                err << "self-check failed: the theory has models but the search found none\n";
                return kExitSelfCheck;
            }
            break;
        }
        if (o.self_check && small) {
            auto shown = project_model(problem, outcome.model);
            bool ok = problem.pcid ? is_pcid_model(*problem.pcid, restrict_to(outcome.model, problem.pcid->atoms()))
                      : format == InputFormat::lp ? is_answer_set(problem.program, positive_atoms(shown))
                                                  : satisfies(outcome.model, problem.theory.f);
            if (!ok) {
                err << "self-check failed: " << to_string(shown) << " is not a model of the input\n";
                return kExitSelfCheck;
            }
        }
        models.push_back(format_model(problem, outcome.model, o.raw));
        auto block = blocking_clause(problem, outcome.model);
        if (!block) break;
        problem.theory.f.insert(*block);
    }

    if (!models.empty()) {
        out << "s SATISFIABLE\n";
        for (const auto& m : models) out << "v " << m << "\n";
    } else {
        out << (limited ? "s UNKNOWN\n" : "s UNSATISFIABLE\n");
    }
    for (const auto& [rule, n] : stats) {
        out << "c " << rule_name(rule) << " " << n << "\n";
    }
    if (limited) {
        err << "c step limit reached\n";
    }
    if (!models.empty()) return kExitModel;
    return limited ? kExitLimit : kExitUnsat;
}

int run_translate(const std::string& to, const std::string& fmt, const std::string& input, std::ostream& out) {
    out << translate_input(resolve_format(fmt, input), read_input(input), to);
    return 0;
}

struct OracleOptions {
    std::string task;
    std::string format;
    std::string literals;
    std::string query;
    std::string input;
};

int run_oracle(const OracleOptions& o, std::ostream& out) {
    const auto format = resolve_format(o.format, o.input);
    const auto text = read_input(o.input);
    auto theory = plain_theory(format, text);
    const auto& pi = theory.pi;
    if (o.task == "answer-sets") {
        auto sets = enumerate_answer_sets(pi, atoms_of(pi));
        for (const auto& x : sets) out << to_string(x) << "\n";
        if (sets.empty()) out << "c no answer sets\n";
    } else if (o.task == "wfm") {
        out << to_string(well_founded_model(pi).literals) << "\n";
    } else if (o.task == "gus") {
        out << to_string(greatest_unfounded_set(parse_literal_list(o.literals), pi)) << "\n";
    } else if (o.task == "smasp-models" || o.task == "pcid-models") {
        auto models = o.task == "smasp-models" ? enumerate_smasp_models(theory)
                                               : enumerate_pcid_models(PcidTheory(theory.f, theory.pi));
        for (const auto& m : models) out << to_string(m) << "\n";
        if (models.empty()) out << "c no models\n";
    } else {
        if (o.query.empty()) throw Error("--task entails needs --query");
        auto g = parse_clause_lines(o.query);
        out << (entails(theory, std::vector<Clause>(g.begin(), g.end())) ? "yes" : "no") << "\n";
    }
    return 0;
}

struct CheckOptions {
    std::string trace;
    std::string mode;
    std::string format;
    bool strict = false;
    std::string input;
};

int run_check(const CheckOptions& o, std::ostream& out) {
    auto trace = read_trace(read_input(o.trace));
    const auto format = parse_format(!o.format.empty()          ? o.format
                                     : !trace.header.format.empty() ? trace.header.format
                                                                     : std::string(format_name(guess_format(o.input))));
    const auto mode = parse_mode(o.mode.empty() ? trace.header.mode : o.mode);
    auto problem = load_problem(format, mode, read_input(o.input));
    auto check = validate_trace(trace, problem.theory, Strategy::of(mode), o.strict);
    if (check.valid) {
        out << "VALID " << trace.steps.size() << " steps\n";
        return 0;
    }
    out << "INVALID at step " << check.step << ": " << check.reason << "\n";
    return kExitInputError;
}

} // namespace

std::string translate_input(InputFormat format, std::string_view text, std::string_view to) {
    if (format == InputFormat::cnf) {
        throw Error("translate expects an lp or pcid input");
    }
    std::optional<PcidTheory> pcid;
    Program program;
    if (format == InputFormat::pcid) {
        pcid = parse_pcid(text);
        program = pi_translation(*pcid);
    } else {
        program = parse_lp(text);
    }
    if (to == "cl") return print_clause_lines(clausal(program));
    if (to == "comp") return print_clause_lines(completion(program));
    if (to == "edcomp") return print_clause_lines(ed_completion(program));
    if (to == "pi") {
        if (!pcid) throw Error("--to pi expects a pcid input");
        return print_lp(program);
    }
    if (to == "open") return print_lp(pcid ? open_program(*pcid) : open_program(program, atoms_of(program)));
    throw Error("unknown translation '" + std::string(to) + "'");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SM(ASP) search by transition systems", "smasp"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"dpll", "smodels", "cmodels", "clasp", "minisatid"};
    const std::vector<std::string> formats{"cnf", "lp", "pcid"};

    SolveOptions solve;
    auto* s = app.add_subcommand("solve", "search for a model");
    s->add_option("--mode", solve.mode, "strategy")->check(CLI::IsMember(modes));
    s->add_option("--format", solve.format, "input format (default: by extension)")->check(CLI::IsMember(formats));
    s->add_option("--trace", solve.trace, "write the transition trace (JSON lines)");
    s->add_option("--max-steps", solve.max_steps, "step limit per run");
    s->add_option("--enumerate", solve.enumerate, "number of models, 0 for all");
    s->add_flag("--self-check", solve.self_check, "verify verdicts with the exhaustive oracles");
    s->add_flag("--raw", solve.raw, "print the full internal model");
    s->add_option("input", solve.input, "input file, - for stdin")->required();

    std::string to, tformat, tinput;
    auto* t = app.add_subcommand("translate", "print a translation of the input");
    t->add_option("--to", to)->required()->check(CLI::IsMember({"cl", "comp", "edcomp", "pi", "open"}));
    t->add_option("--format", tformat)->check(CLI::IsMember(formats));
    t->add_option("input", tinput)->required();

    OracleOptions oracle;
    auto* o = app.add_subcommand("oracle", "evaluate a semantic notion by enumeration");
    o->add_option("--task", oracle.task)
        ->required()
        ->check(CLI::IsMember({"answer-sets", "wfm", "gus", "smasp-models", "pcid-models", "entails"}));
    o->add_option("--format", oracle.format)->check(CLI::IsMember(formats));
    o->add_option("--literals", oracle.literals, "the set M for --task gus, e.g. \"a -b\"");
    o->add_option("--query", oracle.query, "clause for --task entails, e.g. \"a | -b\"");
    o->add_option("input", oracle.input)->required();

    CheckOptions check;
    auto* c = app.add_subcommand("check-trace", "replay a trace against the input");
    c->add_option("--trace", check.trace)->required();
    c->add_option("--mode", check.mode, "default: from the trace header")->check(CLI::IsMember(modes));
    c->add_option("--format", check.format, "default: from the trace header")->check(CLI::IsMember(formats));
    c->add_flag("--strict-strategy", check.strict, "also require the strategy's choice at every step");
    c->add_option("input", check.input)->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (s->parsed()) return run_solve(solve, out, err);
        if (t->parsed()) return run_translate(to, tformat, tinput, out);
        if (o->parsed()) return run_oracle(oracle, out);
        return run_check(check, out);
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        err << "self-check failed: " << e.what() << "\n";
        return kExitSelfCheck;
    }
}

} // namespace smasp
