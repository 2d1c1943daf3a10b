// Python module: text in, plain Python values out.
#include "smasp/cli.hpp"
#include "smasp/format.hpp"
#include "smasp/semantics.hpp"
#include "smasp/trace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace smasp;

namespace {

std::vector<std::string> literal_list(const LiteralSet& m) {
    std::vector<std::string> out;
    for (const auto& l : m) out.push_back(to_string(l));
    return out;
}

std::vector<std::string> atom_list(const AtomSet& x) {
    std::vector<std::string> out;
    for (const auto& a : x) out.push_back(a.name());
    return out;
}

py::dict step_dict(const TraceStep& s) {
    py::dict d;
    d["index"] = s.index;
    d["rule"] = std::string(rule_name(s.transition.rule));
    d["literal"] = s.transition.literal ? py::cast(to_string(*s.transition.literal)) : py::none();
    d["clause"] = s.transition.clause ? py::cast(to_string(*s.transition.clause)) : py::none();
    d["witness"] = atom_list(s.transition.witness);
    d["prefix"] = s.transition.prefix_length;
    d["digest"] = s.digest;
    return d;
}

py::dict solve(const std::string& text, const std::string& format, const std::string& mode, std::size_t max_steps,
               bool raw) {
    const auto f = parse_format(format);
    const auto m = parse_mode(mode);
    auto problem = load_problem(f, m, text);
    RunLimits limits;
    limits.max_steps = max_steps;
    Outcome o;
    {
        py::gil_scoped_release release;
        o = Engine(problem.theory, Strategy::of(m)).run(limits);
    }
    py::dict d;
    d["verdict"] = std::string(verdict_name(o.verdict));
    if (o.verdict == Verdict::model) {
        d["model"] = literal_list(raw ? o.model : project_model(problem, o.model));
    } else {
        d["model"] = py::none();
    }
    py::list steps;
    for (const auto& s : o.trace) steps.append(step_dict(s));
    d["steps"] = steps;
    d["trace"] = write_trace(TraceFile{{mode, format, theory_digest(problem.theory)}, o.trace});
    py::dict stats;
    for (const auto& [rule, n] : o.stats) stats[py::str(std::string(rule_name(rule)))] = n;
    d["stats"] = stats;
    return d;
}

py::tuple check_trace(const std::string& trace_text, const std::string& input, const std::string& format,
                      const std::string& mode, bool strict) {
    auto trace = read_trace(trace_text);
    const auto f = parse_format(format.empty() ? trace.header.format : format);
    const auto m = parse_mode(mode.empty() ? trace.header.mode : mode);
    auto problem = load_problem(f, m, input);
    auto check = validate_trace(trace, problem.theory, Strategy::of(m), strict);
    return py::make_tuple(check.valid, check.step, check.reason);
}

} // namespace

PYBIND11_MODULE(_smasp, m) {
    m.doc() = "Transition-system solver for SM(ASP) and PC(ID) theories";

    auto error = py::register_exception<Error>(m, "SmaspError", PyExc_ValueError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", error.ptr());

    m.attr("__version__") = std::string(kToolVersion);
    m.attr("MODES") = std::vector<std::string>{"dpll", "smodels", "cmodels", "clasp", "minisatid"};

    m.def("solve", &solve, py::arg("text"), py::arg("format") = "lp", py::arg("mode") = "clasp",
          py::arg("max_steps") = RunLimits{}.max_steps, py::arg("raw") = false,
          "Run one search and return verdict, model, steps, the JSON-lines trace and rule counts.");

    m.def(
        "translate",
        [](const std::string& text, const std::string& to, const std::string& format) {
            return translate_input(parse_format(format), text, to);
        },
        py::arg("text"), py::arg("to") = "edcomp", py::arg("format") = "lp");

    m.def(
        "answer_sets",
        [](const std::string& lp) {
            auto pi = parse_lp(lp);
            std::vector<std::vector<std::string>> out;
            for (const auto& x : enumerate_answer_sets(pi, atoms_of(pi))) out.push_back(atom_list(x));
            return out;
        },
        py::arg("lp"));

    m.def(
        "well_founded_model", [](const std::string& lp) { return literal_list(well_founded_model(parse_lp(lp)).literals); },
        py::arg("lp"));

    m.def(
        "greatest_unfounded_set",
        [](const std::string& lp, const std::vector<std::string>& literals) {
            LiteralSet m;
            for (const auto& l : literals) m.insert(parse_literal(l));
            return atom_list(greatest_unfounded_set(m, parse_lp(lp)));
        },
        py::arg("lp"), py::arg("literals") = std::vector<std::string>{});

    auto models = [](const std::vector<LiteralSet>& ms) {
        std::vector<std::vector<std::string>> out;
        for (const auto& x : ms) out.push_back(literal_list(x));
        return out;
    };
    m.def(
        "smasp_models", [models](const std::string& text) { return models(enumerate_smasp_models(parse_smasp(text))); },
        py::arg("text"), "Models of a theory in the two-section layout; constraints are allowed.");
    m.def(
        "pcid_models", [models](const std::string& text) { return models(enumerate_pcid_models(parse_pcid(text))); },
        py::arg("text"));

    m.def("check_trace", &check_trace, py::arg("trace"), py::arg("input"), py::arg("format") = "",
          py::arg("mode") = "", py::arg("strict") = false,
          "Validate a JSON-lines trace; returns (valid, failing step, reason).");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli_main(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line front end in-process; returns (exit code, stdout, stderr).");
}
