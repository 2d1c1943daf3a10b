#include "smasp/trace.hpp"

#include "smasp/format.hpp"

#include <json.hpp>

namespace smasp {

using nlohmann::json;

namespace {

json step_record(const TraceStep& s) {
    const auto& t = s.transition;
    json j{{"index", s.index}, {"rule", rule_name(t.rule)}};
    if (t.literal) {
        j["literal"] = to_string(*t.literal);
    }
    if (t.clause) {
        auto& c = j["clause"] = json::array();
        for (const auto& l : *t.clause) c.push_back(to_string(l));
    }
    if (!t.witness.empty()) {
        auto& w = j["witness"] = json::array();
        for (const auto& a : t.witness) w.push_back(a.name());
    }
    if (t.rule == RuleKind::backjump) {
        j["prefix"] = t.prefix_length;
    }
    j["digest"] = s.digest;
    return j;
}

TraceStep parse_step(const json& j) {
    TraceStep s;
    s.index = j.at("index").get<std::size_t>();
    auto name = j.at("rule").get<std::string>();
    auto rule = parse_rule_name(name);
    if (!rule) throw ParseError("unknown rule '" + name + "'");
    s.transition.rule = *rule;
    if (j.contains("literal")) {
        s.transition.literal = parse_literal(j["literal"].get<std::string>());
    }
    if (j.contains("clause")) {
        std::vector<Literal> lits;
        for (const auto& l : j["clause"]) lits.push_back(parse_literal(l.get<std::string>()));
        s.transition.clause = Clause(std::move(lits));
    }
    if (j.contains("witness")) {
        for (const auto& a : j["witness"]) s.transition.witness.insert(parse_atom(a.get<std::string>()));
    }
    s.transition.prefix_length = j.value("prefix", std::size_t{0});
    s.digest = j.at("digest").get<std::string>();
    return s;
}

} // namespace

std::string theory_digest(const SmaspTheory& t) { return text_digest(print_smasp(t)); }

std::string write_trace(const TraceFile& trace) {
    const auto& h = trace.header;
    std::string out = json{{"mode", h.mode}, {"format", h.format}, {"input_digest", h.input_digest},
                           {"version", h.version}}
                          .dump() +
                      "\n";
    for (const auto& s : trace.steps) {
        out += step_record(s).dump() + "\n";
    }
    return out;
}

TraceFile read_trace(std::string_view text) {
    TraceFile out;
    bool header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            auto j = json::parse(line);
            if (!header) {
                out.header = TraceHeader{j.at("mode").get<std::string>(), j.at("format").get<std::string>(),
                                         j.at("input_digest").get<std::string>(), j.at("version").get<std::string>()};
                header = true;
            } else {
                out.steps.push_back(parse_step(j));
            }
        } catch (const json::exception& e) {
            throw ParseError("trace line " + std::to_string(line_no) + ": " + e.what());
        } catch (const Error& e) {
            throw ParseError("trace line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header) throw ParseError("trace has no header record");
    return out;
}

TraceCheck validate_trace(const TraceFile& trace, const SmaspTheory& t, const Strategy& strategy, bool strict) {
    if (trace.header.input_digest != theory_digest(t)) {
        return {false, 0, "header digest does not match the input theory"};
    }
    if (trace.header.mode != mode_name(strategy.mode)) {
        return {false, 0, "trace was produced in mode '" + trace.header.mode + "'"};
    }
    Engine engine(t, strategy);
    std::vector<TraceStep> expected;
    if (strict) {
        RunLimits limits;
        limits.max_steps = trace.steps.size();
        limits.self_check_atoms = 0;
        expected = engine.run(limits).trace;
    }
    AugmentedState state;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        const std::size_t n = i + 1;
        if (s.index != n) {
            return {false, n, "step index " + std::to_string(s.index) + " breaks the numbering"};
        }
        Transition full;
        try {
            full = engine.complete(state, s.transition);
        } catch (const Error& e) {
            return {false, n, e.what()};
        }
        if (strict && (i >= expected.size() || expected[i].transition != full)) {
            return {false, n,
                    i >= expected.size() ? "the strategy halts before this step"
                                         : "the strategy selects " + to_string(expected[i].transition)};
        }
        state = engine.step(state, full);
        if (state_digest(state) != s.digest) {
            return {false, n, "state digest mismatch"};
        }
    }
    return {};
}

} // namespace smasp
