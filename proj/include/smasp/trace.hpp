// JSON-lines traces: a header record followed by one record per transition.
#pragma once

#include "smasp/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace smasp {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct TraceHeader {
    std::string mode;
    std::string format;
    std::string input_digest;
    std::string version{kToolVersion};

    friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

struct TraceFile {
    TraceHeader header;
    std::vector<TraceStep> steps;

    friend bool operator==(const TraceFile&, const TraceFile&) = default;
};

// Order-sensitive hash of the clauses and rules of a theory.
std::string theory_digest(const SmaspTheory& t);

std::string write_trace(const TraceFile& trace);
TraceFile read_trace(std::string_view text); // throws ParseError

struct TraceCheck {
    bool valid = true;
    std::size_t step = 0; // 1-based index of the offending step, 0 for the header
    std::string reason;
};

// Replays the steps from the empty state. Each step must be an edge of the
// strategy's graph; with `strict` it must also be the edge the strategy picks.
TraceCheck validate_trace(const TraceFile& trace, const SmaspTheory& t, const Strategy& strategy,
                          bool strict = false);

} // namespace smasp
