#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "winhull/chain_engine.hpp"
#include "winhull/geom.hpp"

namespace winhull {

// One line of a trace file.
struct TraceCommand {
    enum Kind { kInsert, kDelete, kHull, kQuery };
    enum Query { kExtreme, kStab, kTangents, kLineInt, kContains, kRange };
    Kind kind = kInsert;
    Query query = kExtreme;
    std::int64_t args[3] = {0, 0, 0};
};

struct TraceParseError {
    int line;
    std::string message;
};

// Parses the trace grammar: one command per line, '#' comments, blank lines
// ignored. Throws TraceParseError naming the first bad line.
std::vector<TraceCommand> parse_trace(std::istream& in);
std::vector<TraceCommand> parse_trace_text(const std::string& text);

struct RunOptions {
    bool verify = false;
    bool stats = false;
    bool json = false;
};

struct RunReport {
    std::vector<std::string> lines;   // one per H/Q command plus error lines
    bool verify_failed = false;
    std::uint64_t commands = 0;
    std::uint64_t errors = 0;
    ProcedureStats final_stats;
    std::string render_text() const;
    std::string render_json() const;
};

RunReport run_trace(const std::vector<TraceCommand>& cmds, const RunOptions& opts);

// Seeded trace generators; names: uniform-y, convex-position, zigzag,
// random-walk.
bool known_generator(const std::string& name);
std::vector<TraceCommand> generate_trace(const std::string& generator, std::uint64_t updates,
                                         std::uint64_t window, std::uint64_t seed);

struct BenchRow {
    std::uint64_t n;
    std::string generator;
    std::uint64_t window;
    std::uint64_t total_steps;
    double steps_per_update;
    std::uint64_t max_h;
    std::uint64_t wall_ns_per_update;
};

BenchRow bench_one(const std::string& generator, std::uint64_t n, std::uint64_t window,
                   std::uint64_t seed);
std::string bench_csv(const std::vector<BenchRow>& rows, bool include_wall);

}  // namespace winhull
