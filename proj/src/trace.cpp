#include "winhull/trace.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <sstream>

#include "winhull/hull_window.hpp"
#include "winhull/oracle.hpp"
#include "winhull/prng.hpp"
#include "winhull/queries.hpp"

#include "json.hpp"

namespace winhull {

namespace {

bool parse_i64(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

std::vector<TraceCommand> parse_trace(std::istream& in) {
    std::vector<TraceCommand> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        auto fail = [&](const std::string& msg) { throw TraceParseError{lineno, msg}; };
        auto need_args = [&](std::size_t from, std::size_t count, TraceCommand& c) {
            if (toks.size() != from + count) fail("wrong argument count");
            for (std::size_t i = 0; i < count; ++i)
                if (!parse_i64(toks[from + i], c.args[i])) fail("bad integer '" + toks[from + i] + "'");
        };
        TraceCommand c;
        if (toks[0] == "I") {
            c.kind = TraceCommand::kInsert;
            need_args(1, 2, c);
        } else if (toks[0] == "D") {
            c.kind = TraceCommand::kDelete;
            if (toks.size() != 1) fail("D takes no arguments");
        } else if (toks[0] == "H") {
            c.kind = TraceCommand::kHull;
            if (toks.size() != 1) fail("H takes no arguments");
        } else if (toks[0] == "Q") {
            c.kind = TraceCommand::kQuery;
            if (toks.size() < 2) fail("Q needs a query kind");
            const std::string& q = toks[1];
            if (q == "extreme") {
                c.query = TraceCommand::kExtreme;
                need_args(2, 2, c);
            } else if (q == "stab") {
                c.query = TraceCommand::kStab;
                need_args(2, 3, c);
            } else if (q == "tangents") {
                c.query = TraceCommand::kTangents;
                need_args(2, 2, c);
            } else if (q == "lineint") {
                c.query = TraceCommand::kLineInt;
                need_args(2, 3, c);
            } else if (q == "contains") {
                c.query = TraceCommand::kContains;
                need_args(2, 2, c);
            } else if (q == "range") {
                c.query = TraceCommand::kRange;
                need_args(2, 2, c);
            } else {
                fail("unknown query kind '" + q + "'");
            }
        } else {
            fail("unknown command '" + toks[0] + "'");
        }
        out.push_back(c);
    }
    return out;
}

std::vector<TraceCommand> parse_trace_text(const std::string& text) {
    std::istringstream in(text);
    return parse_trace(in);
}

namespace {

std::string point_str(Point p) {
    return std::to_string(p.x) + " " + std::to_string(p.y);
}

std::string points_str(const std::vector<Point>& pts) {
    std::string s = std::to_string(pts.size());
    for (const Point& p : pts) s += " " + point_str(p);
    return s;
}

std::string crossing_str(const Crossing& c) {
    if (c.is_vertex) return "vertex " + point_str(c.a);
    return "edge " + point_str(c.a) + " " + point_str(c.b);
}

const char* proc_name(int i) {
    switch (Proc(i)) {
        case Proc::kInsertionTangent: return "insertion_tangent";
        case Proc::kDeletionTangent: return "deletion_tangent";
        case Proc::kLeftHullConstruction: return "left_hull_construction";
        case Proc::kRightHullUpdate: return "right_hull_update";
        case Proc::kTreeUpdate: return "tree_update";
    }
    return "?";
}

}  // namespace

RunReport run_trace(const std::vector<TraceCommand>& cmds, const RunOptions& opts) {
    RunReport rep;
    HullWindow w;
    std::vector<Point> mirror;  // live window for the oracle

    auto oracle_ccw = [&]() { return oracle::static_hull(mirror); };
    auto emit = [&](const std::string& s) { rep.lines.push_back(s); };
    auto mismatch = [&](const std::string& what) {
        rep.verify_failed = true;
        emit("mismatch " + what);
    };

    for (const TraceCommand& c : cmds) {
        ++rep.commands;
        try {
            switch (c.kind) {
                case TraceCommand::kInsert: {
                    Point p{c.args[0], c.args[1]};
                    w.push_right(p);
                    mirror.push_back(p);
                    break;
                }
                case TraceCommand::kDelete: {
                    w.pop_left();
                    mirror.erase(mirror.begin());
                    break;
                }
                case TraceCommand::kHull: {
                    HullSnapshot snap = w.hull();
                    emit("hull " + points_str(snap.vertices));
                    if (opts.verify && snap.vertices != oracle_ccw()) mismatch("hull");
                    break;
                }
                case TraceCommand::kQuery: {
                    switch (c.query) {
                        case TraceCommand::kExtreme: {
                            Direction d{c.args[0], c.args[1]};
                            Point p = queries::extreme(w, d);
                            emit("extreme " + point_str(p));
                            if (opts.verify && p != oracle::extreme(oracle_ccw(), d))
                                mismatch("extreme");
                            break;
                        }
                        case TraceCommand::kStab: {
                            LineEq l{c.args[0], c.args[1], c.args[2]};
                            bool b = queries::stab_line(w, l);
                            emit(std::string("stab ") + (b ? "true" : "false"));
                            if (opts.verify && b != oracle::stab_line(oracle_ccw(), l))
                                mismatch("stab");
                            break;
                        }
                        case TraceCommand::kTangents: {
                            Point q{c.args[0], c.args[1]};
                            TangentPair tp = queries::tangents_from(w, q);
                            emit("tangents " + point_str(tp.left_touch) + " " +
                                 point_str(tp.right_touch));
                            if (opts.verify && !(tp == oracle::tangents_from(oracle_ccw(), q)))
                                mismatch("tangents");
                            break;
                        }
                        case TraceCommand::kLineInt: {
                            LineEq l{c.args[0], c.args[1], c.args[2]};
                            LineHullIntersection li = queries::line_intersection(w, l);
                            std::string s = "lineint";
                            if (li.empty()) s += " none";
                            for (const Crossing& cr : li.crossings) s += " " + crossing_str(cr);
                            emit(s);
                            if (opts.verify && !(li == oracle::line_intersection(oracle_ccw(), l)))
                                mismatch("lineint");
                            break;
                        }
                        case TraceCommand::kContains: {
                            Point q{c.args[0], c.args[1]};
                            Containment ct = queries::contains(w, q);
                            const char* names[] = {"inside", "boundary", "outside"};
                            emit(std::string("contains ") + names[int(ct)]);
                            if (opts.verify && ct != oracle::contains(oracle_ccw(), q))
                                mismatch("contains");
                            break;
                        }
                        case TraceCommand::kRange: {
                            auto pts = queries::range_report(w, c.args[0], c.args[1]);
                            emit("range " + points_str(pts));
                            if (opts.verify &&
                                pts != oracle::range_report(oracle_ccw(), c.args[0], c.args[1]))
                                mismatch("range");
                            break;
                        }
                    }
                    break;
                }
            }
        } catch (const ContractViolation& e) {
            ++rep.errors;
            emit(std::string("error ") + e.what());
        }
        if (opts.verify && c.kind != TraceCommand::kQuery && c.kind != TraceCommand::kHull) {
            if (w.hull().vertices != oracle_ccw()) mismatch("hull after update");
        }
    }
    rep.final_stats = w.stats();
    return rep;
}

std::string RunReport::render_text() const {
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    return out;
}

std::string RunReport::render_json() const {
    nlohmann::json j;
    j["lines"] = lines;
    j["commands"] = commands;
    j["errors"] = errors;
    j["verify_failed"] = verify_failed;
    nlohmann::json st;
    for (int i = 0; i < kProcCount; ++i) {
        st[proc_name(i)] = {{"steps", final_stats.steps[i]},
                            {"involvements", final_stats.involvements[i]},
                            {"violations", final_stats.involvement_violations[i]}};
    }
    st["updates"] = final_stats.updates;
    j["stats"] = st;
    return j.dump(2) + "\n";
}

bool known_generator(const std::string& name) {
    return name == "uniform-y" || name == "convex-position" || name == "zigzag" ||
           name == "random-walk";
}

namespace {

struct PointGen {
    std::string kind;
    SplitMix64 rng;
    std::int64_t x = 0;
    std::int64_t walk_y = 0;
    std::uint64_t i = 0;

    PointGen(const std::string& k, std::uint64_t seed) : kind(k), rng(seed) {}

    Point next() {
        x += 1 + std::int64_t(rng.below(3));
        ++i;
        std::int64_t y;
        if (kind == "uniform-y") {
            y = rng.range(-1000000, 1000000);
        } else if (kind == "convex-position") {
            y = -(x * x);  // all window points stay on their upper hull
        } else if (kind == "zigzag") {
            y = (i % 2 ? 1000000 : -1000000) + rng.range(-1000, 1000);
        } else {  // random-walk
            walk_y += rng.range(-1000, 1000);
            y = walk_y;
        }
        return Point{x, y};
    }
};

}  // namespace

std::vector<TraceCommand> generate_trace(const std::string& generator, std::uint64_t updates,
                                         std::uint64_t window, std::uint64_t seed) {
    if (!known_generator(generator)) throw ContractViolation("unknown generator '" + generator + "'");
    if (window < 2) window = 2;
    PointGen gen(generator, seed);
    std::vector<TraceCommand> cmds;
    cmds.reserve(updates);
    // fill to the window size, then slide: pop, push, pop, push, ...
    std::uint64_t live = 0;
    for (std::uint64_t u = 0; u < updates; ++u) {
        bool push = live < window;
        TraceCommand c;
        if (push) {
            Point p = gen.next();
            c.kind = TraceCommand::kInsert;
            c.args[0] = p.x;
            c.args[1] = p.y;
            ++live;
        } else {
            c.kind = TraceCommand::kDelete;
            --live;
        }
        cmds.push_back(c);
    }
    return cmds;
}

BenchRow bench_one(const std::string& generator, std::uint64_t n, std::uint64_t window,
                   std::uint64_t seed) {
    auto cmds = generate_trace(generator, n, window, seed);
    HullWindow w;
    std::uint64_t max_h = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const TraceCommand& c : cmds) {
        if (c.kind == TraceCommand::kInsert)
            w.push_right(Point{c.args[0], c.args[1]});
        else
            w.pop_left();
        max_h = std::max<std::uint64_t>(max_h, w.hull_vertex_count());
    }
    auto t1 = std::chrono::steady_clock::now();
    ProcedureStats st = w.stats();
    BenchRow row;
    row.n = n;
    row.generator = generator;
    row.window = window;
    row.total_steps = st.total_steps();
    row.steps_per_update = double(st.total_steps()) / double(n);
    row.max_h = max_h;
    row.wall_ns_per_update =
        std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()) / n;
    return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool include_wall) {
    std::string out = "n,generator,window,total_steps,steps_per_update,max_h";
    if (include_wall) out += ",wall_ns_per_update";
    out += "\n";
    char buf[64];
    for (const BenchRow& r : rows) {
        out += std::to_string(r.n) + "," + r.generator + "," + std::to_string(r.window) + "," +
               std::to_string(r.total_steps) + ",";
        std::snprintf(buf, sizeof buf, "%.4f", r.steps_per_update);
        out += buf;
        out += "," + std::to_string(r.max_h);
        if (include_wall) out += "," + std::to_string(r.wall_ns_per_update);
        out += "\n";
    }
    return out;
}

}  // namespace winhull
