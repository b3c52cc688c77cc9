#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "winhull/trace.hpp"

using namespace winhull;

int main(int argc, char** argv) {
    CLI::App app{"sliding-window convex hull driver"};
    app.require_subcommand(1);

    std::string trace_file;
    bool verify = false, stats = false, json = false;
    CLI::App* run = app.add_subcommand("run", "replay a trace file");
    run->add_option("file", trace_file, "trace file")->required();
    run->add_flag("--verify", verify, "cross-check every step against the reference scan");
    run->add_flag("--stats", stats, "append step counters to the report");
    run->add_flag("--json", json, "emit one JSON document instead of text lines");

    std::vector<std::uint64_t> sizes;
    std::string gen = "uniform-y", out_file;
    std::uint64_t seed = 1, window = 0;
    bool wall = false;
    CLI::App* bench = app.add_subcommand("bench", "run seeded sliding-window benchmarks");
    bench->add_option("--sizes", sizes, "update counts to run")->required()->delimiter(',');
    bench->add_option("--gen", gen, "generator: uniform-y|convex-position|zigzag|random-walk");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--window", window, "window size (default: n/16, at least 4)");
    bench->add_option("--out", out_file, "write CSV here instead of stdout");
    bench->add_flag("--wall", wall, "include wall-clock column (not byte-reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            std::ifstream in(trace_file);
            if (!in) {
                std::cerr << "cannot open " << trace_file << "\n";
                return 2;
            }
            std::vector<TraceCommand> cmds;
            try {
                cmds = parse_trace(in);
            } catch (const TraceParseError& e) {
                std::cerr << "line " << e.line << ": " << e.message << "\n";
                return 2;
            }
            RunOptions opts{verify, stats, json};
            auto t0 = std::chrono::steady_clock::now();
            RunReport rep = run_trace(cmds, opts);
            auto t1 = std::chrono::steady_clock::now();
            if (json) {
                std::cout << rep.render_json();
            } else {
                std::cout << rep.render_text();
                if (stats) {
                    const char* names[] = {"insertion_tangent", "deletion_tangent",
                                           "left_hull_construction", "right_hull_update",
                                           "tree_update"};
                    for (int i = 0; i < kProcCount; ++i)
                        std::cout << "stats " << names[i] << " steps " << rep.final_stats.steps[i]
                                  << " involved " << rep.final_stats.involvements[i]
                                  << " violations " << rep.final_stats.involvement_violations[i]
                                  << "\n";
                    std::cout << "stats updates " << rep.final_stats.updates << "\n";
                }
            }
            std::cerr << "wall_ns "
                      << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()
                      << "\n";
            return rep.verify_failed ? 1 : 0;
        }

        std::vector<BenchRow> rows;
        for (std::uint64_t n : sizes) {
            if (n == 0) {
                std::cerr << "size must be positive\n";
                return 2;
            }
            std::uint64_t w = window ? window : std::max<std::uint64_t>(4, n / 16);
            rows.push_back(bench_one(gen, n, w, seed));
        }
        std::string csv = bench_csv(rows, wall);
        if (out_file.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_file);
            out << csv;
        }
        return 0;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
