// Command-line front-end for the MCS solver toolkit.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcs/brute_force.hpp"
#include "mcs/colored_graph.hpp"
#include "mcs/io.hpp"
#include "mcs/random_tree.hpp"
#include "mcs/reductions.hpp"
#include "mcs/tree_solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidInstance = 3;
constexpr int kExitResourceCap = 4;

int exit_code_for(mcs::ErrorCode code) {
    switch (code) {
        case mcs::ErrorCode::IoError:
        case mcs::ErrorCode::ParseError:
        case mcs::ErrorCode::NotTwoCnf:
            return kExitParse;
        case mcs::ErrorCode::InstanceTooLarge:
        case mcs::ErrorCode::BudgetExhausted:
        case mcs::ErrorCode::ColorCapExceeded:
            return kExitResourceCap;
        default:
            return kExitInvalidInstance;
    }
}

int color_cap_from_env() {
    const char* raw = std::getenv("MCS_COLOR_CAP");
    if (!raw) return mcs::kDefaultColorCap;
    char* end = nullptr;
    long cap = std::strtol(raw, &end, 10);
    if (!end || *end != '\0' || cap < 1 || cap > mcs::kColorSetWidth)
        throw mcs::Error(mcs::ErrorCode::ParseError,
                         std::string("MCS_COLOR_CAP must be an integer in [1,") +
                             std::to_string(mcs::kColorSetWidth) + "], got \"" + raw + "\"");
    return static_cast<int>(cap);
}

bool is_tree(const mcs::ColoredGraph& g) {
    size_t degree_sum = 0;
    for (const auto& nbrs : g.adjacency) degree_sum += nbrs.size();
    return degree_sum == 2 * static_cast<size_t>(g.vertex_count - 1);
}

struct SolveArgs {
    std::string input;
    std::string output;
    std::string algorithm = "auto";
    int root = 0;
    int brute_cap = 22;
    std::optional<uint64_t> budget;
};

int run_solve(const SolveArgs& args) {
    mcs::ColoredGraph g = mcs::parse_instance(args.input);
    const int color_cap = color_cap_from_env();

    std::string algorithm = args.algorithm;
    if (algorithm == "auto")
        algorithm = is_tree(g) && g.color_count <= color_cap ? "tree-dp" : "brute";

    mcs::SolveResult result;
    if (algorithm == "tree-dp") {
        mcs::RootedTree t = mcs::root_tree(g, args.root);
        result = mcs::solve_tree_mcs(t, color_cap);
    } else {
        mcs::BruteForceOptions opts;
        opts.vertex_cap = args.brute_cap;
        opts.budget = args.budget;
        result = mcs::mcs_brute_force(g, opts);
    }

    std::string payload = mcs::solve_result_to_json(result, algorithm);
    if (args.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out) throw mcs::Error(mcs::ErrorCode::IoError, "cannot open " + args.output);
        out << payload;
    }
    std::cerr << "solved with " << algorithm << " in " << result.stats.elapsed.count() << " s\n";
    return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& subset_path) {
    mcs::ColoredGraph g = mcs::parse_instance(instance_path);
    mcs::VertexSubset s = mcs::parse_subset(subset_path);
    auto violator = mcs::first_inconsistent_vertex(g, s);
    if (violator) {
        std::cout << "inconsistent: vertex " << *violator << "\n";
        return kExitInconsistent;
    }
    std::cout << "consistent\n";
    return kExitOk;
}

int run_reduce_max2sat(const std::string& input, const std::string& prefix,
                       std::optional<int64_t> stabilizers) {
    mcs::Max2SatInstance f = mcs::parse_dimacs_2cnf(input);
    mcs::TreeReductionArtifact art = mcs::max2sat_to_tree(f, stabilizers);
    mcs::write_instance(prefix + ".instance.json", art.tree);
    mcs::write_tree_roles(prefix + ".roles.json", art);
    std::cerr << "wrote " << prefix << ".instance.json (" << art.tree.vertex_count
              << " vertices, " << art.tree.color_count << " colors) and " << prefix
              << ".roles.json\n";
    return kExitOk;
}

int run_reduce_vertex_cover(const std::string& input, const std::string& prefix,
                            std::optional<int64_t> p2, std::optional<int64_t> p3) {
    auto [n, edges] = mcs::parse_edge_list(input);
    mcs::IntervalReductionArtifact art = mcs::vertex_cover_to_intervals(n, edges, p2, p3);
    mcs::write_intervals(prefix + ".intervals.json", art.family);
    mcs::ColoredGraph g = mcs::intervals_to_graph(art.family);
    mcs::write_instance(prefix + ".instance.json", g);
    mcs::write_interval_roles(prefix + ".roles.json", art);
    std::cerr << "wrote " << prefix << ".intervals.json, " << prefix << ".instance.json ("
              << g.vertex_count << " vertices) and " << prefix << ".roles.json\n";
    return kExitOk;
}

int run_gen_random_tree(int n, int colors, uint64_t seed, const std::string& output) {
    mcs::ColoredGraph g = mcs::gen_random_tree(n, colors, seed);
    mcs::write_instance(output, g);
    std::cerr << "wrote " << output << " (" << g.vertex_count << " vertices, " << g.color_count
              << " colors)\n";
    return kExitOk;
}

int run_bench(const std::vector<int>& sizes, int colors, const std::vector<uint64_t>& seeds,
              const std::string& algorithm, const std::string& output, int brute_cap) {
    const int color_cap = color_cap_from_env();
    std::ofstream out(output, std::ios::binary);
    if (!out) throw mcs::Error(mcs::ErrorCode::IoError, "cannot open " + output);
    out << "n,c,algorithm,millis,dp_evaluations\n";
    for (int n : sizes) {
        for (uint64_t seed : seeds) {
            mcs::ColoredGraph g = mcs::gen_random_tree(n, colors, seed);
            std::vector<std::string> algos;
            if (algorithm == "both") {
                algos = {"tree-dp", "brute"};
            } else {
                algos = {algorithm};
            }
            for (const std::string& algo : algos) {
                mcs::SolveResult r;
                if (algo == "tree-dp") {
                    mcs::RootedTree t = mcs::root_tree(g, 0);
                    r = mcs::solve_tree_mcs(t, color_cap);
                } else {
                    mcs::BruteForceOptions opts;
                    opts.vertex_cap = brute_cap;
                    r = mcs::mcs_brute_force(g, opts);
                }
                out << n << ',' << g.color_count << ',' << algo << ','
                    << r.stats.elapsed.count() * 1000.0 << ',' << r.stats.dp_evaluations << '\n';
            }
        }
    }
    std::cerr << "wrote " << output << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum consistent subset toolkit for vertex-colored graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    uint64_t budget_value = 0;
    auto* solve = app.add_subcommand("solve", "Compute a minimum consistent subset");
    solve->add_option("--input", solve_args.input, "instance JSON")->required();
    solve->add_option("--output", solve_args.output, "result JSON (stdout when omitted)");
    solve->add_option("--algorithm", solve_args.algorithm, "auto | tree-dp | brute")
        ->check(CLI::IsMember({"auto", "tree-dp", "brute"}));
    solve->add_option("--root", solve_args.root, "root vertex for tree-dp");
    solve->add_option("--brute-cap", solve_args.brute_cap, "vertex cap for brute force");
    auto* budget_opt = solve->add_option("--budget", budget_value, "subset-examination budget");

    std::string verify_instance, verify_subset;
    auto* verify = app.add_subcommand("verify", "Check a subset for consistency");
    verify->add_option("--input", verify_instance, "instance JSON")->required();
    verify->add_option("--subset", verify_subset, "subset JSON")->required();

    std::string r2_input, r2_prefix;
    int64_t r2_m = -1;
    auto* reduce2sat = app.add_subcommand("reduce-max2sat", "MAX-2SAT formula to colored tree");
    reduce2sat->add_option("--input", r2_input, "DIMACS 2-CNF file")->required();
    reduce2sat->add_option("--output-prefix", r2_prefix, "prefix for emitted files")->required();
    auto* r2_m_opt = reduce2sat->add_option("--stabilizers", r2_m, "stabilizer pairs per variable");

    std::string rvc_input, rvc_prefix;
    int64_t rvc_p2 = -1, rvc_p3 = -1;
    auto* reduce_vc = app.add_subcommand("reduce-vertex-cover", "Cubic graph to interval family");
    reduce_vc->add_option("--input", rvc_input, "edge-list JSON")->required();
    reduce_vc->add_option("--output-prefix", rvc_prefix, "prefix for emitted files")->required();
    auto* p2_opt = reduce_vc->add_option("--p2", rvc_p2, "small intervals per gadget");
    auto* p3_opt = reduce_vc->add_option("--p3", rvc_p3, "small intervals per gap");

    int gen_n = 0, gen_c = 0;
    uint64_t gen_seed = 0;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen-random-tree", "Seed-deterministic random colored tree");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--colors", gen_c, "color count before compaction")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--output", gen_output, "instance JSON")->required();

    std::vector<int> bench_sizes{25, 50, 100, 200};
    int bench_colors = 2;
    std::vector<uint64_t> bench_seeds{1};
    std::string bench_algorithm = "tree-dp";
    std::string bench_output = "bench.csv";
    int bench_brute_cap = 22;
    auto* bench = app.add_subcommand("bench", "Timing sweep over random trees");
    bench->add_option("--sizes", bench_sizes, "tree sizes")->delimiter(',');
    bench->add_option("--colors", bench_colors, "color count");
    bench->add_option("--seeds", bench_seeds, "seeds, one tree each")->delimiter(',');
    bench->add_option("--algorithm", bench_algorithm, "tree-dp | brute | both")
        ->check(CLI::IsMember({"tree-dp", "brute", "both"}));
    bench->add_option("--output", bench_output, "CSV path");
    bench->add_option("--brute-cap", bench_brute_cap, "vertex cap for brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (solve->parsed()) {
            if (budget_opt->count() > 0) solve_args.budget = budget_value;
            return run_solve(solve_args);
        }
        if (verify->parsed()) return run_verify(verify_instance, verify_subset);
        if (reduce2sat->parsed())
            return run_reduce_max2sat(
                r2_input, r2_prefix,
                r2_m_opt->count() > 0 ? std::optional<int64_t>(r2_m) : std::nullopt);
        if (reduce_vc->parsed())
            return run_reduce_vertex_cover(
                rvc_input, rvc_prefix,
                p2_opt->count() > 0 ? std::optional<int64_t>(rvc_p2) : std::nullopt,
                p3_opt->count() > 0 ? std::optional<int64_t>(rvc_p3) : std::nullopt);
        if (gen->parsed()) return run_gen_random_tree(gen_n, gen_c, gen_seed, gen_output);
        if (bench->parsed())
            return run_bench(bench_sizes, bench_colors, bench_seeds, bench_algorithm, bench_output,
                             bench_brute_cap);
    } catch (const mcs::Error& e) {
        std::cerr << "error [" << mcs::error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInstance;
    }
    return kExitParse;
}
