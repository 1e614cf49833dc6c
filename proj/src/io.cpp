#include "mcs/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcs {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void dump_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

std::vector<std::pair<int, int>> parse_edges_field(const ordered_json& j, const std::string& path) {
    std::vector<std::pair<int, int>> edges;
    if (!j.is_array()) throw Error(ErrorCode::ParseError, path + ": \"edges\" must be an array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error(ErrorCode::ParseError, path + ": each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

} // namespace

ColoredGraph parse_instance(const std::string& path) {
    ordered_json j = load_json(path);
    if (!j.is_object() || !j.contains("colors") || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, path + ": expected {\"colors\":[...],\"edges\":[...]}");
    if (!j["colors"].is_array())
        throw Error(ErrorCode::ParseError, path + ": \"colors\" must be an array");
    std::vector<int> colors;
    for (const auto& c : j["colors"]) {
        if (!c.is_number_integer())
            throw Error(ErrorCode::ParseError, path + ": colors must be integers");
        colors.push_back(c.get<int>());
    }
    return build_graph(colors, parse_edges_field(j["edges"], path));
}

void write_instance(const std::string& path, const ColoredGraph& g) {
    ordered_json j;
    j["colors"] = g.colors;
    auto edges = ordered_json::array();
    for (int v = 0; v < g.vertex_count; ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.push_back({v, w});
    j["edges"] = std::move(edges);
    dump_json(path, j);
}

VertexSubset parse_subset(const std::string& path) {
    ordered_json j = load_json(path);
    if (!j.is_object() || !j.contains("subset") || !j["subset"].is_array())
        throw Error(ErrorCode::ParseError, path + ": expected {\"subset\":[...]}");
    VertexSubset s;
    for (const auto& v : j["subset"]) {
        if (!v.is_number_integer())
            throw Error(ErrorCode::ParseError, path + ": subset members must be integers");
        s.push_back(v.get<int>());
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void write_subset(const std::string& path, const VertexSubset& s) {
    ordered_json j;
    j["subset"] = s;
    dump_json(path, j);
}

IntervalFamily parse_intervals(const std::string& path) {
    ordered_json j = load_json(path);
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
        throw Error(ErrorCode::ParseError, path + ": expected {\"intervals\":[...]}");
    IntervalFamily f;
    int max_color = -1;
    for (const auto& e : j["intervals"]) {
        if (!e.is_object() || !e.contains("lo") || !e.contains("hi") || !e.contains("color"))
            throw Error(ErrorCode::ParseError,
                        path + ": each interval needs \"lo\", \"hi\" and \"color\"");
        Interval iv{e["lo"].get<int64_t>(), e["hi"].get<int64_t>(), e["color"].get<int>()};
        if (iv.lo > iv.hi)
            throw Error(ErrorCode::ParseError, path + ": interval with lo > hi");
        max_color = std::max(max_color, iv.color);
        f.intervals.push_back(iv);
    }
    f.color_count = max_color + 1;
    return f;
}

void write_intervals(const std::string& path, const IntervalFamily& f) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& iv : f.intervals) {
        ordered_json e;
        e["lo"] = iv.lo;
        e["hi"] = iv.hi;
        e["color"] = iv.color;
        arr.push_back(std::move(e));
    }
    j["intervals"] = std::move(arr);
    dump_json(path, j);
}

Max2SatInstance parse_dimacs_2cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    Max2SatInstance f;
    int declared_clauses = -1;
    bool header_seen = false;
    std::vector<int> pending;
    std::string token;
    // token stream: comments run to end of line, clauses are 0-terminated
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && (line[0] == 'c' || line[0] == '%')) continue;
        std::istringstream ls(line);
        std::string word;
        while (ls >> word) {
            if (word == "p") {
                std::string fmt;
                if (header_seen || !(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                    throw Error(ErrorCode::ParseError, path + ": malformed problem line");
                header_seen = true;
                continue;
            }
            int lit;
            try {
                lit = std::stoi(word);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, path + ": unexpected token \"" + word + "\"");
            }
            if (!header_seen)
                throw Error(ErrorCode::ParseError, path + ": literal before problem line");
            if (lit == 0) {
                if (pending.size() != 2)
                    throw Error(ErrorCode::NotTwoCnf,
                                path + ": clause of width " + std::to_string(pending.size()));
                f.clauses.emplace_back(pending[0], pending[1]);
                pending.clear();
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw Error(ErrorCode::ParseError,
                                path + ": literal " + word + " out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!header_seen) throw Error(ErrorCode::ParseError, path + ": missing problem line");
    if (!pending.empty())
        throw Error(ErrorCode::NotTwoCnf, path + ": unterminated clause of width " +
                                              std::to_string(pending.size()));
    if (declared_clauses != f.clause_count())
        throw Error(ErrorCode::ParseError,
                    path + ": header declares " + std::to_string(declared_clauses) +
                        " clauses, file has " + std::to_string(f.clause_count()));
    return f;
}

std::pair<int, std::vector<std::pair<int, int>>> parse_edge_list(const std::string& path) {
    ordered_json j = load_json(path);
    if (!j.is_object() || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, path + ": expected {\"edges\":[...]}");
    auto edges = parse_edges_field(j["edges"], path);
    int n = 0;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer())
            throw Error(ErrorCode::ParseError, path + ": \"n\" must be an integer");
        n = j["n"].get<int>();
    } else {
        for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    }
    return {n, std::move(edges)};
}

std::string solve_result_to_json(const SolveResult& r, const std::string& algorithm) {
    ordered_json j;
    j["size"] = r.size;
    j["subset"] = r.subset;
    j["algorithm"] = algorithm;
    // Counters only: output files stay byte-identical across runs.
    ordered_json stats;
    stats["subsets_examined"] = r.stats.subsets_examined;
    stats["dp_evaluations"] = r.stats.dp_evaluations;
    j["stats"] = std::move(stats);
    return j.dump(2) + "\n";
}

void write_solve_result(const std::string& path, const SolveResult& r,
                        const std::string& algorithm) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << solve_result_to_json(r, algorithm);
    if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

void write_tree_roles(const std::string& path, const TreeReductionArtifact& art) {
    ordered_json j;
    j["reduction"] = "max2sat-to-tree";
    j["num_vars"] = art.num_vars();
    j["num_clauses"] = art.num_clauses();
    j["stabilizers"] = art.stabilizer_count;
    j["desk_scale"] = art.desk_scale;
    j["vertex_roles"] = art.vertex_roles;
    j["color_roles"] = art.color_roles;
    dump_json(path, j);
}

void write_interval_roles(const std::string& path, const IntervalReductionArtifact& art) {
    ordered_json j;
    j["reduction"] = "vertex-cover-to-intervals";
    j["source_n"] = art.source_n;
    j["source_m"] = art.source_m;
    auto edges = ordered_json::array();
    for (auto [a, b] : art.source_edges) edges.push_back({a, b});
    j["source_edges"] = std::move(edges);
    j["p2"] = art.p2;
    j["p3"] = art.p3;
    j["interval_roles"] = art.interval_roles;
    dump_json(path, j);
}

} // namespace mcs
