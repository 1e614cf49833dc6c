#include "mcs/colored_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace mcs {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ColorGap: return "ColorGap";
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::ColorCapExceeded: return "ColorCapExceeded";
        case ErrorCode::NonCanonicalKey: return "NonCanonicalKey";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::MTooSmall: return "MTooSmall";
        case ErrorCode::BadAssignmentLength: return "BadAssignmentLength";
        case ErrorCode::MalformedSolution: return "MalformedSolution";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::NotACover: return "NotACover";
        case ErrorCode::ContainsUniversalInterval: return "ContainsUniversalInterval";
        case ErrorCode::PartialGadget: return "PartialGadget";
        case ErrorCode::NotACoverAfterDecode: return "NotACoverAfterDecode";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotTwoCnf: return "NotTwoCnf";
    }
    return "UnknownError";
}

ColoredGraph build_graph(const std::vector<int>& vertex_colors,
                         const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(vertex_colors.size());
    if (n == 0)
        throw Error(ErrorCode::ColorGap, "graph needs at least one vertex to have a color");
    ColoredGraph g;
    g.vertex_count = n;
    g.colors = vertex_colors;
    g.adjacency.assign(static_cast<size_t>(n), {});

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(ErrorCode::InvalidVertex,
                        "edge endpoint out of range: (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
        if (a == b)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(key.first) +
                                                      "," + std::to_string(key.second) + ")");
        g.adjacency[static_cast<size_t>(a)].push_back(b);
        g.adjacency[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());

    int max_color = -1;
    for (int q : vertex_colors) {
        if (q < 0) throw Error(ErrorCode::ColorGap, "negative color id");
        max_color = std::max(max_color, q);
    }
    g.color_count = max_color + 1;
    std::vector<char> used(static_cast<size_t>(g.color_count), 0);
    for (int q : vertex_colors) used[static_cast<size_t>(q)] = 1;
    for (int q = 0; q < g.color_count; ++q)
        if (!used[static_cast<size_t>(q)])
            throw Error(ErrorCode::ColorGap, "color " + std::to_string(q) + " unused");

    if (n > 0) {
        std::vector<char> visited(static_cast<size_t>(n), 0);
        std::queue<int> queue;
        queue.push(0);
        visited[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.adjacency[static_cast<size_t>(u)]) {
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    ++reached;
                    queue.push(w);
                }
            }
        }
        if (reached != n)
            throw Error(ErrorCode::DisconnectedGraph,
                        "graph is disconnected (" + std::to_string(reached) + " of " +
                            std::to_string(n) + " vertices reachable)");
    }
    return g;
}

std::vector<int> distances_from(const ColoredGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count)
        throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    std::vector<int> dist(static_cast<size_t>(g.vertex_count), -1);
    std::queue<int> queue;
    dist[static_cast<size_t>(v)] = 0;
    queue.push(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

VertexSubset nearest_neighbors(const ColoredGraph& g, int v, const VertexSubset& s) {
    if (s.empty()) throw Error(ErrorCode::EmptySubset, "nearest_neighbors of empty subset");
    auto dist = distances_from(g, v);
    int best = g.vertex_count + 1;
    for (int u : s) {
        if (u < 0 || u >= g.vertex_count)
            throw Error(ErrorCode::InvalidVertex, "subset member " + std::to_string(u) + " out of range");
        best = std::min(best, dist[static_cast<size_t>(u)]);
    }
    VertexSubset out;
    for (int u : s)
        if (dist[static_cast<size_t>(u)] == best) out.push_back(u);
    return out;
}

// Multi-source BFS. nn_mask[v] accumulates the colors of the members of s
// at distance exactly d(v,s): every shortest path to the nearest members
// leaves v through a neighbor one layer closer. Color sets are stored as
// 64-bit blocks since reduction instances use hundreds of colors.
std::optional<int> first_inconsistent_vertex(const ColoredGraph& g, const VertexSubset& s) {
    if (s.empty()) throw Error(ErrorCode::EmptySubset, "consistency check of empty subset");
    const int n = g.vertex_count;
    const int blocks = (g.color_count + 63) / 64;
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<uint64_t> nn_mask(static_cast<size_t>(n) * static_cast<size_t>(blocks), 0);
    auto mask_of = [&](int v) { return nn_mask.data() + static_cast<size_t>(v) * static_cast<size_t>(blocks); };
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::queue<int> queue;
    for (int u : s) {
        if (u < 0 || u >= n)
            throw Error(ErrorCode::InvalidVertex, "subset member " + std::to_string(u) + " out of range");
        if (dist[static_cast<size_t>(u)] != 0) {
            dist[static_cast<size_t>(u)] = 0;
            int q = g.color_of(u);
            mask_of(u)[q / 64] |= uint64_t{1} << (q % 64);
            queue.push(u);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        order.push_back(u);
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push(w);
            }
        }
    }
    // order is sorted by distance, so every closer neighbor is final when
    // a vertex is reached.
    for (int u : order) {
        if (dist[static_cast<size_t>(u)] == 0) continue;
        uint64_t* mask = mask_of(u);
        for (int w : g.neighbors(u))
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] - 1) {
                const uint64_t* src = mask_of(w);
                for (int b = 0; b < blocks; ++b) mask[b] |= src[b];
            }
    }
    for (int v = 0; v < n; ++v) {
        int q = g.color_of(v);
        if (!(mask_of(v)[q / 64] >> (q % 64) & 1u)) return v;
    }
    return std::nullopt;
}

ColoredGraph intervals_to_graph(const IntervalFamily& family) {
    const int n = static_cast<int>(family.intervals.size());
    std::vector<int> colors(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = family.intervals[static_cast<size_t>(i)].color;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const auto& a = family.intervals[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const auto& b = family.intervals[static_cast<size_t>(j)];
            if (a.lo <= b.hi && b.lo <= a.hi) edges.emplace_back(i, j);
        }
    }
    return build_graph(colors, edges);
}

} // namespace mcs
