#ifndef MCS_COLORED_GRAPH_HPP
#define MCS_COLORED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {

/// Undirected vertex-colored graph. Immutable after construction; all
/// queries are pure. Invariants (checked by build_graph): symmetric
/// simple adjacency, compact color palette [0,c), connected.
struct ColoredGraph {
    int vertex_count = 0;
    int color_count = 0;
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists
    std::vector<int> colors;

    int color_of(int v) const { return colors[static_cast<size_t>(v)]; }
    const std::vector<int>& neighbors(int v) const { return adjacency[static_cast<size_t>(v)]; }
};

/// Sorted duplicate-free list of vertex ids.
using VertexSubset = std::vector<int>;

/// Closed integer intervals, one color each. Input to intervals_to_graph.
struct Interval {
    int64_t lo = 0;
    int64_t hi = 0;
    int color = 0;
};

struct IntervalFamily {
    std::vector<Interval> intervals;
    int color_count = 0;
};

ColoredGraph build_graph(const std::vector<int>& vertex_colors,
                         const std::vector<std::pair<int, int>>& edges);

/// BFS hop distances from v to every vertex.
std::vector<int> distances_from(const ColoredGraph& g, int v);

/// All members of s at minimum hop distance from v (the full tie set).
VertexSubset nearest_neighbors(const ColoredGraph& g, int v, const VertexSubset& s);

/// Consistency verdict: empty when s is consistent, otherwise the
/// smallest vertex id whose nearest members of s miss its color.
std::optional<int> first_inconsistent_vertex(const ColoredGraph& g, const VertexSubset& s);

inline bool is_consistent(const ColoredGraph& g, const VertexSubset& s) {
    return !first_inconsistent_vertex(g, s).has_value();
}

/// One vertex per interval; edge iff the closed intervals intersect
/// (shared endpoints count).
ColoredGraph intervals_to_graph(const IntervalFamily& family);

} // namespace mcs

#endif
