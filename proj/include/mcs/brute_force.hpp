#ifndef MCS_BRUTE_FORCE_HPP
#define MCS_BRUTE_FORCE_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "mcs/colored_graph.hpp"

namespace mcs {

struct SolveStats {
    uint64_t subsets_examined = 0;
    uint64_t dp_evaluations = 0;
    std::chrono::duration<double> elapsed{0};
};

struct SolveResult {
    int size = 0;
    VertexSubset subset;
    SolveStats stats;
};

/// Number of distinct colors; a lower bound on any consistent subset.
int color_count_lower_bound(const ColoredGraph& g);

struct BruteForceOptions {
    int vertex_cap = 22;
    std::optional<uint64_t> budget; // max candidate subsets to examine
};

/// Exhaustive minimum consistent subset. Enumerates cardinalities in
/// ascending order, lexicographically within a cardinality, skipping
/// subsets that miss a color; returns the first hit, which is the
/// lexicographically smallest minimum solution.
SolveResult mcs_brute_force(const ColoredGraph& g, const BruteForceOptions& opts = {});

} // namespace mcs

#endif
