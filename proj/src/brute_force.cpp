#include "mcs/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mcs {

int color_count_lower_bound(const ColoredGraph& g) { return g.color_count; }

namespace {

// Consistency check against a precomputed distance matrix: for each vertex,
// the nearest members of the candidate must include one of its color.
bool consistent_by_table(const ColoredGraph& g, const std::vector<std::vector<int>>& dist,
                         const std::vector<int>& candidate) {
    const int n = g.vertex_count;
    for (int v = 0; v < n; ++v) {
        const auto& dv = dist[static_cast<size_t>(v)];
        int best = n + 1;
        for (int u : candidate) best = std::min(best, dv[static_cast<size_t>(u)]);
        bool own_color = false;
        for (int u : candidate)
            if (dv[static_cast<size_t>(u)] == best && g.color_of(u) == g.color_of(v)) {
                own_color = true;
                break;
            }
        if (!own_color) return false;
    }
    return true;
}

struct Enumerator {
    Enumerator(const ColoredGraph& graph, const std::vector<std::vector<int>>& table,
               const std::optional<uint64_t>& limit)
        : g(graph), dist(table), budget(limit) {}

    const ColoredGraph& g;
    const std::vector<std::vector<int>>& dist;
    const std::optional<uint64_t>& budget;
    uint64_t all_colors = 0;
    std::vector<int> last_of_color; // max vertex id per color
    uint64_t examined = 0;
    std::vector<int> picked;
    uint64_t picked_colors = 0;

    // Lexicographic k-subset backtracking. Prunes branches that can no
    // longer cover every color (each color must appear in any consistent
    // subset), so every examined subset covers the full palette.
    bool extend(int next, int remaining, std::vector<int>* out) {
        uint64_t uncovered = all_colors & ~picked_colors;
        if (std::popcount(uncovered) > remaining) return false;
        for (uint64_t bits = uncovered; bits; bits &= bits - 1) {
            int q = std::countr_zero(bits);
            if (last_of_color[static_cast<size_t>(q)] < next) return false;
        }
        if (remaining == 0) {
            ++examined;
            if (budget && examined > *budget)
                throw Error(ErrorCode::BudgetExhausted,
                            "budget of " + std::to_string(*budget) + " subsets exhausted");
            if (consistent_by_table(g, dist, picked)) {
                *out = picked;
                return true;
            }
            return false;
        }
        for (int v = next; v <= g.vertex_count - remaining; ++v) {
            uint64_t saved = picked_colors;
            picked.push_back(v);
            picked_colors |= uint64_t{1} << g.color_of(v);
            bool found = extend(v + 1, remaining - 1, out);
            picked_colors = saved;
            picked.pop_back();
            if (found) return true;
        }
        return false;
    }
};

} // namespace

SolveResult mcs_brute_force(const ColoredGraph& g, const BruteForceOptions& opts) {
    if (g.vertex_count > opts.vertex_cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "instance has " + std::to_string(g.vertex_count) + " vertices, cap is " +
                        std::to_string(opts.vertex_cap));
    if (g.color_count > 63)
        throw Error(ErrorCode::InstanceTooLarge,
                    "instance has " + std::to_string(g.color_count) +
                        " colors, brute force supports at most 63");
    auto start = std::chrono::steady_clock::now();

    const int n = g.vertex_count;
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) dist.push_back(distances_from(g, v));

    SolveResult result;
    Enumerator en{g, dist, opts.budget};
    en.all_colors = g.color_count >= 64 ? ~uint64_t{0} : (uint64_t{1} << g.color_count) - 1;
    en.last_of_color.assign(static_cast<size_t>(g.color_count), -1);
    for (int v = 0; v < n; ++v)
        en.last_of_color[static_cast<size_t>(g.color_of(v))] = v;

    for (int k = color_count_lower_bound(g); k <= n; ++k) {
        std::vector<int> found;
        en.picked.clear();
        if (en.extend(0, k, &found)) {
            result.size = k;
            result.subset = std::move(found);
            break;
        }
    }
    result.stats.subsets_examined = en.examined;
    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace mcs
