#include "mcs/random_tree.hpp"

#include <random>
#include <string>

namespace mcs {

ColoredGraph gen_random_tree(int n, int c, uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::ParseError, "tree size must be positive");
    if (c < 1) throw Error(ErrorCode::ParseError, "color count must be positive");
    std::mt19937_64 rng(seed);
    // Modulo draws keep the stream identical across standard libraries;
    // uniform_int_distribution does not.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) - 1);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<uint64_t>(v)), v);
    std::vector<int> colors(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) colors[static_cast<size_t>(v)] = static_cast<int>(rng() % static_cast<uint64_t>(c));
    std::vector<int> remap(static_cast<size_t>(c), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int& slot = remap[static_cast<size_t>(colors[static_cast<size_t>(v)])];
        if (slot < 0) slot = next++;
        colors[static_cast<size_t>(v)] = slot;
    }
    return build_graph(colors, edges);
}

} // namespace mcs
