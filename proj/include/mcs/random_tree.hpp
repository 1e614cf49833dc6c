#ifndef MCS_RANDOM_TREE_HPP
#define MCS_RANDOM_TREE_HPP

#include <cstdint>

#include "mcs/colored_graph.hpp"

namespace mcs {

/// Seed-deterministic random colored tree: vertex v attaches to a
/// uniformly random earlier vertex, colors are i.i.d. over [0,c) and the
/// palette is re-compacted afterwards. Identical (n, c, seed) triples
/// produce identical graphs on every platform.
ColoredGraph gen_random_tree(int n, int c, uint64_t seed);

} // namespace mcs

#endif
