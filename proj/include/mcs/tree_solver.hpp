#ifndef MCS_TREE_SOLVER_HPP
#define MCS_TREE_SOLVER_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mcs/brute_force.hpp"
#include "mcs/colored_graph.hpp"

namespace mcs {

inline constexpr uint16_t kInfDist = 0xFFFF;   // "no member at any distance"
inline constexpr uint32_t kInfCost = 0xFFFFFFFF;
inline constexpr int kColorSetWidth = 16;
inline constexpr int kDefaultColorCap = 16;

/// Subset of the color palette [0,c) as a 16-bit mask.
struct ColorSet {
    uint16_t bits = 0;
    bool operator==(const ColorSet&) const = default;
};

/// A ColoredGraph known to be a tree, rooted, with ordered child lists
/// (ascending vertex id; the order fixes the prefix subtrees the solver
/// recurses on).
struct RootedTree {
    ColoredGraph base;
    int root = 0;
    std::vector<int> parent;             // -1 at the root
    std::vector<std::vector<int>> children;

    int child_count(int v) const { return static_cast<int>(children[static_cast<size_t>(v)].size()); }
};

RootedTree root_tree(const ColoredGraph& g, int root);

/// Subproblem identity: the subtree of v restricted to its first i
/// children, the distance from v to the nearest chosen vertex inside
/// (d_in), in the remaining sibling forest (d_sib) and outside v's
/// subtree (d_out), and the color sets of those nearest vertices.
/// Canonical keys tie an infinite distance to an empty color set.
struct DpKey {
    int v = 0;
    int i = 0;
    uint16_t d_in = kInfDist;
    uint16_t d_out = kInfDist;
    uint16_t d_sib = kInfDist;
    ColorSet c_in, c_out, c_sib;
    bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
    size_t operator()(const DpKey& k) const {
        uint64_t a = static_cast<uint64_t>(static_cast<uint32_t>(k.v)) << 32 |
                     static_cast<uint32_t>(k.i);
        uint64_t b = static_cast<uint64_t>(k.d_in) << 48 | static_cast<uint64_t>(k.d_out) << 32 |
                     static_cast<uint64_t>(k.d_sib) << 16 | k.c_in.bits;
        uint64_t c = static_cast<uint64_t>(k.c_out.bits) << 16 | k.c_sib.bits;
        uint64_t x = (a ^ 0x9E3779B97F4A7C15ull) * 0xBF58476D1CE4E5B9ull;
        x ^= b;
        x *= 0x94D049BB133111EBull;
        x ^= c;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 31;
        return static_cast<size_t>(x);
    }
};

/// How a finite entry was obtained; drives solution reconstruction.
enum class DpTag : uint8_t {
    kDead,          // no partial consistent subset for this key
    kLeafEmpty,     // single-vertex base, empty subset
    kTakeVertex,    // v itself chosen
    kSplitBoth,     // prefix and last child both at d_in (args: color split)
    kSplitPrefixFar,// prefix nearest farther than d_in or empty (args: its d, colors)
    kSplitChildFar, // child nearest farther than d_in or empty (args: its d, colors)
    kSplitEmpty,    // nothing chosen on either side
};

struct DpValue {
    uint32_t cost = kInfCost;
    DpTag tag = DpTag::kDead;
    uint16_t arg_d = 0; // chosen distance for kSplitPrefixFar / kSplitChildFar
    uint16_t arg_a = 0; // chosen prefix colors (kSplitBoth) or far-side colors
    uint16_t arg_b = 0; // chosen child colors (kSplitBoth)
};

/// Minimum consistent subset on a rooted tree, parameterized by the
/// number of colors. Memoized top-down evaluation over DpKey subproblems
/// with deterministic tie-breaking (first hit in enumeration order).
class TreeDpSolver {
  public:
    explicit TreeDpSolver(RootedTree tree, int color_cap = kDefaultColorCap);

    /// Validated subproblem query. Keys violating the infinite-distance /
    /// empty-color-set convention evaluate to an infinite cost without
    /// recursion; structurally invalid keys raise NonCanonicalKey.
    DpValue entry(const DpKey& key);

    /// The subset realizing entry(key).cost; key must have a finite entry.
    VertexSubset reconstruct(const DpKey& key);

    SolveResult solve();

    uint64_t evaluations() const { return evaluations_; }
    size_t memo_size() const { return memo_.size(); }
    const RootedTree& tree() const { return tree_; }

  private:
    const std::vector<uint16_t>& profile(int v, int i) const {
        return profiles_[pair_offset_[static_cast<size_t>(v)] + static_cast<size_t>(i)];
    }
    const std::vector<uint16_t>& full_profile(int v) const {
        return profile(v, tree_.child_count(v));
    }
    uint16_t color_bit(int v) const {
        return static_cast<uint16_t>(1u << tree_.base.color_of(v));
    }

    DpKey normalized(const DpKey& k) const;
    DpValue resolve(const DpKey& k);
    DpValue compute(const DpKey& k);
    uint32_t take_value(int v, int i);
    uint32_t anchored_child_value(int u); // best full-subtree entry under a chosen parent
    void validate(const DpKey& k) const;

    std::pair<DpKey, DpKey> keys_split_both(const DpKey& k, uint16_t ca, uint16_t cb) const;
    std::pair<DpKey, DpKey> keys_prefix_far(const DpKey& k, uint16_t d, uint16_t cp) const;
    std::pair<DpKey, DpKey> keys_child_far(const DpKey& k, uint16_t d, uint16_t cp) const;
    std::pair<DpKey, DpKey> keys_split_empty(const DpKey& k) const;
    DpKey anchored_child_key(int u, uint16_t d, uint16_t cp) const;

    void walk(const DpKey& key, std::vector<int>* out);

    RootedTree tree_;
    int n_;
    int colors_;
    uint16_t palette_ = 0;
    std::vector<size_t> pair_offset_;           // (v,i) -> flat pair index
    std::vector<std::vector<uint16_t>> profiles_; // per pair: colors by depth
    std::vector<uint32_t> take_cache_;          // per pair
    std::vector<uint32_t> anchored_cache_;      // per vertex
    std::unordered_map<DpKey, DpValue, DpKeyHash> memo_;
    uint64_t evaluations_ = 0;
};

SolveResult solve_tree_mcs(const RootedTree& tree, int color_cap = kDefaultColorCap);

} // namespace mcs

#endif
