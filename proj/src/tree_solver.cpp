#include "mcs/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <string>

namespace mcs {

namespace {

constexpr uint32_t kUnsetCost = 0xFFFFFFFE;

inline uint16_t sat_inc(uint16_t d) {
    return d == kInfDist ? kInfDist : static_cast<uint16_t>(d + 1);
}
inline uint32_t sat_add(uint32_t a, uint32_t b) {
    return (a == kInfCost || b == kInfCost) ? kInfCost : a + b;
}
inline uint16_t min3(uint16_t a, uint16_t b, uint16_t c) { return std::min({a, b, c}); }

// Ascending enumeration of the submasks of m, 0 included. Calls f(sub)
// until it returns false.
template <typename F>
void for_each_submask(uint16_t m, F&& f) {
    uint16_t s = 0;
    while (true) {
        if (!f(s)) return;
        s = static_cast<uint16_t>((s - m) & m);
        if (s == 0) return;
    }
}

} // namespace

RootedTree root_tree(const ColoredGraph& g, int root) {
    const int n = g.vertex_count;
    if (root < 0 || root >= n)
        throw Error(ErrorCode::InvalidVertex, "root " + std::to_string(root) + " out of range");
    size_t degree_sum = 0;
    for (const auto& nbrs : g.adjacency) degree_sum += nbrs.size();
    if (degree_sum != 2 * static_cast<size_t>(n - 1))
        throw Error(ErrorCode::NotATree, "graph has " + std::to_string(degree_sum / 2) +
                                             " edges; a tree on " + std::to_string(n) +
                                             " vertices has " + std::to_string(n - 1));
    RootedTree t;
    t.base = g;
    t.root = root;
    t.parent.assign(static_cast<size_t>(n), -1);
    t.children.assign(static_cast<size_t>(n), {});
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> queue{root};
    visited[static_cast<size_t>(root)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) { // sorted, so children come out ascending
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                t.parent[static_cast<size_t>(w)] = u;
                t.children[static_cast<size_t>(u)].push_back(w);
                queue.push_back(w);
            }
        }
    }
    return t;
}

TreeDpSolver::TreeDpSolver(RootedTree tree, int color_cap)
    : tree_(std::move(tree)), n_(tree_.base.vertex_count), colors_(tree_.base.color_count) {
    if (color_cap < 1 || color_cap > kColorSetWidth)
        throw Error(ErrorCode::ColorCapExceeded,
                    "color cap must be in [1," + std::to_string(kColorSetWidth) + "]");
    if (colors_ > color_cap)
        throw Error(ErrorCode::ColorCapExceeded, "instance has " + std::to_string(colors_) +
                                                     " colors, cap is " + std::to_string(color_cap));

    palette_ = static_cast<uint16_t>((1u << colors_) - 1u);

    pair_offset_.assign(static_cast<size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v)
        pair_offset_[static_cast<size_t>(v) + 1] =
            pair_offset_[static_cast<size_t>(v)] + static_cast<size_t>(tree_.child_count(v)) + 1;
    const size_t total_pairs = pair_offset_[static_cast<size_t>(n_)];
    profiles_.resize(total_pairs);
    take_cache_.assign(total_pairs, kUnsetCost);
    anchored_cache_.assign(static_cast<size_t>(n_), kUnsetCost);

    // Post-order so every child's full profile exists before its parent's.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n_));
    std::vector<int> stack{tree_.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : tree_.children[static_cast<size_t>(v)]) stack.push_back(u);
    }
    std::reverse(order.begin(), order.end());

    // profile(v,i)[d] = colors present at distance d from v inside the
    // subtree of v restricted to its first i children.
    for (int v : order) {
        size_t p = pair_offset_[static_cast<size_t>(v)];
        profiles_[p] = {color_bit(v)};
        int i = 0;
        for (int u : tree_.children[static_cast<size_t>(v)]) {
            ++i;
            const auto& sub = full_profile(u);
            const auto& prev = profiles_[p + static_cast<size_t>(i) - 1];
            auto& cur = profiles_[p + static_cast<size_t>(i)];
            cur.assign(std::max(prev.size(), sub.size() + 1), 0);
            std::copy(prev.begin(), prev.end(), cur.begin());
            for (size_t d = 0; d < sub.size(); ++d) cur[d + 1] |= sub[d];
        }
    }
}

DpKey TreeDpSolver::normalized(const DpKey& k) const {
    // Entries with the subtree root chosen do not depend on the outside
    // promises, so those keys collapse onto a single representative.
    if (k.d_in == 0) {
        DpKey n = k;
        n.d_out = kInfDist;
        n.d_sib = kInfDist;
        n.c_out = {};
        n.c_sib = {};
        return n;
    }
    return k;
}

DpValue TreeDpSolver::resolve(const DpKey& raw) {
    DpKey k = normalized(raw);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    ++evaluations_;
    DpValue v = compute(k);
    memo_.emplace(k, v);
    return v;
}

DpValue TreeDpSolver::compute(const DpKey& k) {
    const uint16_t cv = color_bit(k.v);

    // Colors of the nearest chosen vertices as seen from v; v must see its
    // own color there or no subset fits this key.
    const uint16_t dmin = min3(k.d_in, k.d_out, k.d_sib);
    uint16_t cmin = 0;
    if (k.d_in == dmin) cmin |= k.c_in.bits;
    if (k.d_sib == dmin) cmin |= k.c_sib.bits;
    if (k.d_out == dmin) cmin |= k.c_out.bits;
    if (!(cmin & cv)) return {};

    if (k.d_in == 0) {
        if (k.c_in.bits != cv) return {};
        return {take_value(k.v, k.i), DpTag::kTakeVertex, 0, 0, 0};
    }

    if (k.i == 0) {
        // Single-vertex subtree: no chosen vertex can sit at a positive
        // finite distance inside it.
        if (k.d_in != kInfDist) return {};
        return {0, DpTag::kLeafEmpty, 0, 0, 0};
    }

    if (k.d_in == kInfDist) {
        auto [pre, sub] = keys_split_empty(k);
        uint32_t cost = sat_add(resolve(pre).cost, resolve(sub).cost);
        if (cost == kInfCost) return {};
        return {cost, DpTag::kSplitEmpty, 0, 0, 0};
    }

    // Finite positive d_in: the nearest chosen vertices inside must exist
    // at that exact depth with exactly the requested colors.
    const auto& prof = profile(k.v, k.i);
    if (k.d_in >= prof.size() || (k.c_in.bits & ~prof[k.d_in])) return {};

    const int child = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(k.i) - 1];
    const auto& prefix_prof = profile(k.v, k.i - 1);
    const auto& child_prof = full_profile(child);

    DpValue best;
    auto consider = [&](uint32_t cost, DpTag tag, uint16_t d, uint16_t a, uint16_t b) {
        if (cost < best.cost) best = {cost, tag, d, a, b};
    };

    // Split the in-colors between the prefix tree and the last child's
    // subtree; a side may also hold no nearest vertex at all, in which
    // case its true nearest distance and colors are enumerated.
    const uint16_t cin = k.c_in.bits;
    for_each_submask(cin, [&](uint16_t ca) {
        uint16_t forced = static_cast<uint16_t>(cin & ~ca);
        for_each_submask(ca, [&](uint16_t extra) {
            uint16_t cb = static_cast<uint16_t>(forced | extra);
            if (ca != 0 && cb != 0) {
                auto [pre, sub] = keys_split_both(k, ca, cb);
                consider(sat_add(resolve(pre).cost, resolve(sub).cost), DpTag::kSplitBoth, 0, ca,
                         cb);
            } else if (ca == 0) {
                // Entire in-color set lives in the child subtree; the
                // prefix's nearest (if any) is strictly farther.
                for (uint16_t d = k.d_in + 1; d < prefix_prof.size(); ++d) {
                    uint16_t avail = prefix_prof[d];
                    if (!avail) continue;
                    for_each_submask(avail, [&](uint16_t cp) {
                        if (cp == 0) return true;
                        auto [pre, sub] = keys_prefix_far(k, d, cp);
                        consider(sat_add(resolve(pre).cost, resolve(sub).cost),
                                 DpTag::kSplitPrefixFar, d, cp, 0);
                        return true;
                    });
                }
                auto [pre, sub] = keys_prefix_far(k, kInfDist, 0);
                consider(sat_add(resolve(pre).cost, resolve(sub).cost), DpTag::kSplitPrefixFar,
                         kInfDist, 0, 0);
            } else {
                // cb == 0: in-colors live in the prefix; the child
                // subtree's nearest (if any) is strictly farther from v.
                uint16_t dlim = static_cast<uint16_t>(child_prof.size()); // child depth d-1
                for (uint16_t d = k.d_in + 1; d <= dlim; ++d) {
                    uint16_t avail = child_prof[d - 1];
                    if (!avail) continue;
                    for_each_submask(avail, [&](uint16_t cp) {
                        if (cp == 0) return true;
                        auto [pre, sub] = keys_child_far(k, d, cp);
                        consider(sat_add(resolve(pre).cost, resolve(sub).cost),
                                 DpTag::kSplitChildFar, d, cp, 0);
                        return true;
                    });
                }
                auto [pre, sub] = keys_child_far(k, kInfDist, 0);
                consider(sat_add(resolve(pre).cost, resolve(sub).cost), DpTag::kSplitChildFar,
                         kInfDist, 0, 0);
            }
            return true;
        });
        return true;
    });

    if (best.cost == kInfCost) return {};
    return best;
}

// Merged sibling-side promise for the prefix subproblem: the last child's
// subtree joins the sibling forest, carrying nearest colors cb at
// distance d_new, alongside the existing promise (d_sib, c_sib).
namespace {
inline void merge_sibling(uint16_t d_new, uint16_t c_new, uint16_t d_old, uint16_t c_old,
                          uint16_t* d_out, uint16_t* c_out) {
    uint16_t d = std::min(d_new, d_old);
    uint16_t c = 0;
    if (d != kInfDist) {
        if (d_new == d) c |= c_new;
        if (d_old == d) c |= c_old;
    }
    *d_out = d;
    *c_out = c;
}
} // namespace

std::pair<DpKey, DpKey> TreeDpSolver::keys_split_both(const DpKey& k, uint16_t ca,
                                                      uint16_t cb) const {
    const int child = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(k.i) - 1];
    DpKey pre;
    pre.v = k.v;
    pre.i = k.i - 1;
    pre.d_in = k.d_in;
    pre.c_in = {ca};
    pre.d_out = k.d_out;
    pre.c_out = k.c_out;
    merge_sibling(k.d_in, cb, k.d_sib, k.c_sib.bits, &pre.d_sib, &pre.c_sib.bits);

    uint16_t dm = min3(k.d_in, k.d_sib, k.d_out);
    uint16_t cm = 0;
    if (k.d_in == dm) cm |= ca;
    if (k.d_sib == dm) cm |= k.c_sib.bits;
    if (k.d_out == dm) cm |= k.c_out.bits;

    DpKey sub;
    sub.v = child;
    sub.i = tree_.child_count(child);
    sub.d_in = static_cast<uint16_t>(k.d_in - 1);
    sub.c_in = {cb};
    sub.d_out = sat_inc(dm);
    sub.c_out = {cm};
    sub.d_sib = kInfDist;
    sub.c_sib = {};
    return {pre, sub};
}

std::pair<DpKey, DpKey> TreeDpSolver::keys_prefix_far(const DpKey& k, uint16_t d,
                                                      uint16_t cp) const {
    const int child = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(k.i) - 1];
    DpKey pre;
    pre.v = k.v;
    pre.i = k.i - 1;
    pre.d_in = d;
    pre.c_in = {cp};
    pre.d_out = k.d_out;
    pre.c_out = k.c_out;
    merge_sibling(k.d_in, k.c_in.bits, k.d_sib, k.c_sib.bits, &pre.d_sib, &pre.c_sib.bits);

    uint16_t dm = min3(d, k.d_sib, k.d_out);
    uint16_t cm = 0;
    if (dm != kInfDist) {
        if (d == dm) cm |= cp;
        if (k.d_sib == dm) cm |= k.c_sib.bits;
        if (k.d_out == dm) cm |= k.c_out.bits;
    }

    DpKey sub;
    sub.v = child;
    sub.i = tree_.child_count(child);
    sub.d_in = static_cast<uint16_t>(k.d_in - 1);
    sub.c_in = k.c_in;
    sub.d_out = sat_inc(dm);
    sub.c_out = {cm};
    sub.d_sib = kInfDist;
    sub.c_sib = {};
    return {pre, sub};
}

std::pair<DpKey, DpKey> TreeDpSolver::keys_child_far(const DpKey& k, uint16_t d,
                                                     uint16_t cp) const {
    const int child = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(k.i) - 1];
    DpKey pre;
    pre.v = k.v;
    pre.i = k.i - 1;
    pre.d_in = k.d_in;
    pre.c_in = k.c_in;
    pre.d_out = k.d_out;
    pre.c_out = k.c_out;
    merge_sibling(d, cp, k.d_sib, k.c_sib.bits, &pre.d_sib, &pre.c_sib.bits);

    uint16_t dm = min3(k.d_in, k.d_sib, k.d_out);
    uint16_t cm = 0;
    if (k.d_in == dm) cm |= k.c_in.bits;
    if (k.d_sib == dm) cm |= k.c_sib.bits;
    if (k.d_out == dm) cm |= k.c_out.bits;

    DpKey sub;
    sub.v = child;
    sub.i = tree_.child_count(child);
    sub.d_in = d == kInfDist ? kInfDist : static_cast<uint16_t>(d - 1);
    sub.c_in = {cp};
    sub.d_out = sat_inc(dm);
    sub.c_out = {cm};
    sub.d_sib = kInfDist;
    sub.c_sib = {};
    return {pre, sub};
}

std::pair<DpKey, DpKey> TreeDpSolver::keys_split_empty(const DpKey& k) const {
    const int child = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(k.i) - 1];
    DpKey pre = k;
    pre.i = k.i - 1;

    uint16_t dm = std::min(k.d_out, k.d_sib);
    uint16_t cm = 0;
    if (dm != kInfDist) {
        if (k.d_out == dm) cm |= k.c_out.bits;
        if (k.d_sib == dm) cm |= k.c_sib.bits;
    }
    DpKey sub;
    sub.v = child;
    sub.i = tree_.child_count(child);
    sub.d_in = kInfDist;
    sub.c_in = {};
    sub.d_out = sat_inc(dm);
    sub.c_out = {cm};
    sub.d_sib = kInfDist;
    sub.c_sib = {};
    return {pre, sub};
}

DpKey TreeDpSolver::anchored_child_key(int u, uint16_t d, uint16_t cp) const {
    DpKey k;
    k.v = u;
    k.i = tree_.child_count(u);
    k.d_in = d;
    k.c_in = {cp};
    k.d_out = 1;
    k.c_out = {color_bit(tree_.parent[static_cast<size_t>(u)])};
    k.d_sib = kInfDist;
    k.c_sib = {};
    return k;
}

// Best entry for the full subtree of u when u's parent is chosen: the
// parent is then the nearest chosen vertex outside, one hop away, and
// dominates every other outside vertex.
uint32_t TreeDpSolver::anchored_child_value(int u) {
    uint32_t& slot = anchored_cache_[static_cast<size_t>(u)];
    if (slot != kUnsetCost) return slot;
    uint32_t best = kInfCost;
    const auto& prof = full_profile(u);
    for (uint16_t d = 0; d < prof.size(); ++d) {
        uint16_t avail = prof[d];
        if (!avail) continue;
        for_each_submask(avail, [&](uint16_t cp) {
            if (cp == 0) return true;
            best = std::min(best, resolve(anchored_child_key(u, d, cp)).cost);
            return true;
        });
    }
    best = std::min(best, resolve(anchored_child_key(u, kInfDist, 0)).cost);
    slot = best;
    return best;
}

uint32_t TreeDpSolver::take_value(int v, int i) {
    size_t p = pair_offset_[static_cast<size_t>(v)] + static_cast<size_t>(i);
    if (take_cache_[p] != kUnsetCost) return take_cache_[p];
    uint32_t val =
        i == 0 ? 1
               : sat_add(take_value(v, i - 1),
                         anchored_child_value(
                             tree_.children[static_cast<size_t>(v)][static_cast<size_t>(i) - 1]));
    take_cache_[p] = val;
    return val;
}

void TreeDpSolver::validate(const DpKey& k) const {
    if (k.v < 0 || k.v >= n_)
        throw Error(ErrorCode::NonCanonicalKey, "vertex " + std::to_string(k.v) + " out of range");
    if (k.i < 0 || k.i > tree_.child_count(k.v))
        throw Error(ErrorCode::NonCanonicalKey,
                    "prefix index " + std::to_string(k.i) + " out of range for vertex " +
                        std::to_string(k.v));
    auto dist_ok = [&](uint16_t d, uint16_t lo) {
        return d == kInfDist || (d >= lo && static_cast<int>(d) <= n_);
    };
    if (!dist_ok(k.d_in, 0) || !dist_ok(k.d_out, 1) || !dist_ok(k.d_sib, 1))
        throw Error(ErrorCode::NonCanonicalKey, "distance outside [0..n] / [1..n] / infinity");
    if ((k.c_in.bits | k.c_out.bits | k.c_sib.bits) & ~palette_)
        throw Error(ErrorCode::NonCanonicalKey, "color set contains bits outside the palette");
}

DpValue TreeDpSolver::entry(const DpKey& key) {
    validate(key);
    // The convention ties empty color sets to infinite distances; keys
    // breaking it describe no subset and evaluate to infinity directly.
    if (((key.d_in == kInfDist) != (key.c_in.bits == 0)) ||
        ((key.d_out == kInfDist) != (key.c_out.bits == 0)) ||
        ((key.d_sib == kInfDist) != (key.c_sib.bits == 0)))
        return {};
    return resolve(key);
}

void TreeDpSolver::walk(const DpKey& key, std::vector<int>* out) {
    DpKey k = normalized(key);
    auto it = memo_.find(k);
    assert(it != memo_.end());
    const DpValue val = it->second;
    assert(val.cost != kInfCost);
    switch (val.tag) {
        case DpTag::kDead:
            assert(false);
            return;
        case DpTag::kLeafEmpty:
            return;
        case DpTag::kTakeVertex: {
            out->push_back(k.v);
            for (int j = 0; j < k.i; ++j) {
                int u = tree_.children[static_cast<size_t>(k.v)][static_cast<size_t>(j)];
                uint32_t target = anchored_child_value(u);
                // First (d, colors) pair attaining the child's best, in
                // enumeration order, mirrors the forward pass.
                const auto& prof = full_profile(u);
                bool done = false;
                for (uint16_t d = 0; d < prof.size() && !done; ++d) {
                    uint16_t avail = prof[d];
                    if (!avail) continue;
                    for_each_submask(avail, [&](uint16_t cp) {
                        if (cp == 0) return true;
                        DpKey ck = anchored_child_key(u, d, cp);
                        if (resolve(ck).cost == target) {
                            walk(ck, out);
                            done = true;
                            return false;
                        }
                        return true;
                    });
                }
                if (!done) {
                    DpKey ck = anchored_child_key(u, kInfDist, 0);
                    assert(resolve(ck).cost == target);
                    walk(ck, out);
                }
            }
            return;
        }
        case DpTag::kSplitBoth: {
            auto [pre, sub] = keys_split_both(k, val.arg_a, val.arg_b);
            walk(pre, out);
            walk(sub, out);
            return;
        }
        case DpTag::kSplitPrefixFar: {
            auto [pre, sub] = keys_prefix_far(k, val.arg_d, val.arg_a);
            walk(pre, out);
            walk(sub, out);
            return;
        }
        case DpTag::kSplitChildFar: {
            auto [pre, sub] = keys_child_far(k, val.arg_d, val.arg_a);
            walk(pre, out);
            walk(sub, out);
            return;
        }
        case DpTag::kSplitEmpty: {
            auto [pre, sub] = keys_split_empty(k);
            walk(pre, out);
            walk(sub, out);
            return;
        }
    }
}

VertexSubset TreeDpSolver::reconstruct(const DpKey& key) {
    validate(key);
    DpValue val = entry(key);
    if (val.cost == kInfCost)
        throw Error(ErrorCode::NonCanonicalKey, "cannot reconstruct an infinite entry");
    std::vector<int> out;
    walk(key, &out);
    std::sort(out.begin(), out.end());
    assert(out.size() == val.cost);
    return out;
}

SolveResult TreeDpSolver::solve() {
    auto start = std::chrono::steady_clock::now();
    const auto& prof = full_profile(tree_.root);
    uint32_t best = kInfCost;
    DpKey best_key;
    // A consistent subset of the whole tree is nonempty, so the root's
    // nearest in-subtree distance is finite.
    for (uint16_t d = 0; d < prof.size(); ++d) {
        uint16_t avail = prof[d];
        if (!avail) continue;
        for_each_submask(avail, [&](uint16_t cin) {
            if (cin == 0) return true;
            DpKey k;
            k.v = tree_.root;
            k.i = tree_.child_count(tree_.root);
            k.d_in = d;
            k.c_in = {cin};
            uint32_t cost = resolve(k).cost;
            if (cost < best) {
                best = cost;
                best_key = k;
            }
            return true;
        });
    }
    assert(best != kInfCost);
    std::vector<int> subset;
    walk(best_key, &subset);
    std::sort(subset.begin(), subset.end());
    SolveResult result;
    result.size = static_cast<int>(best);
    result.subset = std::move(subset);
    result.stats.dp_evaluations = evaluations_;
    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

SolveResult solve_tree_mcs(const RootedTree& tree, int color_cap) {
    TreeDpSolver solver(tree, color_cap);
    return solver.solve();
}

} // namespace mcs
