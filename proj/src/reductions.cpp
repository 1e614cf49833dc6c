#include "mcs/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <set>

namespace mcs {

bool literal_true(int literal, const std::vector<bool>& assignment) {
    int var = std::abs(literal) - 1;
    bool value = assignment[static_cast<size_t>(var)];
    return literal > 0 ? value : !value;
}

namespace {

void validate_formula(const Max2SatInstance& f) {
    if (f.num_vars < 1) throw Error(ErrorCode::ParseError, "formula needs at least one variable");
    for (const auto& [a, b] : f.clauses) {
        if (a == 0 || b == 0 || std::abs(a) > f.num_vars || std::abs(b) > f.num_vars)
            throw Error(ErrorCode::ParseError, "literal out of range");
    }
}

} // namespace

// Layout: variable blocks first (positive literal path, negative literal
// path, positive stabilizers, negative stabilizers), then clause blocks
// (left occurrence path, right occurrence path, clause path), then the
// central path v1,v2,v3.
int TreeReductionArtifact::literal_vertex(int var, bool negated, int a) const {
    int64_t base = static_cast<int64_t>(var - 1) * (8 + 2 * stabilizer_count);
    return static_cast<int>(base + (negated ? 4 : 0) + (a - 1));
}

int TreeReductionArtifact::stabilizer_vertex(int var, bool negated, int j) const {
    int64_t base = static_cast<int64_t>(var - 1) * (8 + 2 * stabilizer_count) + 8;
    return static_cast<int>(base + (negated ? stabilizer_count : 0) + (j - 1));
}

int TreeReductionArtifact::occurrence_vertex(int clause, bool right, int a) const {
    int64_t base = static_cast<int64_t>(num_vars()) * (8 + 2 * stabilizer_count) +
                   static_cast<int64_t>(clause - 1) * 21;
    return static_cast<int>(base + (right ? 7 : 0) + (a - 1));
}

int TreeReductionArtifact::clause_path_vertex(int clause, int a) const {
    int64_t base = static_cast<int64_t>(num_vars()) * (8 + 2 * stabilizer_count) +
                   static_cast<int64_t>(clause - 1) * 21 + 14;
    return static_cast<int>(base + (a - 1));
}

int TreeReductionArtifact::central_vertex(int k) const {
    int64_t base = static_cast<int64_t>(num_vars()) * (8 + 2 * stabilizer_count) +
                   static_cast<int64_t>(num_clauses()) * 21;
    return static_cast<int>(base + (k - 1));
}

int64_t n_of_k(int64_t n, int64_t m, int64_t stabilizers, int64_t k) {
    if (k < 0 || k > m)
        throw Error(ErrorCode::KOutOfRange, "satisfied-clause count " + std::to_string(k) +
                                                " outside [0," + std::to_string(m) + "]");
    return n * (stabilizers + 2) + 2 * k + 3 * (m - k) + 1;
}

TreeReductionArtifact max2sat_to_tree(const Max2SatInstance& formula,
                                      std::optional<int64_t> stabilizers) {
    validate_formula(formula);
    const int64_t n = formula.num_vars;
    const int64_t m = formula.clause_count();
    const int64_t M = stabilizers.value_or(n * n * n);
    if (M < min_stabilizer_count(n, m))
        throw Error(ErrorCode::MTooSmall, "M=" + std::to_string(M) + " below the required " +
                                              std::to_string(min_stabilizer_count(n, m)));

    const int64_t vertex_total = n * (2 * M + 8) + 21 * m + 3;
    const int64_t color_total = n * (M + 2) + m + 1;
    if (vertex_total > 20'000'000)
        throw Error(ErrorCode::InstanceTooLarge,
                    "reduction would emit " + std::to_string(vertex_total) + " vertices");

    TreeReductionArtifact art;
    art.formula = formula;
    art.stabilizer_count = M;
    art.desk_scale = n < 50 || m < 50;

    // Color ids: literal colors pairwise per variable, stabilizer colors
    // row-major by (variable, pair), clause colors, then the central color.
    auto lit_color = [&](int var, bool negated) { return 2 * (var - 1) + (negated ? 1 : 0); };
    auto stab_color = [&](int var, int j) {
        return static_cast<int>(2 * n + static_cast<int64_t>(var - 1) * M + (j - 1));
    };
    auto clause_color = [&](int clause) { return static_cast<int>(2 * n + n * M + (clause - 1)); };
    const int central_color = static_cast<int>(2 * n + n * M + m);

    std::vector<int> colors(static_cast<size_t>(vertex_total), -1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(vertex_total) - 1);
    art.vertex_roles.assign(static_cast<size_t>(vertex_total), {});
    art.color_roles.assign(static_cast<size_t>(color_total), {});

    auto set_vertex = [&](int id, int color, std::string role) {
        colors[static_cast<size_t>(id)] = color;
        art.vertex_roles[static_cast<size_t>(id)] = std::move(role);
    };

    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        art.color_roles[static_cast<size_t>(lit_color(i, false))] = "c" + si + "^l";
        art.color_roles[static_cast<size_t>(lit_color(i, true))] = "~c" + si + "^l";
        for (int a = 1; a <= 4; ++a) {
            set_vertex(art.literal_vertex(i, false, a), lit_color(i, false),
                       "x" + si + "^" + std::to_string(a));
            set_vertex(art.literal_vertex(i, true, a), lit_color(i, true),
                       "~x" + si + "^" + std::to_string(a));
            if (a > 1) {
                edges.emplace_back(art.literal_vertex(i, false, a - 1),
                                   art.literal_vertex(i, false, a));
                edges.emplace_back(art.literal_vertex(i, true, a - 1),
                                   art.literal_vertex(i, true, a));
            }
        }
        for (int j = 1; j <= M; ++j) {
            std::string sj = std::to_string(j);
            art.color_roles[static_cast<size_t>(stab_color(i, j))] = "c^s(" + si + "," + sj + ")";
            set_vertex(art.stabilizer_vertex(i, false, j), stab_color(i, j), "s" + si + "^" + sj);
            set_vertex(art.stabilizer_vertex(i, true, j), stab_color(i, j), "~s" + si + "^" + sj);
            edges.emplace_back(art.stabilizer_vertex(i, false, j), art.literal_vertex(i, false, 1));
            edges.emplace_back(art.stabilizer_vertex(i, true, j), art.literal_vertex(i, true, 1));
        }
        edges.emplace_back(art.literal_vertex(i, false, 1), art.central_vertex(1));
        edges.emplace_back(art.literal_vertex(i, true, 1), art.central_vertex(1));
    }

    for (int j = 1; j <= m; ++j) {
        std::string sj = std::to_string(j);
        const auto& [left, right] = formula.clauses[static_cast<size_t>(j - 1)];
        art.color_roles[static_cast<size_t>(clause_color(j))] = "c" + sj + "^w";
        for (int a = 1; a <= 7; ++a) {
            std::string sa = std::to_string(a);
            set_vertex(art.occurrence_vertex(j, false, a), lit_color(std::abs(left), left < 0),
                       "y" + sj + "^" + sa);
            set_vertex(art.occurrence_vertex(j, true, a), lit_color(std::abs(right), right < 0),
                       "z" + sj + "^" + sa);
            set_vertex(art.clause_path_vertex(j, a), clause_color(j), "w" + sj + "^" + sa);
            if (a > 1) {
                edges.emplace_back(art.occurrence_vertex(j, false, a - 1),
                                   art.occurrence_vertex(j, false, a));
                edges.emplace_back(art.occurrence_vertex(j, true, a - 1),
                                   art.occurrence_vertex(j, true, a));
                edges.emplace_back(art.clause_path_vertex(j, a - 1), art.clause_path_vertex(j, a));
            }
        }
        edges.emplace_back(art.occurrence_vertex(j, false, 1), art.clause_path_vertex(j, 2));
        edges.emplace_back(art.occurrence_vertex(j, true, 1), art.clause_path_vertex(j, 6));
        edges.emplace_back(art.clause_path_vertex(j, 4), art.central_vertex(1));
    }

    art.color_roles[static_cast<size_t>(central_color)] = "c^v";
    for (int k = 1; k <= 3; ++k) {
        set_vertex(art.central_vertex(k), central_color, "v" + std::to_string(k));
        if (k > 1) edges.emplace_back(art.central_vertex(k - 1), art.central_vertex(k));
    }

    art.tree = build_graph(colors, edges);
    return art;
}

VertexSubset assignment_to_subset(const TreeReductionArtifact& art,
                                  const std::vector<bool>& assignment) {
    const int n = art.num_vars();
    const int m = art.num_clauses();
    if (static_cast<int>(assignment.size()) != n)
        throw Error(ErrorCode::BadAssignmentLength, "assignment has " +
                                                        std::to_string(assignment.size()) +
                                                        " values, formula has " +
                                                        std::to_string(n) + " variables");
    VertexSubset out;
    for (int i = 1; i <= n; ++i) {
        bool value = assignment[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= art.stabilizer_count; ++j)
            out.push_back(art.stabilizer_vertex(i, !value, j));
        // The chosen side anchors its path near the hub, the other side far.
        out.push_back(art.literal_vertex(i, !value, 2));
        out.push_back(art.literal_vertex(i, value, 4));
    }
    for (int j = 1; j <= m; ++j) {
        const auto& [left, right] = art.formula.clauses[static_cast<size_t>(j - 1)];
        if (literal_true(left, assignment)) {
            out.push_back(art.clause_path_vertex(j, 7));
            out.push_back(art.occurrence_vertex(j, true, 1));
        } else if (literal_true(right, assignment)) {
            out.push_back(art.clause_path_vertex(j, 1));
            out.push_back(art.occurrence_vertex(j, false, 1));
        } else {
            out.push_back(art.clause_path_vertex(j, 1));
            out.push_back(art.occurrence_vertex(j, false, 1));
            out.push_back(art.occurrence_vertex(j, true, 7));
        }
    }
    out.push_back(art.central_vertex(3));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> subset_to_assignment(const TreeReductionArtifact& art, const VertexSubset& s) {
    std::vector<char> member(static_cast<size_t>(art.tree.vertex_count), 0);
    for (int v : s) {
        if (v < 0 || v >= art.tree.vertex_count)
            throw Error(ErrorCode::InvalidVertex, "subset member " + std::to_string(v) + " out of range");
        member[static_cast<size_t>(v)] = 1;
    }
    std::vector<bool> assignment(static_cast<size_t>(art.num_vars()));
    for (int i = 1; i <= art.num_vars(); ++i) {
        bool pos_full = true, neg_full = true;
        for (int j = 1; j <= art.stabilizer_count; ++j) {
            pos_full = pos_full && member[static_cast<size_t>(art.stabilizer_vertex(i, false, j))];
            neg_full = neg_full && member[static_cast<size_t>(art.stabilizer_vertex(i, true, j))];
        }
        if (pos_full == neg_full)
            throw Error(ErrorCode::MalformedSolution,
                        "variable " + std::to_string(i) + ": " +
                            (pos_full ? "both stabilizer families present"
                                      : "no stabilizer family fully present"));
        assignment[static_cast<size_t>(i - 1)] = pos_full;
    }
    return assignment;
}

IntervalReductionArtifact vertex_cover_to_intervals(int n,
                                                    const std::vector<std::pair<int, int>>& edges,
                                                    std::optional<int64_t> p2_opt,
                                                    std::optional<int64_t> p3_opt) {
    if (n < 1) throw Error(ErrorCode::ParseError, "graph needs at least one vertex");
    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (size_t j = 0; j < edges.size(); ++j) {
        auto [a, b] = edges[j];
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(ErrorCode::InvalidVertex, "edge endpoint out of range");
        if (a == b) throw Error(ErrorCode::NotCubic, "self-loop at vertex " + std::to_string(a));
        if (!seen.insert(std::minmax(a, b)).second)
            throw Error(ErrorCode::NotCubic, "duplicate edge");
        incident[static_cast<size_t>(a)].push_back(static_cast<int>(j));
        incident[static_cast<size_t>(b)].push_back(static_cast<int>(j));
    }
    for (int v = 0; v < n; ++v)
        if (incident[static_cast<size_t>(v)].size() != 3)
            throw Error(ErrorCode::NotCubic,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(incident[static_cast<size_t>(v)].size()));
    {
        std::vector<char> visited(static_cast<size_t>(n), 0);
        std::queue<int> queue;
        queue.push(0);
        visited[0] = 1;
        int reached = 1;
        std::vector<std::vector<int>> adj(static_cast<size_t>(n));
        for (auto [a, b] : edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adj[static_cast<size_t>(u)])
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    ++reached;
                    queue.push(w);
                }
        }
        if (reached != n) throw Error(ErrorCode::DisconnectedGraph, "cubic graph is disconnected");
    }

    const int m = static_cast<int>(edges.size());
    IntervalReductionArtifact art;
    art.source_n = n;
    art.source_m = m;
    art.source_edges = edges;
    art.p2 = p2_opt.value_or(static_cast<int64_t>(n) * n * n);
    art.p3 = p3_opt.value_or(static_cast<int64_t>(n) * n * n * n);
    if (art.p2 < 1 || art.p3 < 1)
        throw Error(ErrorCode::ParseError, "padding counts must be positive");
    const int64_t total = static_cast<int64_t>(n) * (3 + art.p2 + art.p3) + 1;
    if (total > 20'000'000)
        throw Error(ErrorCode::InstanceTooLarge,
                    "reduction would emit " + std::to_string(total) + " intervals");

    // Unit-free integer layout: gadget windows of width B/2 spaced B apart,
    // width-1 small intervals at even offsets inside windows and at odd
    // offsets in the gaps, one large interval over everything.
    const int64_t B = 2 * (2 * std::max(art.p2, art.p3) + 2);
    const int small_color = m;
    art.family.color_count = m + 1;
    art.family.intervals.reserve(static_cast<size_t>(total));
    art.interval_roles.reserve(static_cast<size_t>(total));

    for (int v = 0; v < n; ++v) {
        const int64_t lo = B * v;
        const int64_t hi = lo + B / 2;
        for (int e : incident[static_cast<size_t>(v)]) {
            art.family.intervals.push_back({lo, hi, e});
            art.interval_roles.push_back("I(e" + std::to_string(e) + ",v" + std::to_string(v) + ")");
        }
        for (int64_t t = 0; t < art.p2; ++t) {
            art.family.intervals.push_back({lo + 2 * t, lo + 2 * t + 1, small_color});
            art.interval_roles.push_back("small(X" + std::to_string(v) + "," + std::to_string(t) + ")");
        }
    }
    for (int v = 0; v < n; ++v) {
        const int64_t gap_lo = B * v + B / 2 + 1;
        for (int64_t t = 0; t < art.p3; ++t) {
            art.family.intervals.push_back({gap_lo + 2 * t, gap_lo + 2 * t + 1, small_color});
            art.interval_roles.push_back("gap(" + std::to_string(v) + "," + std::to_string(t) + ")");
        }
    }
    // Color of the large interval matches edge 0's color class.
    art.family.intervals.push_back({-1, B * n, 0});
    art.interval_roles.push_back("I_l");
    return art;
}

namespace {

void check_cover(const IntervalReductionArtifact& art, const std::vector<int>& cover,
                 ErrorCode failure) {
    std::vector<char> in_cover(static_cast<size_t>(art.source_n), 0);
    for (int v : cover) {
        if (v < 0 || v >= art.source_n)
            throw Error(ErrorCode::InvalidVertex, "cover member " + std::to_string(v) + " out of range");
        in_cover[static_cast<size_t>(v)] = 1;
    }
    for (auto [a, b] : art.source_edges)
        if (!in_cover[static_cast<size_t>(a)] && !in_cover[static_cast<size_t>(b)])
            throw Error(failure, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") not covered");
}

} // namespace

VertexSubset cover_to_subset(const IntervalReductionArtifact& art, const std::vector<int>& cover) {
    check_cover(art, cover, ErrorCode::NotACover);
    std::vector<int> sorted_cover = cover;
    std::sort(sorted_cover.begin(), sorted_cover.end());
    sorted_cover.erase(std::unique(sorted_cover.begin(), sorted_cover.end()), sorted_cover.end());
    VertexSubset out;
    for (int v : sorted_cover) {
        const int64_t base = art.gadget_base(v);
        for (int64_t t = 0; t < art.gadget_size(); ++t)
            out.push_back(static_cast<int>(base + t));
    }
    return out;
}

std::vector<int> subset_to_cover(const IntervalReductionArtifact& art, const VertexSubset& s) {
    const int64_t total = static_cast<int64_t>(art.family.intervals.size());
    std::vector<char> member(static_cast<size_t>(total), 0);
    for (int v : s) {
        if (v < 0 || v >= total)
            throw Error(ErrorCode::InvalidVertex, "subset member " + std::to_string(v) + " out of range");
        member[static_cast<size_t>(v)] = 1;
    }
    if (member[static_cast<size_t>(art.large_interval_id())])
        throw Error(ErrorCode::ContainsUniversalInterval,
                    "subset contains the large interval");
    std::vector<int> cover;
    for (int v = 0; v < art.source_n; ++v) {
        int64_t base = art.gadget_base(v);
        int64_t count = 0;
        for (int64_t t = 0; t < art.gadget_size(); ++t)
            count += member[static_cast<size_t>(base + t)];
        if (count == art.gadget_size())
            cover.push_back(v);
        else if (count != 0)
            throw Error(ErrorCode::PartialGadget, "gadget of vertex " + std::to_string(v) +
                                                      " is only partially present");
    }
    check_cover(art, cover, ErrorCode::NotACoverAfterDecode);
    return cover;
}

} // namespace mcs
