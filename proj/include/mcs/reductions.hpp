#ifndef MCS_REDUCTIONS_HPP
#define MCS_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcs/colored_graph.hpp"

namespace mcs {

/// 2-CNF formula. Literals are signed 1-based variable indices:
/// +k is variable k, -k its negation.
struct Max2SatInstance {
    int num_vars = 0;
    std::vector<std::pair<int, int>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

bool literal_true(int literal, const std::vector<bool>& assignment);

/// Colored tree encoding a 2-CNF formula: one variable gadget per
/// variable (two 4-vertex literal paths plus M stabilizer pairs), one
/// clause gadget per clause (three 7-vertex paths), and a 3-vertex
/// central path everything hangs off.
struct TreeReductionArtifact {
    ColoredGraph tree;
    Max2SatInstance formula;
    int64_t stabilizer_count = 0; // M
    bool desk_scale = false;      // below the sizes the hardness argument assumes
    std::vector<std::string> vertex_roles; // by vertex id
    std::vector<std::string> color_roles;  // by color id

    int num_vars() const { return formula.num_vars; }
    int num_clauses() const { return formula.clause_count(); }

    // Deterministic vertex layout, all indices 1-based to match role names.
    int literal_vertex(int var, bool negated, int a) const;      // x_var^a / ~x_var^a
    int stabilizer_vertex(int var, bool negated, int j) const;   // s_var^j / ~s_var^j
    int occurrence_vertex(int clause, bool right, int a) const;  // y_clause^a / z_clause^a
    int clause_path_vertex(int clause, int a) const;             // w_clause^a
    int central_vertex(int k) const;                             // v_k
};

/// Size bound n(M+2) + 2k + 3(m-k) + 1 tied to satisfying k clauses.
int64_t n_of_k(int64_t n, int64_t m, int64_t stabilizers, int64_t k);

/// Smallest M the gadget counting argument supports.
inline int64_t min_stabilizer_count(int64_t n, int64_t m) { return 2 * n + 3 * m + 2; }

TreeReductionArtifact max2sat_to_tree(const Max2SatInstance& formula,
                                      std::optional<int64_t> stabilizers = std::nullopt);

/// The consistent subset a truth assignment induces; its size is
/// n_of_k(n, m, M, satisfied clause count).
VertexSubset assignment_to_subset(const TreeReductionArtifact& art,
                                  const std::vector<bool>& assignment);

/// Recovers the assignment from which stabilizer family each variable
/// gadget contributes in full.
std::vector<bool> subset_to_assignment(const TreeReductionArtifact& art, const VertexSubset& s);

/// Interval family encoding a cubic graph: per vertex a gadget of three
/// coincident unit intervals (one per incident edge) plus p2 disjoint
/// small intervals, p3 small intervals in each inter-gadget gap, and one
/// large interval containing everything.
struct IntervalReductionArtifact {
    IntervalFamily family;
    int source_n = 0;
    int source_m = 0;
    std::vector<std::pair<int, int>> source_edges;
    int64_t p2 = 0;
    int64_t p3 = 0;
    std::vector<std::string> interval_roles; // by interval id

    int64_t gadget_size() const { return 3 + p2; }
    int64_t gadget_base(int v) const { return v * gadget_size(); }
    int64_t gap_small_id(int v, int64_t t) const {
        return static_cast<int64_t>(source_n) * gadget_size() + v * p3 + t;
    }
    int64_t large_interval_id() const {
        return static_cast<int64_t>(source_n) * (gadget_size() + p3);
    }
};

IntervalReductionArtifact vertex_cover_to_intervals(int n,
                                                    const std::vector<std::pair<int, int>>& edges,
                                                    std::optional<int64_t> p2 = std::nullopt,
                                                    std::optional<int64_t> p3 = std::nullopt);

/// Interval ids of the union of the cover's gadgets; consistent on the
/// derived interval graph whenever cover is a vertex cover.
VertexSubset cover_to_subset(const IntervalReductionArtifact& art, const std::vector<int>& cover);

/// Vertices whose gadgets appear in full; validated to be a vertex cover.
std::vector<int> subset_to_cover(const IntervalReductionArtifact& art, const VertexSubset& s);

} // namespace mcs

#endif
