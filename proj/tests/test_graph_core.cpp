#include <doctest.h>

#include <functional>
#include <random>

#include "mcs/colored_graph.hpp"
#include "test_support.hpp"

using namespace mcs;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an mcs::Error");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("build_graph accepts small instances") {
    auto g = build_graph({0, 1}, {{0, 1}});
    CHECK(g.vertex_count == 2);
    CHECK(g.color_count == 2);
    CHECK(g.neighbors(0) == std::vector<int>{1});

    auto p3 = build_graph({0, 0, 0}, {{0, 1}, {1, 2}});
    CHECK(p3.color_count == 1);
    CHECK(p3.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("build_graph rejects invalid input") {
    CHECK(code_of([] { build_graph({0, 1}, {}); }) == ErrorCode::DisconnectedGraph);
    CHECK(code_of([] { build_graph({}, {}); }) == ErrorCode::ColorGap);
    CHECK(code_of([] { build_graph({0, 0}, {{0, 0}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { build_graph({0, 0}, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { build_graph({0, 2}, {{0, 1}}); }) == ErrorCode::ColorGap);
    CHECK(code_of([] { build_graph({0, 0}, {{0, 2}}); }) == ErrorCode::InvalidVertex);
}

TEST_CASE("distances_from") {
    auto p3 = build_graph({0, 0, 0}, {{0, 1}, {1, 2}});
    CHECK(distances_from(p3, 0) == std::vector<int>{0, 1, 2});

    auto star = build_graph({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(distances_from(star, 1) == std::vector<int>{1, 0, 2, 2});

    CHECK(code_of([&] { distances_from(p3, 3); }) == ErrorCode::InvalidVertex);
}

TEST_CASE("nearest_neighbors keeps the whole tie set") {
    auto p3 = build_graph({0, 1, 0}, {{0, 1}, {1, 2}});
    CHECK(nearest_neighbors(p3, 1, {0, 2}) == VertexSubset{0, 2});
    CHECK(nearest_neighbors(p3, 0, {1, 2}) == VertexSubset{1});
    CHECK(nearest_neighbors(p3, 1, {0, 1, 2}) == VertexSubset{1});
    CHECK(code_of([&] { nearest_neighbors(p3, 0, {}); }) == ErrorCode::EmptySubset);
}

TEST_CASE("consistency verdicts") {
    auto edge = build_graph({0, 1}, {{0, 1}});
    CHECK(is_consistent(edge, {0, 1}));
    CHECK(first_inconsistent_vertex(edge, {0}) == 1);

    auto p4 = build_graph({0, 0, 1, 1}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_consistent(p4, {1, 2}));
    CHECK(is_consistent(p4, {0, 3}));
    // vertices 2 and 3 both lose their color; the smallest id is reported
    CHECK(first_inconsistent_vertex(p4, {0}) == 2);
    CHECK(code_of([&] { is_consistent(p4, {}); }) == ErrorCode::EmptySubset);
}

TEST_CASE("full vertex set is always consistent") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 10);
        int c = 1 + static_cast<int>(rng() % 4);
        auto g = test::random_colored_tree(rng, n, c);
        VertexSubset all(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
        CHECK(is_consistent(g, all));
    }
}

TEST_CASE("consistent subsets hit every color") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 8);
        int c = 1 + static_cast<int>(rng() % 3);
        auto g = test::random_colored_tree(rng, n, c);
        uint64_t mask = rng() % (uint64_t{1} << n);
        if (mask == 0) mask = 1;
        VertexSubset s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(v);
        if (!is_consistent(g, s)) continue;
        std::vector<char> seen(static_cast<size_t>(g.color_count), 0);
        for (int v : s) seen[static_cast<size_t>(g.color_of(v))] = 1;
        for (int q = 0; q < g.color_count; ++q) CHECK(seen[static_cast<size_t>(q)]);
    }
}

TEST_CASE("nearest_neighbors is idempotent under restriction") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = test::random_colored_tree(rng, n, 2);
        VertexSubset s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng() % n));
        int v = static_cast<int>(rng() % n);
        auto nn = nearest_neighbors(g, v, s);
        CHECK(nearest_neighbors(g, v, nn) == nn);
    }
}

TEST_CASE("distances are symmetric and satisfy the triangle inequality") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = test::random_colored_tree(rng, n, 2);
        auto dist = test::all_pairs_distances(g);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(dist[static_cast<size_t>(a)][static_cast<size_t>(b)] ==
                      dist[static_cast<size_t>(b)][static_cast<size_t>(a)]);
                for (int m = 0; m < n; ++m)
                    CHECK(dist[static_cast<size_t>(a)][static_cast<size_t>(b)] <=
                          dist[static_cast<size_t>(a)][static_cast<size_t>(m)] +
                              dist[static_cast<size_t>(m)][static_cast<size_t>(b)]);
            }
    }
}

TEST_CASE("intervals_to_graph basic layouts") {
    IntervalFamily two;
    two.intervals = {{0, 2, 0}, {1, 3, 0}};
    two.color_count = 1;
    auto g = intervals_to_graph(two);
    CHECK(g.vertex_count == 2);
    CHECK(g.neighbors(0) == std::vector<int>{1});

    IntervalFamily apart;
    apart.intervals = {{0, 1, 0}, {2, 3, 0}};
    apart.color_count = 1;
    CHECK(code_of([&] { intervals_to_graph(apart); }) == ErrorCode::DisconnectedGraph);

    IntervalFamily star;
    star.intervals = {{0, 10, 0}, {2, 3, 0}, {4, 5, 0}};
    star.color_count = 1;
    auto sg = intervals_to_graph(star);
    CHECK(sg.neighbors(0) == std::vector<int>{1, 2});
    CHECK(sg.neighbors(1) == std::vector<int>{0});

    IntervalFamily touching;
    touching.intervals = {{0, 1, 0}, {1, 2, 0}};
    touching.color_count = 1;
    CHECK(intervals_to_graph(touching).neighbors(0) == std::vector<int>{1});
}

TEST_CASE("interval adjacency equals pairwise intersection") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        IntervalFamily f;
        int k = 2 + static_cast<int>(rng() % 8);
        // one long interval keeps the family connected
        f.intervals.push_back({0, 100, 0});
        for (int i = 1; i < k; ++i) {
            int64_t lo = static_cast<int64_t>(rng() % 100);
            int64_t hi = lo + static_cast<int64_t>(rng() % 10);
            f.intervals.push_back({lo, hi, static_cast<int>(rng() % 2)});
        }
        bool color1 = false;
        for (auto& iv : f.intervals) color1 = color1 || iv.color == 1;
        f.color_count = color1 ? 2 : 1;
        auto g = intervals_to_graph(f);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                bool meets = f.intervals[static_cast<size_t>(a)].lo <= f.intervals[static_cast<size_t>(b)].hi &&
                             f.intervals[static_cast<size_t>(b)].lo <= f.intervals[static_cast<size_t>(a)].hi;
                bool adjacent = std::find(g.neighbors(a).begin(), g.neighbors(a).end(), b) !=
                                g.neighbors(a).end();
                CHECK(meets == adjacent);
            }
    }
}
