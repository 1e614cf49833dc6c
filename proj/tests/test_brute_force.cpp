#include <doctest.h>

#include <functional>
#include <random>

#include "mcs/brute_force.hpp"
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

TEST_CASE("color count lower bound") {
    CHECK(color_count_lower_bound(build_graph({0, 0, 0}, {{0, 1}, {1, 2}})) == 1);
    CHECK(color_count_lower_bound(build_graph({0, 1}, {{0, 1}})) == 2);
}

TEST_CASE("brute force anchors") {
    auto triangle = build_graph({0, 0, 0}, {{0, 1}, {0, 2}, {1, 2}});
    auto r = mcs_brute_force(triangle);
    CHECK(r.size == 1);
    CHECK(r.subset == VertexSubset{0});

    CHECK(mcs_brute_force(build_graph({0, 1}, {{0, 1}})).size == 2);

    // star K_{1,3}: no proper subset is consistent (cross-checked by the
    // unpruned enumerator below against the frozen value)
    auto star = build_graph({0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(test::naive_mcs(star).size == 4);
    CHECK(mcs_brute_force(star).size == 4);

    // path r,r,b,b: {1,2} works, no singleton does
    auto p4 = build_graph({0, 0, 1, 1}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(test::naive_mcs(p4).size == 2);
    auto rp = mcs_brute_force(p4);
    CHECK(rp.size == 2);
    CHECK(is_consistent(p4, rp.subset));
}

TEST_CASE("result invariants and minimality on random trees") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        int c = 1 + static_cast<int>(rng() % 3);
        auto g = test::random_colored_tree(rng, n, c);
        auto r = mcs_brute_force(g);
        CHECK(is_consistent(g, r.subset));
        CHECK(static_cast<int>(r.subset.size()) == r.size);
        CHECK(r.size >= color_count_lower_bound(g));
        auto naive = test::naive_mcs(g);
        CHECK(r.size == naive.size);
        // first lexicographic witness of minimum size
        CHECK(r.subset == naive.subset);
    }
}

TEST_CASE("pruning does not change the optimum") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        int c = 1 + static_cast<int>(rng() % 4);
        auto g = test::random_colored_tree(rng, n, c);
        CHECK(mcs_brute_force(g).size == test::naive_mcs(g).size);
    }
}

TEST_CASE("caps and budget") {
    std::mt19937_64 rng(41);
    auto g = test::random_colored_tree(rng, 23, 2);
    CHECK(code_of([&] { mcs_brute_force(g); }) == ErrorCode::InstanceTooLarge);

    BruteForceOptions relaxed;
    relaxed.vertex_cap = 30;
    CHECK(mcs_brute_force(g, relaxed).size >= 1);

    // raising the vertex cap does not open the door to untracked colors
    std::vector<int> rainbow(70);
    std::vector<std::pair<int, int>> chain;
    for (int v = 0; v < 70; ++v) rainbow[static_cast<size_t>(v)] = v;
    for (int v = 1; v < 70; ++v) chain.push_back({v - 1, v});
    auto wide = build_graph(rainbow, chain);
    BruteForceOptions huge;
    huge.vertex_cap = 100;
    CHECK(code_of([&] { mcs_brute_force(wide, huge); }) == ErrorCode::InstanceTooLarge);

    // an impossible budget on a graph whose answer needs many candidates
    auto star = build_graph({0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    BruteForceOptions tight;
    tight.budget = 2;
    CHECK(code_of([&] { mcs_brute_force(star, tight); }) == ErrorCode::BudgetExhausted);
}
