#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <unistd.h>

#include "mcs/io.hpp"
#include "mcs/random_tree.hpp"
#include "test_support.hpp"

using namespace mcs;
namespace fs = std::filesystem;

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

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("mcs_io_tests_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_text(const TempDir& dir, const std::string& name, const std::string& text) {
    std::string p = dir.file(name);
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("instance files") {
    TempDir dir;
    auto ok = write_text(dir, "ok.json", R"({"colors":[0,1],"edges":[[0,1]]})");
    auto g = parse_instance(ok);
    CHECK(g.vertex_count == 2);
    CHECK(g.color_count == 2);

    auto bad = write_text(dir, "bad.json", "{\"colors\": [0, 1");
    CHECK(code_of([&] { parse_instance(bad); }) == ErrorCode::ParseError);

    auto gap = write_text(dir, "gap.json", R"({"colors":[0,2],"edges":[[0,1]]})");
    CHECK(code_of([&] { parse_instance(gap); }) == ErrorCode::ColorGap);

    CHECK(code_of([&] { parse_instance(dir.file("missing.json")); }) == ErrorCode::IoError);

    // write/read round trip
    auto path = dir.file("round.json");
    write_instance(path, g);
    auto h = parse_instance(path);
    CHECK(h.colors == g.colors);
    CHECK(h.adjacency == g.adjacency);
}

TEST_CASE("subset files") {
    TempDir dir;
    auto p = write_text(dir, "s.json", R"({"subset":[3,1,2]})");
    CHECK(parse_subset(p) == VertexSubset{1, 2, 3});
    auto out = dir.file("s2.json");
    write_subset(out, {0, 4});
    CHECK(parse_subset(out) == VertexSubset{0, 4});
    auto bad = write_text(dir, "bad.json", R"({"elements":[1]})");
    CHECK(code_of([&] { parse_subset(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("interval files") {
    TempDir dir;
    IntervalFamily f;
    f.intervals = {{0, 2, 0}, {1, 3, 1}};
    f.color_count = 2;
    auto p = dir.file("iv.json");
    write_intervals(p, f);
    auto g = parse_intervals(p);
    REQUIRE(g.intervals.size() == 2);
    CHECK(g.intervals[1].lo == 1);
    CHECK(g.color_count == 2);

    auto bad = write_text(dir, "bad.json", R"({"intervals":[{"lo":5,"hi":1,"color":0}]})");
    CHECK(code_of([&] { parse_intervals(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("dimacs parsing") {
    TempDir dir;
    auto fig = write_text(dir, "f.cnf", "c figure formula\np cnf 3 3\n1 2 0\n1 -3 0\n-2 -3 0\n");
    auto f = parse_dimacs_2cnf(fig);
    CHECK(f.num_vars == 3);
    CHECK(f.clauses == std::vector<std::pair<int, int>>{{1, 2}, {1, -3}, {-2, -3}});

    auto wide = write_text(dir, "w.cnf", "p cnf 3 1\n1 2 3 0\n");
    CHECK(code_of([&] { parse_dimacs_2cnf(wide); }) == ErrorCode::NotTwoCnf);

    auto empty = write_text(dir, "e.cnf", "p cnf 1 0\n");
    auto fe = parse_dimacs_2cnf(empty);
    CHECK(fe.num_vars == 1);
    CHECK(fe.clause_count() == 0);

    auto noheader = write_text(dir, "nh.cnf", "1 2 0\n");
    CHECK(code_of([&] { parse_dimacs_2cnf(noheader); }) == ErrorCode::ParseError);

    auto range = write_text(dir, "r.cnf", "p cnf 2 1\n1 3 0\n");
    CHECK(code_of([&] { parse_dimacs_2cnf(range); }) == ErrorCode::ParseError);

    auto spanning = write_text(dir, "sp.cnf", "p cnf 2 2\n1 2\n0 -1 -2 0\n");
    auto fsp = parse_dimacs_2cnf(spanning);
    CHECK(fsp.clauses == std::vector<std::pair<int, int>>{{1, 2}, {-1, -2}});
}

TEST_CASE("edge list parsing") {
    TempDir dir;
    auto p = write_text(dir, "g.json", R"({"edges":[[0,1],[1,2]]})");
    auto [n, edges] = parse_edge_list(p);
    CHECK(n == 3);
    CHECK(edges.size() == 2);

    auto q = write_text(dir, "g2.json", R"({"n":5,"edges":[[0,1]]})");
    CHECK(parse_edge_list(q).first == 5);
}

TEST_CASE("solve result serialization is deterministic") {
    SolveResult r;
    r.size = 2;
    r.subset = {1, 3};
    r.stats.subsets_examined = 7;
    r.stats.dp_evaluations = 0;
    r.stats.elapsed = std::chrono::duration<double>(1.5); // must not leak into the payload
    auto a = solve_result_to_json(r, "brute");
    r.stats.elapsed = std::chrono::duration<double>(99.0);
    auto b = solve_result_to_json(r, "brute");
    CHECK(a == b);
    CHECK(a.find("1.5") == std::string::npos);
}

TEST_CASE("random tree generator") {
    auto a = gen_random_tree(40, 3, 7);
    auto b = gen_random_tree(40, 3, 7);
    CHECK(a.colors == b.colors);
    CHECK(a.adjacency == b.adjacency);
    CHECK(gen_random_tree(40, 3, 8).colors != a.colors);

    size_t degree_sum = 0;
    for (const auto& nb : a.adjacency) degree_sum += nb.size();
    CHECK(degree_sum == 2 * (40 - 1));
    // palette compaction happened at build time or the constructor threw
    CHECK(a.color_count <= 3);

    TempDir dir;
    auto p1 = dir.file("t1.json");
    auto p2 = dir.file("t2.json");
    write_instance(p1, a);
    write_instance(p2, b);
    CHECK(read_bytes(p1) == read_bytes(p2));
}

TEST_CASE("reduction role files") {
    TempDir dir;
    Max2SatInstance f;
    f.num_vars = 1;
    f.clauses = {{1, 1}};
    auto art = max2sat_to_tree(f, 9);
    auto p = dir.file("roles.json");
    write_tree_roles(p, art);
    auto text = read_bytes(p);
    CHECK(text.find("\"s1^9\"") != std::string::npos);
    CHECK(text.find("\"c^v\"") != std::string::npos);

    auto iart = vertex_cover_to_intervals(4, test::k4_edges(), 2, 2);
    auto q = dir.file("iroles.json");
    write_interval_roles(q, iart);
    auto itext = read_bytes(q);
    CHECK(itext.find("\"I_l\"") != std::string::npos);
    CHECK(itext.find("\"I(e0,v0)\"") != std::string::npos);
}
