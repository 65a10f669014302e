#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lir/bipartite.hpp"
#include "lir/enumerate.hpp"

using namespace lir;

namespace {

std::vector<int> join_degrees(const SimpleGraph& g, const ParityEdgeSet& j) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : j.edges) {
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    return deg;
}

bool is_forest(const SimpleGraph& g, const ParityEdgeSet& j) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (EdgeId e : j.edges) {
        const int a = find(g.edge(e).u);
        const int b = find(g.edge(e).v);
        if (a == b) {
            return false;
        }
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

}  // namespace

TEST_CASE("bipartition") {
    auto b = bipartition(make_path(5));
    CHECK(b.x == std::vector<Vertex>{0, 2, 4});
    CHECK(b.y == std::vector<Vertex>{1, 3});
    CHECK_FALSE(try_bipartition(make_cycle(5)).has_value());
    CHECK_THROWS_AS(bipartition(make_cycle(5)), GraphError);
    CHECK_THROWS_AS(bipartition(SimpleGraph(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("path system on a path") {
    SimpleGraph p = make_path(6);
    std::vector<Vertex> t{1, 4};
    auto j = path_system(p, t);
    CHECK(j.edges == std::vector<EdgeId>{1, 2, 3});
    std::vector<Vertex> none;
    CHECK(path_system(p, none).edges.empty());
}

TEST_CASE("path system errors") {
    SimpleGraph p = make_path(4);
    std::vector<Vertex> odd{0, 1, 2};
    CHECK_THROWS_AS(path_system(p, odd), GraphError);
    std::vector<Vertex> dup{1, 1};
    CHECK_THROWS_AS(path_system(p, dup), GraphError);
    std::vector<Vertex> bad{0, 9};
    CHECK_THROWS_AS(path_system(p, bad), GraphError);
    std::vector<Vertex> ok{0, 1};
    CHECK_THROWS_AS(path_system(SimpleGraph(4, {{0, 1}, {2, 3}}), ok), GraphError);
}

TEST_CASE("path system parity over random instances") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + static_cast<int>(rng() % 30);
        SimpleGraph g = random_connected_graph(n, 0.15, rng);
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t count = 2 * (rng() % (static_cast<std::size_t>(n) / 2 + 1));
        std::vector<Vertex> t(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
        auto j = path_system(g, t);
        CHECK(std::is_sorted(j.edges.begin(), j.edges.end()));
        CHECK(is_forest(g, j));
        const std::set<Vertex> ts(t.begin(), t.end());
        const auto deg = join_degrees(g, j);
        for (Vertex v = 0; v < n; ++v) {
            CHECK((deg[static_cast<std::size_t>(v)] % 2 == 1) == (ts.count(v) == 1));
        }
    }
}

TEST_CASE("twin split") {
    // X = {0, 2, 4}, Y = {1, 3, 5}; path 0-1-2-3-4-5 plus 0-3
    SimpleGraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 3}});
    auto bip = bipartition(g);
    TwinSplit ts = find_twin_split(g, bip);
    REQUIRE_FALSE(ts.s.empty());
    std::set<Vertex> t(ts.t.begin(), ts.t.end());
    for (Vertex s : ts.s) {
        auto nb = g.neighbors(s);
        CHECK(std::set<Vertex>(nb.begin(), nb.end()) == t);
    }
    std::vector<Vertex> keep = ts.xp;
    keep.insert(keep.end(), ts.yp.begin(), ts.yp.end());
    CHECK(induced_subgraph(g, keep).graph.is_connected());
    CHECK(ts.s.size() + ts.t.size() + keep.size() == 6);
    CHECK_THROWS_AS(find_twin_split(make_path(4), bipartition(make_path(4))), GraphError);
}

TEST_CASE("twin split invariants over exhaustive odd-odd graphs") {
    for (int n = 2; n <= 8; n += 2) {
        for (const SimpleGraph& g : enumerate_connected_bipartite(n)) {
            auto bip = bipartition(g);
            if (bip.x.size() % 2 == 0 || g.edge_count() == static_cast<int>(bip.x.size() * bip.y.size())) {
                continue;
            }
            TwinSplit ts = find_twin_split(g, bip);
            CHECK(ts.sides.x.size() % 2 == 1);
            std::vector<Vertex> keep = ts.xp;
            keep.insert(keep.end(), ts.yp.begin(), ts.yp.end());
            CHECK(induced_subgraph(g, keep).graph.is_connected());
        }
    }
}

TEST_CASE("bipartite colorer on small families") {
    CHECK(verify(color_double_bipartite(make_path(3))).valid());
    CHECK(verify(color_double_bipartite(make_cycle(6))).valid());
    CHECK(verify(color_double_bipartite(make_star(5))).valid());
    std::vector<int> k33{3, 3};
    CHECK(verify(color_double_bipartite(make_complete_multipartite(k33))).valid());
    CHECK_THROWS_AS(color_double_bipartite(make_path(2)), GraphError);
    CHECK_THROWS_AS(color_double_bipartite(make_cycle(5)), GraphError);
}

TEST_CASE("bipartite colorer: exhaustive n <= 8") {
    int count = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const SimpleGraph& g : enumerate_connected_bipartite(n)) {
            Decomposition d = color_double_bipartite(g);
            CHECK(d.colors() == 2);
            CHECK(verify(d).valid());
            ++count;
        }
    }
    CHECK(count == 1 + 3 + 5 + 17 + 44 + 182);
}

TEST_CASE("bipartite colorer: random graphs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + static_cast<int>(rng() % 40);
        const double p = 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        SimpleGraph g = random_connected_bipartite(n, p, rng);
        CAPTURE(i);
        CHECK(verify(color_double_bipartite(g)).valid());
    }
}
