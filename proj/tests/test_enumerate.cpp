#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lir/bipartite.hpp"
#include "lir/enumerate.hpp"
#include "lir/io.hpp"

using namespace lir;

namespace {

SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    SimpleGraph h(g.vertex_count());
    for (const auto& e : g.edges()) {
        h.add_edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]);
    }
    return h;
}

}  // namespace

TEST_CASE("connected graph counts") {
    const int expect[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(static_cast<int>(enumerate_connected(n).size()) == expect[n]);
    }
    CHECK_THROWS_AS(enumerate_connected(0), GraphError);
    CHECK_THROWS_AS(enumerate_connected(9), GraphError);
}

TEST_CASE("connected bipartite graph counts") {
    const int expect[] = {0, 1, 1, 1, 3, 5, 17, 44, 182};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        auto gs = enumerate_connected_bipartite(n);
        CHECK(static_cast<int>(gs.size()) == expect[n]);
        for (const auto& g : gs) {
            CHECK(g.is_connected());
            CHECK(try_bipartition(g).has_value());
        }
    }
    CHECK_THROWS_AS(enumerate_connected_bipartite(11), GraphError);
}

TEST_CASE("enumerated graphs are connected and pairwise non-isomorphic") {
    auto gs = enumerate_connected(6);
    std::set<std::string> keys;
    for (const auto& g : gs) {
        CHECK(g.is_connected());
        keys.insert(canonical_key(g));
    }
    CHECK(keys.size() == gs.size());
    auto three = enumerate_connected(3);
    std::set<std::string> g6;
    for (const auto& g : three) {
        g6.insert(to_graph6(g));
    }
    CHECK(g6 == std::set<std::string>{canonical_key(make_path(3)), canonical_key(make_complete(3))});
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const double p = static_cast<double>(rng() % 100) / 100.0;
        SimpleGraph g = random_connected_graph(n, p, rng);
        const std::string key = canonical_key(g);
        for (int r = 0; r < 3; ++r) {
            CHECK(canonical_key(relabel(g, rng)) == key);
        }
        CHECK(canonical_form(g).edge_count() == g.edge_count());
    }
    for (const SimpleGraph& g : {make_cycle(11), make_complete(11), make_wheel(11)}) {
        CHECK(canonical_key(relabel(g, rng)) == canonical_key(g));
    }
    CHECK_THROWS_AS(canonical_form(make_path(12)), GraphError);
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // equal degree sequences
    SimpleGraph c6 = make_cycle(6);
    SimpleGraph two_c3(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(canonical_key(c6) != canonical_key(two_c3));
    SimpleGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    std::vector<int> k33{3, 3};
    CHECK(canonical_key(prism) != canonical_key(make_complete_multipartite(k33)));
}

TEST_CASE("random generators") {
    std::mt19937_64 a(5);
    std::mt19937_64 b(5);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i;
        SimpleGraph g = random_connected_graph(n, 0.1, a);
        CHECK(g.vertex_count() == n);
        CHECK(g.is_connected());
        CHECK(g == random_connected_graph(n, 0.1, b));
        SimpleGraph h = random_connected_bipartite(n, 0.2, a);
        CHECK(h.is_connected());
        CHECK(try_bipartition(h).has_value());
        CHECK(h == random_connected_bipartite(n, 0.2, b));
    }
    CHECK_THROWS_AS(random_connected_bipartite(1, 0.5, a), GraphError);
}
