#include <doctest.h>

#include <vector>

#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

using namespace lir;

TEST_CASE("edges are stored with u < v") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e.other(2) == 5);
    CHECK(e.touches(5));
    CHECK_FALSE(e.touches(3));
    CHECK(Edge(1, 4) == Edge(4, 1));
}

TEST_CASE("add_edge rejects loops, duplicates and bad ids") {
    SimpleGraph g(3);
    CHECK(g.add_edge(0, 1) == 0);
    CHECK(g.add_edge(2, 1) == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    CHECK_THROWS_AS(g.add_edge(-1, 0), GraphError);
    CHECK_THROWS_AS(SimpleGraph(-1), GraphError);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("adjacency queries") {
    SimpleGraph g(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(0) == 1);
    CHECK(g.find_edge(2, 1) == 1);
    CHECK(g.find_edge(0, 2) == -1);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2, 3});
    CHECK(g.is_connected());
    SimpleGraph h(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(h.is_connected());
    CHECK(connected_components(h) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
}

TEST_CASE("induced subgraph keeps order and maps both ways") {
    SimpleGraph g = make_cycle(5);
    std::vector<Vertex> keep{3, 1, 2};
    auto sub = induced_subgraph(g, keep);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.to_parent == keep);
    CHECK(sub.to_sub[0] == -1);
    CHECK(sub.to_sub[3] == 0);
    CHECK(sub.graph.has_edge(0, 2));  // 3 -- 2
    CHECK(sub.graph.has_edge(1, 2));  // 1 -- 2
}

TEST_CASE("generators") {
    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_path(6).edge_count() == 5);
    CHECK(make_cycle(7).edge_count() == 7);
    CHECK_THROWS_AS(make_cycle(2), GraphError);
    SimpleGraph w = make_wheel(6);
    CHECK(w.edge_count() == 10);
    CHECK(w.degree(5) == 5);
    CHECK(make_complete(6).edge_count() == 15);
    std::vector<int> sizes{2, 2, 3};
    SimpleGraph k = make_complete_multipartite(sizes);
    CHECK(k.vertex_count() == 7);
    CHECK(k.edge_count() == 4 + 6 + 6);
    CHECK_FALSE(k.has_edge(0, 1));
    CHECK_FALSE(k.has_edge(4, 6));
    SimpleGraph b = make_bowtie();
    CHECK(b.vertex_count() == 5);
    CHECK(b.degree(0) == 4);
    CHECK(make_star(4).degree(0) == 4);
}

TEST_CASE("multigraph degrees and local irregularity") {
    SimpleGraph p = make_path(3);
    Multigraph m(p, std::vector<int>{1, 2});
    CHECK(m.degree(1) == 3);
    CHECK(is_locally_irregular(m));
    CHECK_FALSE(is_locally_irregular(Multigraph(make_path(4), 1)));
    CHECK(is_locally_irregular(Multigraph(make_star(3), 2)));
    CHECK_THROWS_AS(Multigraph(p, std::vector<int>{1}), GraphError);
    CHECK_THROWS_AS(Multigraph(p, std::vector<int>{1, 0}), GraphError);
    CHECK_THROWS_AS(double_graph(SimpleGraph(3)), GraphError);
}

TEST_CASE("doubled triangle RR, RB, BB verifies") {
    SimpleGraph c3 = make_cycle(3);
    std::vector<Split> s{Split::RR, Split::RB, Split::BB};
    Decomposition d = from_splits(c3, s);
    CHECK(color_degree(d, 0, Decomposition::kRed) == 2);
    CHECK(color_degree(d, 1, Decomposition::kRed) == 3);
    CHECK(color_degree(d, 2, Decomposition::kRed) == 1);
    CHECK(color_degree(d, 0, Decomposition::kBlue) == 2);
    CHECK(color_degree(d, 2, Decomposition::kBlue) == 3);
    CHECK(verify(d).valid());
    CHECK(d.colors_used() == 2);
}

TEST_CASE("verify lists each tied color-edge pair") {
    SimpleGraph c3 = make_cycle(3);
    std::vector<Split> s{Split::RR, Split::RR, Split::BB};
    Decomposition d = from_splits(c3, s);
    // red: 0:2, 1:4, 2:2; edge 1-2 ok, edge 0-1 ok; blue: 0:2, 2:2 tie on edge 2-0
    auto report = verify(d);
    REQUIRE(report.conflicts.size() == 1);
    CHECK(report.conflicts[0] == Conflict{Decomposition::kBlue, Edge(0, 2), 2});
}

TEST_CASE("all red doubled K2 is invalid for every k") {
    SimpleGraph k2(2, {{0, 1}});
    for (int k = 1; k <= 4; ++k) {
        Decomposition d(double_graph(k2), k);
        CHECK_FALSE(verify(d).valid());
    }
}

TEST_CASE("decomposition rows must sum to the multiplicity") {
    Multigraph m = double_graph(make_path(3));
    CHECK_THROWS_AS(Decomposition(m, 2, std::vector<int>{2, 0, 1, 0}), GraphError);
    CHECK_THROWS_AS(Decomposition(m, 2, std::vector<int>{2, 0}), GraphError);
    CHECK_THROWS_AS(Decomposition(m, 0), GraphError);
    CHECK_THROWS_AS(Decomposition(m, 2, 2), GraphError);
    Decomposition d(m, 3, std::vector<int>{1, 0, 1, 0, 2, 0});
    CHECK(d.count(1, 1) == 2);
    std::vector<int> bad{1, 1, 1};
    CHECK_THROWS_AS(d.set(0, bad), GraphError);
    CHECK_THROWS_AS(d.split(0), GraphError);  // three colors
    std::vector<int> row{0, 0, 2};
    d.set(0, row);
    CHECK(d.count(0, 2) == 2);
    d.set_all(1, 0);
    CHECK(d.count(1, 0) == 2);
}

TEST_CASE("split shorthand round-trips") {
    SimpleGraph p = make_path(4);
    Decomposition d(double_graph(p), 2);
    d.set(0, Split::BB);
    d.set(2, 1, Split::RB);
    CHECK(d.split(0) == Split::BB);
    CHECK(d.split(1) == Split::RB);
    CHECK(d.split(2) == Split::RR);
    CHECK_THROWS_AS(d.set(0, 2, Split::RR), GraphError);
    CHECK(std::string(to_string(Split::RB)) == "RB");
}

TEST_CASE("color degree table and out-of-range queries") {
    Decomposition d = from_splits(make_path(3), std::vector<Split>{Split::RB, Split::BB});
    auto t = color_degree_table(d);
    CHECK(t == std::vector<int>{1, 1, 1, 3, 0, 2});
    CHECK_THROWS_AS(color_degree(d, 3, 0), GraphError);
    CHECK_THROWS_AS(color_degree(d, 0, 2), GraphError);
}
