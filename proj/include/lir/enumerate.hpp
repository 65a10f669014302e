#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lir/graph.hpp"

namespace lir {

/// Canonical relabeling for small graphs (n <= 11): color refinement fixes an
/// ordered partition, then orderings inside the cells are searched for the
/// largest upper-triangle adjacency code.
SimpleGraph canonical_form(const SimpleGraph& g);
/// graph6 of canonical_form(g); equal exactly for isomorphic graphs.
std::string canonical_key(const SimpleGraph& g);

/// Every connected graph on n vertices once up to isomorphism (n <= 8),
/// grown vertex by vertex from the connected graphs on n-1 vertices and
/// ordered by canonical key.
std::vector<SimpleGraph> enumerate_connected(int n);

/// Connected bipartite graphs on n vertices up to isomorphism (n <= 10).
std::vector<SimpleGraph> enumerate_connected_bipartite(int n);

/// Random spanning tree plus each remaining pair with probability p.
SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng);
/// Random side sizes, a spanning tree across the sides, plus each remaining
/// cross pair with probability p.
SimpleGraph random_connected_bipartite(int n, double p, std::mt19937_64& rng);

}  // namespace lir
