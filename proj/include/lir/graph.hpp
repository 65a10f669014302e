#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lir {

using Vertex = int;
using EdgeId = int;

/// Raised for every contract violation in the library (bad input, failed
/// preconditions). Search outcomes such as "no coloring" are values, not errors.
class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Unordered pair stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool touches(Vertex x) const { return x == u || x == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Undirected simple graph on vertices 0..n-1. Edge ids follow insertion order.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::span<const Edge> edges);
    SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Adds {u,v}; throws on loops, out-of-range ids and duplicates.
    EdgeId add_edge(Vertex u, Vertex v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Incidence>& incident(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v) >= 0; }
    /// Edge id of {u,v}, or -1.
    EdgeId find_edge(Vertex u, Vertex v) const;

    std::vector<Vertex> neighbors(Vertex v) const;
    bool is_connected() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    std::uint64_t key(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Induced subgraph on `keep` (in the given order). `to_sub[v]` is -1 for dropped vertices.
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> to_sub;
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);

// Family generators. Vertex numbering is documented per generator.

/// P_n: edges i -- i+1.
SimpleGraph make_path(int n);
/// C_len: edges i -- i+1 mod len.
SimpleGraph make_cycle(int len);
/// W_n: rim 0..n-2 as a cycle, hub n-1.
SimpleGraph make_wheel(int n);
SimpleGraph make_complete(int n);
/// Parts occupy consecutive vertex ranges in the given order.
SimpleGraph make_complete_multipartite(std::span<const int> sizes);
/// Two triangles sharing vertex 0.
SimpleGraph make_bowtie();
SimpleGraph make_star(int leaves);

}  // namespace lir
