#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

namespace lir {

struct Bipartition {
    std::vector<Vertex> x;  // class of vertex 0
    std::vector<Vertex> y;
};

std::optional<Bipartition> try_bipartition(const SimpleGraph& g);
/// Throws "not bipartite" on an odd cycle and on disconnected input.
Bipartition bipartition(const SimpleGraph& g);

/// Edge set whose degree is odd exactly at the terminals.
struct ParityEdgeSet {
    std::vector<EdgeId> edges;  // sorted
};

/// T-join over a BFS spanning tree: the symmetric difference of the tree
/// paths joining terminals paired in ascending order. g must be connected
/// and the terminal count even.
ParityEdgeSet path_system(const SimpleGraph& g, std::span<const Vertex> terminals);

/// A twin set S (shared neighborhood T) whose removal with T leaves the
/// graph connected; xp = X \ S and yp = Y \ T.
struct TwinSplit {
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    std::vector<Vertex> xp;
    std::vector<Vertex> yp;
    /// The bipartition, sides exchanged if needed so that S lies in X.
    Bipartition sides;
    bool swapped = false;
};

/// Minimizes |S| + |T| over maximal twin classes (and classes minus one
/// member); ties go to the lexicographically smallest sorted S. Requires
/// both sides odd. Throws "twin split not found" when no candidate works.
TwinSplit find_twin_split(const SimpleGraph& g, const Bipartition& bip);

/// Two-color locally irregular decomposition of ²g for connected bipartite g other than K2.
Decomposition color_double_bipartite(const SimpleGraph& g);

}  // namespace lir
