#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

namespace lir {

enum class ClassKind {
    Path,
    Cycle,
    Wheel,
    Complete,
    CompleteMultipartite,
    Bipartite,
    TFamily,
    OddPath,
    OddCycle,
    Other,
};

const char* to_string(ClassKind k);

/// Structural class of a connected graph. `layout[i]` is the vertex of the
/// classified graph that plays vertex i of the matching generator
/// (make_path, make_cycle, make_wheel, make_complete,
/// make_complete_multipartite(part_sizes)). Empty for the other kinds.
struct ClassTag {
    ClassKind kind = ClassKind::Other;
    std::vector<int> part_sizes;
    std::vector<Vertex> layout;
};

/// Most specific tag in the order Path, Complete, Cycle, Wheel,
/// CompleteMultipartite, Bipartite, TFamily, Other. Throws on disconnected input.
ClassTag classify(const SimpleGraph& g);

/// Relabels a coloring of a generator graph onto `g` through `layout`.
Decomposition transplant(const Decomposition& templ, const SimpleGraph& g, std::span<const Vertex> layout);

/// ²P_n; even edge length repeats BB,BB,RR,RR, odd starts BB,RB,RR.
Decomposition color_double_path(int n);

/// Base colorings of ²C_3..²C_7, one split per edge i -- i+1. Lengths 4..7
/// start with RR,RR, the anchor after which longer cycles are spliced.
using CycleBaseTable = std::map<int, std::vector<Split>>;

/// Runs the exhaustive search that produced the frozen table.
CycleBaseTable build_cycle_base_table();
/// The frozen table used by color_double_cycle.
const CycleBaseTable& cycle_base_table();

/// Splits for ²C_len (edge i joins i and i+1 mod len).
std::vector<Split> double_cycle_splits(int len);
Decomposition color_double_cycle(int len);

/// Rim from color_double_cycle(n-1), every spoke RR.
Decomposition color_double_wheel(int n);

/// ²C_3 seed on {0,1,2}; vertex i >= 3 joins all earlier vertices in blue
/// for odd i and in red for even i.
Decomposition color_double_complete(int n);

/// Coloring of ²K_{sizes...} laid out as make_complete_multipartite(sizes).
/// Two parts: all red when unequal, else one vertex's edges red and the rest
/// blue. Three or more: the three largest parts by the three-part rule, then
/// each further part (by decreasing size) joined to all earlier parts in
/// blue, red, blue, ...
Decomposition color_double_multipartite(std::span<const int> sizes);

}  // namespace lir
