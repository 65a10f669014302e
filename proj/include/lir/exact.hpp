#pragma once

#include <cstdint>
#include <optional>

#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

namespace lir {

struct SearchLimits {
    int max_colors = 4;
    int max_edges = 24;
    std::uint64_t node_budget = 1'000'000'000;

    /// Defaults overridden by LIR_MAX_COLORS, LIR_MAX_EDGES and LIR_NODE_BUDGET.
    static SearchLimits from_environment();
    void validate() const;
};

/// `None` is only reported by a search that ran to completion; an exhausted
/// node budget is `Inconclusive`.
enum class SearchStatus { Found, None, Inconclusive };

const char* to_string(SearchStatus s);

struct ExactResult {
    SearchStatus status = SearchStatus::None;
    /// Smallest k with a coloring (Found), or the largest k tried.
    int k = 0;
    std::optional<Decomposition> witness;
    std::uint64_t nodes = 0;
};

/// Backtracking search for a locally irregular decomposition of m into at
/// most k colors. Edges go in BFS order from a max-degree vertex; a vertex is
/// checked against its finished neighbors as soon as its last edge is set.
/// Colors not used so far are interchangeable and introduced in order.
ExactResult search_coloring(const Multigraph& m, int k, const SearchLimits& lim);

/// Smallest k <= lim.max_colors, trying k = 1, 2, ... in turn.
ExactResult exact_lir_multigraph(const Multigraph& m, const SearchLimits& lim = {});
/// Same with every edge of multiplicity one.
ExactResult exact_lir_graph(const SimpleGraph& g, const SearchLimits& lim = {});

/// Whether E(g) splits into locally irregular subgraphs. Tries up to
/// floor(m/2) colors regardless of lim.max_colors, since a one-edge class
/// never qualifies. Found / None / Inconclusive.
SearchStatus is_decomposable(const SimpleGraph& g, const SearchLimits& lim = {});

/// Unpruned cross-check for ²g in two colors: a base-3 counter over
/// {RR, RB, BB} per edge, every state run through verify. First valid state
/// in counter order, or nullopt.
std::optional<Decomposition> brute_force_double_two_coloring(const SimpleGraph& g);

}  // namespace lir
