#pragma once

#include <span>
#include <string>
#include <vector>

#include "lir/graph.hpp"

namespace lir {

/// A simple graph with a positive multiplicity on every edge.
class Multigraph {
  public:
    Multigraph() = default;
    /// Every edge gets multiplicity `uniform`.
    Multigraph(SimpleGraph base, int uniform);
    Multigraph(SimpleGraph base, std::vector<int> mult);

    const SimpleGraph& base() const { return base_; }
    int vertex_count() const { return base_.vertex_count(); }
    int edge_count() const { return base_.edge_count(); }
    int mult(EdgeId e) const { return mult_.at(static_cast<std::size_t>(e)); }
    const std::vector<int>& multiplicities() const { return mult_; }

    /// Sum of multiplicities of edges at v.
    int degree(Vertex v) const;

  private:
    SimpleGraph base_;
    std::vector<int> mult_;
};

/// ²G: every edge of g with multiplicity 2. Throws on an edgeless graph.
Multigraph double_graph(const SimpleGraph& g);

/// True iff adjacent vertices have distinct degrees.
bool is_locally_irregular(const Multigraph& m);

/// The three ways to split a doubled edge between two colors (color 0 = red, 1 = blue).
enum class Split { RR, RB, BB };

const char* to_string(Split s);

/// Per-edge split of multiplicities among `k` colors. Dense row-major storage:
/// counts(e)[c] is the number of parallel copies of e that carry color c.
class Decomposition {
  public:
    static constexpr int kRed = 0;
    static constexpr int kBlue = 1;

    /// All copies of every edge start in `initial_color`.
    Decomposition(Multigraph host, int k, int initial_color = 0);
    /// Throws when a row does not sum to the multiplicity of its edge.
    Decomposition(Multigraph host, int k, std::vector<int> counts);

    const Multigraph& host() const { return host_; }
    const SimpleGraph& graph() const { return host_.base(); }
    int colors() const { return k_; }

    std::span<const int> counts(EdgeId e) const;
    int count(EdgeId e, int c) const { return counts(e)[static_cast<std::size_t>(c)]; }
    const std::vector<int>& raw() const { return counts_; }

    /// Replaces the row of e; the new row must sum to mult(e).
    void set(EdgeId e, std::span<const int> row);
    /// Two-color shorthand for doubled edges.
    void set(EdgeId e, Split s);
    void set(Vertex u, Vertex v, Split s);
    /// Puts all copies of e into color c.
    void set_all(EdgeId e, int c);

    /// Split of a doubled edge in a two-color decomposition.
    Split split(EdgeId e) const;

    /// Number of colors that appear on at least one edge.
    int colors_used() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.k_ == b.k_ && a.counts_ == b.counts_ && a.host_.base() == b.host_.base() &&
               a.host_.multiplicities() == b.host_.multiplicities();
    }

  private:
    void check_row(EdgeId e, std::span<const int> row) const;

    Multigraph host_;
    int k_ = 1;
    std::vector<int> counts_;
};

/// Color-c degree of v: copies of color c on edges at v.
int color_degree(const Decomposition& d, Vertex v, int c);

/// All color degrees, row-major [v * k + c].
std::vector<int> color_degree_table(const Decomposition& d);

struct Conflict {
    int color;
    Edge edge;
    int degree;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct VerifyReport {
    std::vector<Conflict> conflicts;
    bool valid() const { return conflicts.empty(); }
};

/// Lists every (color, edge) whose endpoints tie in that color while the
/// edge carries at least one copy of it.
VerifyReport verify(const Decomposition& d);

/// Builds a two-color decomposition of ²g from per-edge splits (indexed by edge id).
Decomposition from_splits(const SimpleGraph& g, std::span<const Split> splits);

}  // namespace lir
