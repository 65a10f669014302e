#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

namespace lir {

/// Input error that remembers the 1-based line it came from (0 when not line-based).
class ParseError : public GraphError {
  public:
    ParseError(const std::string& what, int line);
    int line() const { return line_; }

  private:
    int line_;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),..., six bits per byte, offset 63.

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

/// Reads one graph6 string per non-empty line; skips a ">>graph6<<" header.
std::vector<SimpleGraph> read_graph6_stream(std::istream& in);

/// "u v" per line, 0-based; '#' starts a comment. n is one past the largest id.
SimpleGraph read_edge_list(std::istream& in);
std::string to_edge_list(const SimpleGraph& g);

/// {"n":..,"k":..,"edges":[{"u":..,"v":..,"mult":..,"counts":[..]}]}
std::string to_json(const Decomposition& d);
/// Rebuilds the host multigraph from the listed edges. A "mult" field that
/// disagrees with the counts is a malformed decomposition.
Decomposition decomposition_from_json(std::string_view text);

/// One DOT edge per parallel copy, colored by its class.
std::string to_dot(const Decomposition& d);

/// Human-readable per-edge listing with color degrees.
std::string to_summary(const Decomposition& d);

}  // namespace lir
