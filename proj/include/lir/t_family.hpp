#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lir/class_colorers.hpp"
#include "lir/decomposition.hpp"
#include "lir/graph.hpp"

namespace lir {

/// One construction step: a path leaving triangle vertex `at`. `path` lists
/// the new vertices in order. A pendant path has even length. A link has odd
/// length and ends at vertex w = path.back() of a new triangle {w, x, y},
/// with `triangle` = {x, y}.
struct Attachment {
    Vertex at = 0;
    std::vector<Vertex> path;
    std::optional<std::array<Vertex, 2>> triangle;

    int length() const { return static_cast<int>(path.size()); }
};

/// Replayable construction of a graph in the triangle family: the starting
/// triangle followed by attachments whose `at` vertex is already placed.
struct TFamilyWitness {
    std::array<Vertex, 3> root{};
    std::vector<Attachment> attachments;
};

/// Builds family members from K3 on {0,1,2}. New vertices get the next ids.
class TFamilyBuilder {
  public:
    TFamilyBuilder();

    /// Triangle vertices that still have degree 2.
    std::vector<Vertex> open_sites() const;
    void attach_pendant(Vertex at, int even_length);
    void attach_triangle(Vertex at, int odd_length);

    SimpleGraph graph() const;
    const TFamilyWitness& witness() const { return witness_; }

  private:
    void require_open(Vertex at) const;
    std::vector<Vertex> extend_path(Vertex at, int length);

    int n_ = 3;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
    std::vector<bool> in_triangle_;
    TFamilyWitness witness_;
};

/// Structural recognition of the triangle family: vertex-disjoint triangles,
/// every triangle vertex with at most one extra edge, even pendant paths,
/// odd triangle-to-triangle paths, and the triangles linked as a tree.
std::optional<TFamilyWitness> recognize_t_family(const SimpleGraph& g);

/// OddPath, OddCycle or TFamily when g has no decomposition into locally
/// irregular subgraphs; nullopt otherwise.
std::optional<ClassKind> t_prime_kind(const SimpleGraph& g);
bool recognize_t_prime(const SimpleGraph& g);

/// Three-color decomposition of ²g for a triangle-family member.
Decomposition color_t_family_3(const SimpleGraph& g, const TFamilyWitness& w);
/// Recognizes first; throws when g is not a member.
Decomposition color_t_family_3(const SimpleGraph& g);

}  // namespace lir
