#include "lir/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace lir {

Multigraph::Multigraph(SimpleGraph base, int uniform)
    : base_(std::move(base)), mult_(static_cast<std::size_t>(base_.edge_count()), uniform) {
    if (uniform < 1) {
        throw GraphError("multiplicity must be positive");
    }
}

Multigraph::Multigraph(SimpleGraph base, std::vector<int> mult) : base_(std::move(base)), mult_(std::move(mult)) {
    if (static_cast<int>(mult_.size()) != base_.edge_count()) {
        throw GraphError("multiplicity vector does not match edge count");
    }
    if (std::any_of(mult_.begin(), mult_.end(), [](int m) { return m < 1; })) {
        throw GraphError("multiplicity must be positive");
    }
}

int Multigraph::degree(Vertex v) const {
    int d = 0;
    for (const auto& inc : base_.incident(v)) {
        d += mult(inc.edge);
    }
    return d;
}

Multigraph double_graph(const SimpleGraph& g) {
    if (g.edge_count() == 0) {
        throw GraphError("nothing to double");
    }
    return Multigraph(g, 2);
}

bool is_locally_irregular(const Multigraph& m) {
    std::vector<int> deg(static_cast<std::size_t>(m.vertex_count()));
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        deg[static_cast<std::size_t>(v)] = m.degree(v);
    }
    const auto& edges = m.base().edges();
    return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return deg[static_cast<std::size_t>(e.u)] == deg[static_cast<std::size_t>(e.v)];
    });
}

const char* to_string(Split s) {
    switch (s) {
        case Split::RR: return "RR";
        case Split::RB: return "RB";
        case Split::BB: return "BB";
    }
    return "?";
}

Decomposition::Decomposition(Multigraph host, int k, int initial_color) : host_(std::move(host)), k_(k) {
    if (k < 1) {
        throw GraphError("decomposition needs at least one color");
    }
    if (initial_color < 0 || initial_color >= k) {
        throw GraphError("initial color out of range");
    }
    counts_.assign(static_cast<std::size_t>(host_.edge_count() * k), 0);
    for (EdgeId e = 0; e < host_.edge_count(); ++e) {
        counts_[static_cast<std::size_t>(e * k + initial_color)] = host_.mult(e);
    }
}

Decomposition::Decomposition(Multigraph host, int k, std::vector<int> table)
    : host_(std::move(host)), k_(k), counts_(std::move(table)) {
    if (k < 1) {
        throw GraphError("decomposition needs at least one color");
    }
    if (static_cast<int>(counts_.size()) != host_.edge_count() * k) {
        throw GraphError("count table has wrong size");
    }
    for (EdgeId e = 0; e < host_.edge_count(); ++e) {
        check_row(e, counts(e));
    }
}

std::span<const int> Decomposition::counts(EdgeId e) const {
    if (e < 0 || e >= host_.edge_count()) {
        throw GraphError("edge id out of range");
    }
    return {counts_.data() + static_cast<std::size_t>(e * k_), static_cast<std::size_t>(k_)};
}

void Decomposition::check_row(EdgeId e, std::span<const int> row) const {
    if (static_cast<int>(row.size()) != k_) {
        throw GraphError("color row has wrong length");
    }
    if (std::any_of(row.begin(), row.end(), [](int x) { return x < 0; })) {
        throw GraphError("negative color count");
    }
    if (std::accumulate(row.begin(), row.end(), 0) != host_.mult(e)) {
        const Edge& ed = graph().edge(e);
        throw GraphError("color counts of edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                         "} do not sum to its multiplicity " + std::to_string(host_.mult(e)));
    }
}

void Decomposition::set(EdgeId e, std::span<const int> row) {
    check_row(e, row);
    std::copy(row.begin(), row.end(), counts_.begin() + e * k_);
}

void Decomposition::set(EdgeId e, Split s) {
    if (k_ < 2) {
        throw GraphError("split assignment needs two colors");
    }
    std::vector<int> row(static_cast<std::size_t>(k_), 0);
    switch (s) {
        case Split::RR: row[kRed] = 2; break;
        case Split::RB: row[kRed] = 1; row[kBlue] = 1; break;
        case Split::BB: row[kBlue] = 2; break;
    }
    set(e, row);
}

void Decomposition::set(Vertex u, Vertex v, Split s) {
    const EdgeId e = graph().find_edge(u, v);
    if (e < 0) {
        throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    set(e, s);
}

void Decomposition::set_all(EdgeId e, int c) {
    if (c < 0 || c >= k_) {
        throw GraphError("color out of range");
    }
    std::vector<int> row(static_cast<std::size_t>(k_), 0);
    row[static_cast<std::size_t>(c)] = host_.mult(e);
    set(e, row);
}

Split Decomposition::split(EdgeId e) const {
    const auto row = counts(e);
    if (k_ != 2 || host_.mult(e) != 2) {
        throw GraphError("split is defined only for doubled edges in two colors");
    }
    return row[kRed] == 2 ? Split::RR : row[kRed] == 1 ? Split::RB : Split::BB;
}

int Decomposition::colors_used() const {
    int used = 0;
    for (int c = 0; c < k_; ++c) {
        for (EdgeId e = 0; e < host_.edge_count(); ++e) {
            if (count(e, c) > 0) {
                ++used;
                break;
            }
        }
    }
    return used;
}

int color_degree(const Decomposition& d, Vertex v, int c) {
    if (v < 0 || v >= d.graph().vertex_count()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    if (c < 0 || c >= d.colors()) {
        throw GraphError("color " + std::to_string(c) + " out of range");
    }
    int deg = 0;
    for (const auto& inc : d.graph().incident(v)) {
        deg += d.count(inc.edge, c);
    }
    return deg;
}

std::vector<int> color_degree_table(const Decomposition& d) {
    const int k = d.colors();
    std::vector<int> table(static_cast<std::size_t>(d.graph().vertex_count() * k), 0);
    const auto& edges = d.graph().edges();
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
        const auto row = d.counts(e);
        for (int c = 0; c < k; ++c) {
            table[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u * k + c)] += row[static_cast<std::size_t>(c)];
            table[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v * k + c)] += row[static_cast<std::size_t>(c)];
        }
    }
    return table;
}

VerifyReport verify(const Decomposition& d) {
    const int k = d.colors();
    const auto table = color_degree_table(d);
    VerifyReport report;
    const auto& edges = d.graph().edges();
    for (int c = 0; c < k; ++c) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
            if (d.count(e, c) == 0) {
                continue;
            }
            const Edge& ed = edges[static_cast<std::size_t>(e)];
            const int du = table[static_cast<std::size_t>(ed.u * k + c)];
            if (du == table[static_cast<std::size_t>(ed.v * k + c)]) {
                report.conflicts.push_back({c, ed, du});
            }
        }
    }
    return report;
}

Decomposition from_splits(const SimpleGraph& g, std::span<const Split> splits) {
    if (static_cast<int>(splits.size()) != g.edge_count()) {
        throw GraphError("one split per edge required");
    }
    Decomposition d(double_graph(g), 2);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        d.set(e, splits[static_cast<std::size_t>(e)]);
    }
    return d;
}

}  // namespace lir
