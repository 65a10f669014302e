#include "lir/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace lir {

namespace {

int checked_order(int n) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    return n;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (const auto& e : edges) {
        add_edge(e.u, e.v);
    }
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges) : SimpleGraph(n) {
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

std::uint64_t SimpleGraph::key(Vertex u, Vertex v) const {
    const Edge e(u, v);
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
}

EdgeId SimpleGraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                         std::to_string(n_));
    }
    if (u == v) {
        throw GraphError("loop at vertex " + std::to_string(u));
    }
    const auto k = key(u, v);
    if (index_.contains(k)) {
        throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    const EdgeId id = edge_count();
    edges_.emplace_back(u, v);
    index_.emplace(k, id);
    adj_[static_cast<std::size_t>(u)].push_back({v, id});
    adj_[static_cast<std::size_t>(v)].push_back({u, id});
    return id;
}

EdgeId SimpleGraph::find_edge(Vertex u, Vertex v) const {
    if (u == v) {
        return -1;
    }
    const auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(incident(v).size());
    for (const auto& inc : incident(v)) {
        out.push_back(inc.neighbor);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimpleGraph::is_connected() const {
    if (n_ <= 1) {
        return true;
    }
    return connected_components(*this).size() == 1;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
    InducedSubgraph out;
    out.to_sub.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    out.to_parent.assign(keep.begin(), keep.end());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.to_sub.at(static_cast<std::size_t>(keep[i])) = static_cast<Vertex>(i);
    }
    out.graph = SimpleGraph(static_cast<int>(keep.size()));
    for (const auto& e : g.edges()) {
        const Vertex a = out.to_sub[static_cast<std::size_t>(e.u)];
        const Vertex b = out.to_sub[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            out.graph.add_edge(a, b);
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            out.back().push_back(v);
            for (const auto& inc : g.incident(v)) {
                if (comp[static_cast<std::size_t>(inc.neighbor)] < 0) {
                    comp[static_cast<std::size_t>(inc.neighbor)] = id;
                    q.push(inc.neighbor);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

SimpleGraph make_path(int n) {
    if (n < 1) {
        throw GraphError("path needs at least one vertex");
    }
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

SimpleGraph make_cycle(int len) {
    if (len < 3) {
        throw GraphError("cycle needs at least 3 vertices");
    }
    SimpleGraph g(len);
    for (int i = 0; i < len; ++i) {
        g.add_edge(i, (i + 1) % len);
    }
    return g;
}

SimpleGraph make_wheel(int n) {
    if (n < 4) {
        throw GraphError("wheel needs at least 4 vertices");
    }
    SimpleGraph g(n);
    const int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
    }
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, rim);
    }
    return g;
}

SimpleGraph make_complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

SimpleGraph make_complete_multipartite(std::span<const int> sizes) {
    std::vector<int> start(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) {
            throw GraphError("part sizes must be positive");
        }
        start[i + 1] = start[i] + sizes[i];
    }
    SimpleGraph g(start.back());
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        for (std::size_t b = a + 1; b < sizes.size(); ++b) {
            for (int u = start[a]; u < start[a + 1]; ++u) {
                for (int v = start[b]; v < start[b + 1]; ++v) {
                    g.add_edge(u, v);
                }
            }
        }
    }
    return g;
}

SimpleGraph make_bowtie() { return SimpleGraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

SimpleGraph make_star(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        g.add_edge(0, i);
    }
    return g;
}

}  // namespace lir
