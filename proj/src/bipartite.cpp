#include "lir/bipartite.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "lir/class_colorers.hpp"

namespace lir {

namespace {

std::vector<Vertex> sorted_difference(std::vector<Vertex> a, std::vector<Vertex> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool remainder_connected(const SimpleGraph& g, const std::vector<bool>& removed) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!removed[static_cast<std::size_t>(v)]) {
            keep.push_back(v);
        }
    }
    return keep.empty() || induced_subgraph(g, keep).graph.is_connected();
}

}  // namespace

std::optional<Bipartition> try_bipartition(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !g.is_connected()) {
        return std::nullopt;
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    side[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (const auto& inc : g.incident(v)) {
            auto& s = side[static_cast<std::size_t>(inc.neighbor)];
            if (s < 0) {
                s = 1 - side[static_cast<std::size_t>(v)];
                q.push(inc.neighbor);
            } else if (s == side[static_cast<std::size_t>(v)]) {
                return std::nullopt;
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < n; ++v) {
        (side[static_cast<std::size_t>(v)] == 0 ? out.x : out.y).push_back(v);
    }
    return out;
}

Bipartition bipartition(const SimpleGraph& g) {
    if (!g.is_connected()) {
        throw GraphError("bipartition needs a connected graph");
    }
    auto b = try_bipartition(g);
    if (!b) {
        throw GraphError("not bipartite");
    }
    return *b;
}

ParityEdgeSet path_system(const SimpleGraph& g, std::span<const Vertex> terminals) {
    const int n = g.vertex_count();
    std::vector<int> parity(static_cast<std::size_t>(n), 0);
    for (Vertex t : terminals) {
        if (t < 0 || t >= n) {
            throw GraphError("terminal " + std::to_string(t) + " is not a vertex of the graph");
        }
        if (parity[static_cast<std::size_t>(t)]) {
            throw GraphError("terminal " + std::to_string(t) + " listed twice");
        }
        parity[static_cast<std::size_t>(t)] = 1;
    }
    if (terminals.size() % 2 != 0) {
        throw GraphError("path system needs an even number of terminals");
    }
    if (terminals.empty()) {
        return {};
    }
    if (!g.is_connected()) {
        throw GraphError("path system needs a connected graph");
    }
    // BFS tree; a tree edge lies on an odd number of pair paths exactly when
    // the subtree below it holds an odd number of terminals.
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        for (const auto& inc : g.incident(v)) {
            if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                seen[static_cast<std::size_t>(inc.neighbor)] = true;
                parent[static_cast<std::size_t>(inc.neighbor)] = v;
                parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
                order.push_back(inc.neighbor);
            }
        }
    }
    ParityEdgeSet out;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        if (parent[static_cast<std::size_t>(v)] >= 0 && parity[static_cast<std::size_t>(v)]) {
            out.edges.push_back(parent_edge[static_cast<std::size_t>(v)]);
            parity[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] ^= 1;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

TwinSplit find_twin_split(const SimpleGraph& g, const Bipartition& bip) {
    if (bip.x.size() % 2 == 0 || bip.y.size() % 2 == 0) {
        throw GraphError("twin split is only used when both sides are odd");
    }
    const int n = g.vertex_count();
    std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        classes[g.neighbors(v)].push_back(v);
    }

    struct Candidate {
        std::vector<Vertex> s;
        std::vector<Vertex> t;
    };
    std::optional<Candidate> best;
    auto consider = [&](std::vector<Vertex> s, const std::vector<Vertex>& t) {
        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        for (Vertex v : s) {
            removed[static_cast<std::size_t>(v)] = true;
        }
        for (Vertex v : t) {
            removed[static_cast<std::size_t>(v)] = true;
        }
        if (!remainder_connected(g, removed)) {
            return;
        }
        const auto score = s.size() + t.size();
        if (!best || score < best->s.size() + best->t.size() ||
            (score == best->s.size() + best->t.size() && s < best->s)) {
            best = Candidate{std::move(s), t};
        }
    };
    for (const auto& [nbhd, members] : classes) {
        consider(members, nbhd);
        if (members.size() > 1) {
            for (std::size_t drop = 0; drop < members.size(); ++drop) {
                std::vector<Vertex> s;
                for (std::size_t i = 0; i < members.size(); ++i) {
                    if (i != drop) {
                        s.push_back(members[i]);
                    }
                }
                consider(std::move(s), nbhd);
            }
        }
    }
    if (!best) {
        throw GraphError("twin split not found");
    }

    TwinSplit split;
    split.sides = bip;
    if (!std::binary_search(bip.x.begin(), bip.x.end(), best->s.front())) {
        std::swap(split.sides.x, split.sides.y);
        split.swapped = true;
    }
    split.s = best->s;
    split.t = best->t;
    split.xp = sorted_difference(split.sides.x, split.s);
    split.yp = sorted_difference(split.sides.y, split.t);

    if (!split.xp.empty()) {
        for (Vertex y : split.t) {
            const auto nb = g.neighbors(y);
            const bool has_xp = std::any_of(nb.begin(), nb.end(), [&](Vertex v) {
                return std::binary_search(split.xp.begin(), split.xp.end(), v);
            });
            if (!has_xp) {
                throw GraphError("twin split invariant violated: vertex " + std::to_string(y) +
                                 " of N(S) has no neighbor outside S");
            }
        }
    }
    return split;
}

Decomposition color_double_bipartite(const SimpleGraph& g) {
    if (g.vertex_count() == 2 && g.edge_count() == 1) {
        throw GraphError("²K2 has no locally irregular coloring");
    }
    const Bipartition bip = bipartition(g);
    Decomposition d(double_graph(g), 2, Decomposition::kBlue);

    if (bip.x.size() % 2 == 0 || bip.y.size() % 2 == 0) {
        const auto& terminals = bip.x.size() % 2 == 0 ? bip.x : bip.y;
        for (EdgeId e : path_system(g, terminals).edges) {
            d.set(e, Split::RB);
        }
        return d;
    }

    if (static_cast<std::size_t>(g.edge_count()) == bip.x.size() * bip.y.size()) {
        const std::array<int, 2> sizes{static_cast<int>(bip.x.size()), static_cast<int>(bip.y.size())};
        std::vector<Vertex> layout = bip.x;
        layout.insert(layout.end(), bip.y.begin(), bip.y.end());
        return transplant(color_double_multipartite(sizes), g, layout);
    }

    const TwinSplit split = find_twin_split(g, bip);
    const auto s = split.s.size();
    const auto t = split.t.size();
    auto in = [](const std::vector<Vertex>& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); };

    std::vector<Vertex> rest = split.xp;
    rest.insert(rest.end(), split.yp.begin(), split.yp.end());
    std::sort(rest.begin(), rest.end());
    const InducedSubgraph sub = induced_subgraph(g, rest);
    auto apply_path_system = [&](const std::vector<Vertex>& terminals) {
        std::vector<Vertex> local;
        for (Vertex v : terminals) {
            local.push_back(sub.to_sub[static_cast<std::size_t>(v)]);
        }
        for (EdgeId e : path_system(sub.graph, local).edges) {
            const Edge& le = sub.graph.edge(e);
            d.set(sub.to_parent[static_cast<std::size_t>(le.u)], sub.to_parent[static_cast<std::size_t>(le.v)],
                  Split::RB);
        }
    };
    auto xp_neighbors = [&](Vertex y) {
        std::vector<Vertex> out;
        for (Vertex v : g.neighbors(y)) {
            if (in(split.xp, v)) {
                out.push_back(v);
            }
        }
        return out;
    };

    if (s % 2 == 1) {
        apply_path_system(split.xp);
        if (s != t) {
            for (Vertex y : split.t) {
                for (Vertex z : xp_neighbors(y)) {
                    d.set(y, z, Split::RR);
                }
            }
        }
        return d;
    }

    // s even: route one parity path through x0 - y0 - z0.
    const Vertex x0 = split.s.front();
    Vertex y0 = -1;
    std::size_t y0_degree = 0;
    for (Vertex y : split.t) {
        const auto deg = xp_neighbors(y).size();
        if (deg > y0_degree) {
            y0 = y;
            y0_degree = deg;
        }
    }
    if (y0 < 0) {
        throw GraphError("twin split invariant violated: N(S) has no neighbor outside S");
    }
    const Vertex z0 = xp_neighbors(y0).front();
    std::vector<Vertex> terminals;
    std::copy_if(split.xp.begin(), split.xp.end(), std::back_inserter(terminals), [&](Vertex v) { return v != z0; });
    apply_path_system(terminals);
    d.set(x0, y0, Split::RB);
    d.set(y0, z0, Split::RB);

    if (s != t) {
        for (Vertex y : split.t) {
            for (Vertex z : xp_neighbors(y)) {
                if (y != y0 || z != z0) {
                    d.set(y, z, Split::RR);
                }
            }
        }
        return d;
    }
    if (y0_degree == 1) {
        const Vertex yt = split.t.front() != y0 ? split.t.front() : split.t.at(1);
        for (Vertex x : split.s) {
            d.set(yt, x, Split::RR);
        }
    }
    return d;
}

}  // namespace lir
