#include "lir/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lir/bipartite.hpp"
#include "lir/io.hpp"

namespace lir {

namespace {

constexpr int kMaxCanonical = 11;

using AdjMask = std::vector<std::uint32_t>;

AdjMask adjacency_masks(const SimpleGraph& g) {
    AdjMask adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

// Stable color refinement; colors are ranks of (old color, neighbor colors).
std::vector<int> refine(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        color[static_cast<std::size_t>(v)] = g.degree(v);
    }
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.first = color[static_cast<std::size_t>(v)];
            for (const auto& inc : g.incident(v)) {
                s.second.push_back(color[static_cast<std::size_t>(inc.neighbor)]);
            }
            std::sort(s.second.begin(), s.second.end());
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (Vertex v = 0; v < n; ++v) {
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) - uniq.begin());
        }
        if (uniq.size() == classes) {
            return color;
        }
        classes = uniq.size();
    }
}

class CanonicalSearch {
  public:
    CanonicalSearch(const SimpleGraph& g) : n_(g.vertex_count()), adj_(adjacency_masks(g)) {
        const auto color = refine(g);
        std::vector<Vertex> verts(static_cast<std::size_t>(n_));
        std::iota(verts.begin(), verts.end(), 0);
        std::stable_sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
            return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
        });
        for (Vertex v : verts) {
            cell_of_position_.push_back(color[static_cast<std::size_t>(v)]);
            cells_[color[static_cast<std::size_t>(v)]].push_back(v);
        }
        order_.resize(static_cast<std::size_t>(n_));
        best_order_.resize(static_cast<std::size_t>(n_));
        column_.resize(static_cast<std::size_t>(n_));
        best_column_.resize(static_cast<std::size_t>(n_));
    }

    std::vector<Vertex> run() {
        std::uint32_t placed = 0;
        dfs(0, placed, false);
        return best_order_;
    }

  private:
    // Bits of column j: adjacency of order[j] with order[0..j-1], first bit most significant.
    std::uint32_t column(int j) const {
        std::uint32_t bits = 0;
        const auto row = adj_[static_cast<std::size_t>(order_[static_cast<std::size_t>(j)])];
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | ((row >> order_[static_cast<std::size_t>(i)]) & 1u);
        }
        return bits;
    }

    // `ahead`: the current prefix already beats the best code found so far.
    void dfs(int pos, std::uint32_t& placed, bool ahead) {
        if (pos == n_) {
            if (ahead || !have_best_) {
                best_order_ = order_;
                best_column_ = column_;
                have_best_ = true;
                ++improvements_;
            }
            return;
        }
        for (Vertex v : cells_[cell_of_position_[static_cast<std::size_t>(pos)]]) {
            if (placed & (1u << v)) {
                continue;
            }
            order_[static_cast<std::size_t>(pos)] = v;
            const auto col = column(pos);
            column_[static_cast<std::size_t>(pos)] = col;
            bool child_ahead = true;
            if (have_best_ && !ahead) {
                const auto best = best_column_[static_cast<std::size_t>(pos)];
                if (col < best) {
                    continue;
                }
                child_ahead = col > best;
            }
            const auto before = improvements_;
            placed |= 1u << v;
            dfs(pos + 1, placed, child_ahead);
            placed &= ~(1u << v);
            if (improvements_ != before) {
                // The new best extends this prefix.
                ahead = false;
            }
        }
    }

    int n_;
    AdjMask adj_;
    std::map<int, std::vector<Vertex>> cells_;
    std::vector<int> cell_of_position_;
    std::vector<Vertex> order_;
    std::vector<Vertex> best_order_;
    std::vector<std::uint32_t> column_;
    std::vector<std::uint32_t> best_column_;
    bool have_best_ = false;
    std::uint64_t improvements_ = 0;
};

template <typename Extend>
std::vector<SimpleGraph> grow(const std::vector<SimpleGraph>& smaller, Extend extend) {
    std::map<std::string, SimpleGraph> found;
    for (const auto& h : smaller) {
        for (const auto& g : extend(h)) {
            auto c = canonical_form(g);
            found.try_emplace(to_graph6(c), std::move(c));
        }
    }
    std::vector<SimpleGraph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) {
        out.push_back(std::move(g));
    }
    return out;
}

SimpleGraph with_new_vertex(const SimpleGraph& h, std::uint32_t mask) {
    const int n = h.vertex_count();
    SimpleGraph g(n + 1);
    for (const auto& e : h.edges()) {
        g.add_edge(e.u, e.v);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (mask & (1u << v)) {
            g.add_edge(v, n);
        }
    }
    return g;
}

}  // namespace

SimpleGraph canonical_form(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxCanonical) {
        throw GraphError("canonical form is limited to " + std::to_string(kMaxCanonical) + " vertices");
    }
    CanonicalSearch search(g);
    // TODO: the cell-by-cell search is exponential on regular graphs; an
    // individualization step would cut it, but n <= 11 has stayed fast enough.
    const auto order = search.run();
    std::vector<Vertex> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        edges.emplace_back(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    }
    std::sort(edges.begin(), edges.end());
    return SimpleGraph(g.vertex_count(), edges);
}

std::string canonical_key(const SimpleGraph& g) { return to_graph6(canonical_form(g)); }

std::vector<SimpleGraph> enumerate_connected(int n) {
    if (n < 1) {
        throw GraphError("order must be positive");
    }
    if (n > 8) {
        throw GraphError("built-in enumeration stops at 8 vertices; supply a graph6 file for larger orders");
    }
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int order = 2; order <= n; ++order) {
        level = grow(level, [](const SimpleGraph& h) {
            std::vector<SimpleGraph> out;
            const auto limit = 1u << h.vertex_count();
            for (std::uint32_t mask = 1; mask < limit; ++mask) {
                out.push_back(with_new_vertex(h, mask));
            }
            return out;
        });
    }
    return level;
}

std::vector<SimpleGraph> enumerate_connected_bipartite(int n) {
    if (n < 1) {
        throw GraphError("order must be positive");
    }
    if (n > 10) {
        throw GraphError("built-in bipartite enumeration stops at 10 vertices");
    }
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int order = 2; order <= n; ++order) {
        level = grow(level, [](const SimpleGraph& h) {
            std::vector<SimpleGraph> out;
            const auto bip = bipartition(h);
            for (const auto* side : {&bip.x, &bip.y}) {
                const auto limit = 1u << side->size();
                for (std::uint32_t pick = 1; pick < limit; ++pick) {
                    std::uint32_t mask = 0;
                    for (std::size_t i = 0; i < side->size(); ++i) {
                        if (pick & (1u << i)) {
                            mask |= 1u << (*side)[i];
                        }
                    }
                    out.push_back(with_new_vertex(h, mask));
                }
            }
            return out;
        });
    }
    return level;
}

SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) {
        throw GraphError("order must be positive");
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v) && coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

SimpleGraph random_connected_bipartite(int n, double p, std::mt19937_64& rng) {
    if (n < 2) {
        throw GraphError("bipartite order must be at least 2");
    }
    std::uniform_int_distribution<int> split(1, n - 1);
    const int a = split(rng);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        side[static_cast<std::size_t>(i)] = i < a ? 0 : 1;
    }
    std::shuffle(side.begin(), side.end(), rng);
    // Tree: each vertex links to an earlier vertex on the other side; the
    // order puts one vertex of each side first.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto other = std::find_if(order.begin() + 1, order.end(), [&](Vertex v) {
        return side[static_cast<std::size_t>(v)] != side[static_cast<std::size_t>(order[0])];
    });
    std::iter_swap(order.begin() + 1, other);
    SimpleGraph g(n);
    std::vector<std::vector<Vertex>> placed(2);
    placed[static_cast<std::size_t>(side[static_cast<std::size_t>(order[0])])].push_back(order[0]);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Vertex v = order[i];
        const auto& pool = placed[static_cast<std::size_t>(1 - side[static_cast<std::size_t>(v)])];
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        g.add_edge(v, pool[pick(rng)]);
        placed[static_cast<std::size_t>(side[static_cast<std::size_t>(v)])].push_back(v);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && !g.has_edge(u, v) &&
                coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace lir
