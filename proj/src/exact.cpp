#include "lir/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lir {

namespace {

std::vector<EdgeId> bfs_edge_order(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<bool> taken(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<Vertex> roots(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        roots[static_cast<std::size_t>(v)] = v;
    }
    std::stable_sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<EdgeId> order;
    order.reserve(static_cast<std::size_t>(g.edge_count()));
    for (Vertex root : roots) {
        if (seen[static_cast<std::size_t>(root)]) {
            continue;
        }
        std::vector<Vertex> queue{root};
        seen[static_cast<std::size_t>(root)] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const Vertex v = queue[i];
            for (const auto& inc : g.incident(v)) {
                if (!taken[static_cast<std::size_t>(inc.edge)]) {
                    taken[static_cast<std::size_t>(inc.edge)] = true;
                    order.push_back(inc.edge);
                }
                if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                    seen[static_cast<std::size_t>(inc.neighbor)] = true;
                    queue.push_back(inc.neighbor);
                }
            }
        }
    }
    return order;
}

// All length-k vectors of non-negative integers summing to total.
void compositions(int total, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = total; x >= 0; --x) {
        cur.push_back(x);
        compositions(total - x, k, cur, out);
        cur.pop_back();
    }
}

class Search {
  public:
    Search(const Multigraph& m, int k, std::uint64_t budget)
        : m_(m),
          g_(m.base()),
          k_(k),
          budget_(budget),
          order_(bfs_edge_order(g_)),
          remaining_(static_cast<std::size_t>(g_.vertex_count())),
          degree_(static_cast<std::size_t>(g_.vertex_count() * k), 0),
          assign_(static_cast<std::size_t>(g_.edge_count() * k), 0) {
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            remaining_[static_cast<std::size_t>(v)] = g_.degree(v);
        }
        int max_mult = 0;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            max_mult = std::max(max_mult, m.mult(e));
        }
        rows_.resize(static_cast<std::size_t>(max_mult + 1));
        for (int mu = 1; mu <= max_mult; ++mu) {
            std::vector<int> cur;
            compositions(mu, k, cur, rows_[static_cast<std::size_t>(mu)]);
        }
    }

    SearchStatus run() {
        const bool ok = dfs(0, 0);
        if (aborted_) {
            return SearchStatus::Inconclusive;
        }
        return ok ? SearchStatus::Found : SearchStatus::None;
    }

    std::uint64_t nodes() const { return nodes_; }
    Decomposition witness() const { return Decomposition(m_, k_, assign_); }

  private:
    int deg(Vertex v, int c) const { return degree_[static_cast<std::size_t>(v * k_ + c)]; }

    bool finished(Vertex v) const { return remaining_[static_cast<std::size_t>(v)] == 0; }

    // v just became finished: compare with every finished neighbor.
    bool consistent(Vertex v) const {
        for (const auto& inc : g_.incident(v)) {
            if (!finished(inc.neighbor)) {
                continue;
            }
            for (int c = 0; c < k_; ++c) {
                if (assign_[static_cast<std::size_t>(inc.edge * k_ + c)] > 0 && deg(v, c) == deg(inc.neighbor, c)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool dfs(std::size_t pos, int used) {
        if (pos == order_.size()) {
            return true;
        }
        const EdgeId e = order_[pos];
        const Edge& ed = g_.edge(e);
        for (const auto& row : rows_[static_cast<std::size_t>(m_.mult(e))]) {
            // Unused colors are interchangeable: among them, counts must not increase.
            bool canonical = true;
            for (int c = used; c + 1 < k_ && canonical; ++c) {
                canonical = row[static_cast<std::size_t>(c)] >= row[static_cast<std::size_t>(c + 1)];
            }
            if (!canonical) {
                continue;
            }
            if (nodes_ == budget_) {
                aborted_ = true;
                return false;
            }
            ++nodes_;
            int next_used = used;
            for (int c = 0; c < k_; ++c) {
                const int x = row[static_cast<std::size_t>(c)];
                assign_[static_cast<std::size_t>(e * k_ + c)] = x;
                degree_[static_cast<std::size_t>(ed.u * k_ + c)] += x;
                degree_[static_cast<std::size_t>(ed.v * k_ + c)] += x;
                if (x > 0) {
                    next_used = std::max(next_used, c + 1);
                }
            }
            --remaining_[static_cast<std::size_t>(ed.u)];
            --remaining_[static_cast<std::size_t>(ed.v)];
            bool ok = (!finished(ed.u) || consistent(ed.u)) && (!finished(ed.v) || consistent(ed.v));
            if (ok && dfs(pos + 1, next_used)) {
                return true;
            }
            ++remaining_[static_cast<std::size_t>(ed.u)];
            ++remaining_[static_cast<std::size_t>(ed.v)];
            for (int c = 0; c < k_; ++c) {
                const int x = row[static_cast<std::size_t>(c)];
                assign_[static_cast<std::size_t>(e * k_ + c)] = 0;
                degree_[static_cast<std::size_t>(ed.u * k_ + c)] -= x;
                degree_[static_cast<std::size_t>(ed.v * k_ + c)] -= x;
            }
            if (aborted_) {
                return false;
            }
        }
        return false;
    }

    const Multigraph& m_;
    const SimpleGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<EdgeId> order_;
    std::vector<int> remaining_;
    std::vector<int> degree_;
    std::vector<int> assign_;
    std::vector<std::vector<std::vector<int>>> rows_;
};

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) {
            throw GraphError("");
        }
        return v;
    } catch (const std::exception&) {
        throw GraphError(std::string("environment variable ") + name + " is not a number");
    }
}

}  // namespace

SearchLimits SearchLimits::from_environment() {
    SearchLimits lim;
    lim.max_colors = static_cast<int>(env_number("LIR_MAX_COLORS", static_cast<std::uint64_t>(lim.max_colors)));
    lim.max_edges = static_cast<int>(env_number("LIR_MAX_EDGES", static_cast<std::uint64_t>(lim.max_edges)));
    lim.node_budget = env_number("LIR_NODE_BUDGET", lim.node_budget);
    lim.validate();
    return lim;
}

void SearchLimits::validate() const {
    if (max_colors < 1 || max_edges < 1 || node_budget < 1) {
        throw GraphError("search limits must be positive");
    }
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

ExactResult search_coloring(const Multigraph& m, int k, const SearchLimits& lim) {
    lim.validate();
    if (m.edge_count() > lim.max_edges) {
        throw GraphError("graph has " + std::to_string(m.edge_count()) + " edges, limit is " +
                         std::to_string(lim.max_edges));
    }
    if (k < 1) {
        throw GraphError("color count must be positive");
    }
    Search search(m, k, lim.node_budget);
    ExactResult out;
    out.status = search.run();
    out.k = k;
    out.nodes = search.nodes();
    if (out.status == SearchStatus::Found) {
        out.witness = search.witness();
    }
    return out;
}

ExactResult exact_lir_multigraph(const Multigraph& m, const SearchLimits& lim) {
    lim.validate();
    ExactResult out;
    bool gap = false;
    for (int k = 1; k <= lim.max_colors; ++k) {
        SearchLimits step = lim;
        step.node_budget = lim.node_budget > out.nodes ? lim.node_budget - out.nodes : 1;
        auto r = search_coloring(m, k, step);
        out.nodes += r.nodes;
        out.k = k;
        if (r.status == SearchStatus::Found) {
            out.witness = std::move(r.witness);
            // A smaller k that ran out of budget leaves minimality open.
            out.status = gap ? SearchStatus::Inconclusive : SearchStatus::Found;
            return out;
        }
        if (r.status == SearchStatus::Inconclusive) {
            gap = true;
            if (out.nodes >= lim.node_budget) {
                break;
            }
        }
    }
    out.status = gap ? SearchStatus::Inconclusive : SearchStatus::None;
    return out;
}

ExactResult exact_lir_graph(const SimpleGraph& g, const SearchLimits& lim) {
    return exact_lir_multigraph(Multigraph(g, 1), lim);
}

SearchStatus is_decomposable(const SimpleGraph& g, const SearchLimits& lim) {
    if (g.edge_count() < 2) {
        return SearchStatus::None;
    }
    SearchLimits all = lim;
    all.max_colors = g.edge_count() / 2;
    const auto r = exact_lir_graph(g, all);
    if (r.witness) {
        return SearchStatus::Found;
    }
    return r.status;
}

std::optional<Decomposition> brute_force_double_two_coloring(const SimpleGraph& g) {
    const int m = g.edge_count();
    if (m > 20) {
        throw GraphError("brute force is limited to 20 edges");
    }
    std::vector<Split> splits(static_cast<std::size_t>(m), Split::RR);
    while (true) {
        auto d = from_splits(g, splits);
        if (verify(d).valid()) {
            return d;
        }
        // Increment the base-3 counter, edge 0 least significant.
        int i = 0;
        while (i < m && splits[static_cast<std::size_t>(i)] == Split::BB) {
            splits[static_cast<std::size_t>(i++)] = Split::RR;
        }
        if (i == m) {
            return std::nullopt;
        }
        auto& s = splits[static_cast<std::size_t>(i)];
        s = static_cast<Split>(static_cast<int>(s) + 1);
    }
}

}  // namespace lir
