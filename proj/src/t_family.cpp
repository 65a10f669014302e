#include "lir/t_family.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lir {

TFamilyBuilder::TFamilyBuilder() : degree_(3, 2), in_triangle_(3, true) {
    edges_ = {{0, 1}, {1, 2}, {2, 0}};
    witness_.root = {0, 1, 2};
}

std::vector<Vertex> TFamilyBuilder::open_sites() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (in_triangle_[static_cast<std::size_t>(v)] && degree_[static_cast<std::size_t>(v)] == 2) {
            out.push_back(v);
        }
    }
    return out;
}

void TFamilyBuilder::require_open(Vertex at) const {
    if (at < 0 || at >= n_ || !in_triangle_[static_cast<std::size_t>(at)] ||
        degree_[static_cast<std::size_t>(at)] != 2) {
        throw GraphError("vertex " + std::to_string(at) + " is not a degree-2 triangle vertex");
    }
}

std::vector<Vertex> TFamilyBuilder::extend_path(Vertex at, int length) {
    std::vector<Vertex> path;
    Vertex prev = at;
    for (int i = 0; i < length; ++i) {
        const Vertex v = n_++;
        degree_.push_back(0);
        in_triangle_.push_back(false);
        edges_.emplace_back(prev, v);
        ++degree_[static_cast<std::size_t>(prev)];
        ++degree_[static_cast<std::size_t>(v)];
        path.push_back(v);
        prev = v;
    }
    return path;
}

void TFamilyBuilder::attach_pendant(Vertex at, int even_length) {
    require_open(at);
    if (even_length < 2 || even_length % 2 != 0) {
        throw GraphError("pendant paths must have positive even length");
    }
    witness_.attachments.push_back({at, extend_path(at, even_length), std::nullopt});
}

void TFamilyBuilder::attach_triangle(Vertex at, int odd_length) {
    require_open(at);
    if (odd_length < 1 || odd_length % 2 != 1) {
        throw GraphError("triangle links must have odd length");
    }
    auto path = extend_path(at, odd_length);
    const Vertex w = path.back();
    const Vertex x = n_++;
    const Vertex y = n_++;
    degree_.insert(degree_.end(), {2, 2});
    in_triangle_.insert(in_triangle_.end(), {true, true});
    in_triangle_[static_cast<std::size_t>(w)] = true;
    degree_[static_cast<std::size_t>(w)] += 2;
    edges_.insert(edges_.end(), {{w, x}, {x, y}, {y, w}});
    witness_.attachments.push_back({at, std::move(path), std::array<Vertex, 2>{x, y}});
}

SimpleGraph TFamilyBuilder::graph() const {
    SimpleGraph g(n_);
    for (const auto& [u, v] : edges_) {
        g.add_edge(u, v);
    }
    return g;
}

std::optional<TFamilyWitness> recognize_t_family(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) {
        return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 3) {
            return std::nullopt;
        }
    }
    // Triangles must be vertex-disjoint.
    std::vector<int> tri_of(static_cast<std::size_t>(n), -1);
    std::vector<std::array<Vertex, 3>> triangles;
    for (const auto& e : g.edges()) {
        for (const auto& inc : g.incident(e.u)) {
            const Vertex w = inc.neighbor;
            if (w <= e.v || !g.has_edge(e.v, w)) {
                continue;
            }
            std::array<Vertex, 3> t{e.u, e.v, w};
            for (Vertex x : t) {
                if (tri_of[static_cast<std::size_t>(x)] >= 0) {
                    return std::nullopt;
                }
            }
            for (Vertex x : t) {
                tri_of[static_cast<std::size_t>(x)] = static_cast<int>(triangles.size());
            }
            triangles.push_back(t);
        }
    }
    if (triangles.empty()) {
        return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (tri_of[static_cast<std::size_t>(v)] < 0 && g.degree(v) > 2) {
            return std::nullopt;
        }
    }

    // Follow the single extra edge of a degree-3 triangle vertex until a leaf
    // or another triangle vertex.
    struct Leg {
        std::vector<Vertex> path;
        int far_triangle = -1;
    };
    auto follow = [&](Vertex at) -> std::optional<Leg> {
        Vertex prev = at;
        Vertex cur = -1;
        for (const auto& inc : g.incident(at)) {
            if (tri_of[static_cast<std::size_t>(inc.neighbor)] != tri_of[static_cast<std::size_t>(at)]) {
                cur = inc.neighbor;
            }
        }
        Leg leg;
        while (true) {
            leg.path.push_back(cur);
            if (tri_of[static_cast<std::size_t>(cur)] >= 0) {
                leg.far_triangle = tri_of[static_cast<std::size_t>(cur)];
                return leg;
            }
            if (g.degree(cur) == 1) {
                return leg;
            }
            Vertex next = -1;
            for (const auto& inc : g.incident(cur)) {
                if (inc.neighbor != prev) {
                    next = inc.neighbor;
                }
            }
            if (next == at) {
                return std::nullopt;
            }
            prev = cur;
            cur = next;
        }
    };

    TFamilyWitness witness;
    witness.root = triangles.front();
    std::vector<bool> placed(triangles.size(), false);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> pending;
    placed[0] = true;
    pending.push(0);
    for (Vertex x : triangles.front()) {
        seen[static_cast<std::size_t>(x)] = true;
    }
    while (!pending.empty()) {
        const int t = pending.front();
        pending.pop();
        for (Vertex at : triangles[static_cast<std::size_t>(t)]) {
            if (g.degree(at) != 3) {
                continue;
            }
            auto leg = follow(at);
            if (!leg) {
                return std::nullopt;
            }
            const Vertex end = leg->path.back();
            if (leg->far_triangle < 0) {
                if (leg->path.size() % 2 != 0) {
                    return std::nullopt;
                }
                for (Vertex v : leg->path) {
                    seen[static_cast<std::size_t>(v)] = true;
                }
                witness.attachments.push_back({at, std::move(leg->path), std::nullopt});
                continue;
            }
            const int far = leg->far_triangle;
            if (far == t) {
                return std::nullopt;
            }
            if (placed[static_cast<std::size_t>(far)]) {
                // The link back to the parent was recorded from the other end,
                // anything else closes a cycle of triangles.
                if (!seen[static_cast<std::size_t>(leg->path.front())]) {
                    return std::nullopt;
                }
                continue;
            }
            if (leg->path.size() % 2 != 1) {
                return std::nullopt;
            }
            placed[static_cast<std::size_t>(far)] = true;
            pending.push(far);
            std::array<Vertex, 2> rest{};
            int i = 0;
            for (Vertex x : triangles[static_cast<std::size_t>(far)]) {
                if (x != end) {
                    rest[static_cast<std::size_t>(i++)] = x;
                }
                seen[static_cast<std::size_t>(x)] = true;
            }
            for (Vertex v : leg->path) {
                seen[static_cast<std::size_t>(v)] = true;
            }
            witness.attachments.push_back({at, std::move(leg->path), rest});
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        return std::nullopt;
    }
    const auto links = std::count_if(witness.attachments.begin(), witness.attachments.end(),
                                     [](const Attachment& a) { return a.triangle.has_value(); });
    if (static_cast<std::size_t>(links) + 1 != triangles.size() || g.edge_count() != n - 1 + static_cast<int>(triangles.size())) {
        return std::nullopt;
    }
    return witness;
}

std::optional<ClassKind> t_prime_kind(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !g.is_connected()) {
        return std::nullopt;
    }
    const bool max_deg_two = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return g.degree(e.u) <= 2 && g.degree(e.v) <= 2;
    });
    if (max_deg_two && g.edge_count() == n - 1 && g.edge_count() % 2 == 1) {
        return ClassKind::OddPath;
    }
    if (max_deg_two && g.edge_count() == n && n % 2 == 1) {
        return ClassKind::OddCycle;
    }
    if (recognize_t_family(g)) {
        return ClassKind::TFamily;
    }
    return std::nullopt;
}

bool recognize_t_prime(const SimpleGraph& g) { return t_prime_kind(g).has_value(); }

Decomposition color_t_family_3(const SimpleGraph& g, const TFamilyWitness& w) {
    constexpr int kColors = 3;
    Decomposition d(double_graph(g), kColors);
    std::vector<unsigned> present(static_cast<std::size_t>(g.vertex_count()), 0);
    auto paint = [&](Vertex u, Vertex v, int c) {
        const EdgeId e = g.find_edge(u, v);
        if (e < 0) {
            throw GraphError("witness names a missing edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        d.set_all(e, c);
        present[static_cast<std::size_t>(u)] |= 1u << c;
        present[static_cast<std::size_t>(v)] |= 1u << c;
    };

    const auto [a, b, c] = w.root;
    d.set(a, b, Split::RR);
    d.set(b, c, Split::RB);
    d.set(c, a, Split::BB);
    for (Vertex x : w.root) {
        present[static_cast<std::size_t>(x)] = 0b11;
    }

    for (const auto& att : w.attachments) {
        int first = 0;
        while (present[static_cast<std::size_t>(att.at)] & (1u << first)) {
            ++first;
        }
        const int second = first == 0 ? 1 : 0;
        // Walk of the attachment; a link continues around its new triangle.
        std::vector<Vertex> walk{att.at};
        walk.insert(walk.end(), att.path.begin(), att.path.end());
        if (att.triangle) {
            walk.push_back((*att.triangle)[0]);
            walk.push_back((*att.triangle)[1]);
            walk.push_back(att.path.back());
        }
        if ((walk.size() - 1) % 2 != 0) {
            throw GraphError("attachment does not split into length-2 blocks");
        }
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            paint(walk[i], walk[i + 1], (i / 2) % 2 == 0 ? first : second);
        }
    }
    return d;
}

Decomposition color_t_family_3(const SimpleGraph& g) {
    const auto w = recognize_t_family(g);
    if (!w) {
        throw GraphError("graph is not in the triangle family");
    }
    return color_t_family_3(g, *w);
}

}  // namespace lir
