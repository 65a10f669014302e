#include "lir/class_colorers.hpp"

#include <algorithm>
#include <numeric>

#include "lir/bipartite.hpp"
#include "lir/t_family.hpp"

namespace lir {

namespace {

// Walks a graph of maximum degree 2 from `start`, first towards `first`.
std::vector<Vertex> walk(const SimpleGraph& g, Vertex start, Vertex first, const std::vector<bool>& skip) {
    std::vector<Vertex> order{start};
    Vertex prev = start;
    Vertex cur = first;
    while (cur != start && cur >= 0) {
        order.push_back(cur);
        Vertex next = -1;
        for (const auto& inc : g.incident(cur)) {
            if (inc.neighbor != prev && !skip[static_cast<std::size_t>(inc.neighbor)]) {
                next = inc.neighbor;
                break;
            }
        }
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<ClassTag> as_path(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1) {
        return std::nullopt;
    }
    Vertex end = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 2) {
            return std::nullopt;
        }
        if (g.degree(v) <= 1 && end < 0) {
            end = v;
        }
    }
    if (n == 1) {
        return ClassTag{ClassKind::Path, {}, {0}};
    }
    const std::vector<bool> skip(static_cast<std::size_t>(n), false);
    return ClassTag{ClassKind::Path, {}, walk(g, end, g.incident(end).front().neighbor, skip)};
}

std::vector<Vertex> cycle_order(const SimpleGraph& g, const std::vector<bool>& skip, Vertex start) {
    Vertex first = -1;
    for (const auto& inc : g.incident(start)) {
        if (!skip[static_cast<std::size_t>(inc.neighbor)] && (first < 0 || inc.neighbor < first)) {
            first = inc.neighbor;
        }
    }
    return walk(g, start, first, skip);
}

std::optional<ClassTag> as_cycle(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) {
        return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) {
            return std::nullopt;
        }
    }
    const std::vector<bool> skip(static_cast<std::size_t>(n), false);
    return ClassTag{ClassKind::Cycle, {}, cycle_order(g, skip, 0)};
}

std::optional<ClassTag> as_wheel(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 4 || g.edge_count() != 2 * (n - 1)) {
        return std::nullopt;
    }
    for (Vertex hub = 0; hub < n; ++hub) {
        if (g.degree(hub) != n - 1) {
            continue;
        }
        bool rim_ok = true;
        for (Vertex v = 0; v < n && rim_ok; ++v) {
            rim_ok = v == hub || g.degree(v) == 3;
        }
        if (!rim_ok) {
            continue;
        }
        std::vector<bool> skip(static_cast<std::size_t>(n), false);
        skip[static_cast<std::size_t>(hub)] = true;
        const Vertex start = hub == 0 ? 1 : 0;
        auto order = cycle_order(g, skip, start);
        if (static_cast<int>(order.size()) != n - 1) {
            continue;
        }
        order.push_back(hub);
        return ClassTag{ClassKind::Wheel, {}, std::move(order)};
    }
    return std::nullopt;
}

std::optional<ClassTag> as_multipartite(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(parts.size());
        parts.push_back({});
        for (Vertex u = v; u < n; ++u) {
            if (u == v || !g.has_edge(u, v)) {
                if (part[static_cast<std::size_t>(u)] >= 0) {
                    return std::nullopt;
                }
                part[static_cast<std::size_t>(u)] = id;
                parts.back().push_back(u);
            }
        }
    }
    if (parts.size() < 2) {
        return std::nullopt;
    }
    long long expected = static_cast<long long>(n) * (n - 1) / 2;
    for (const auto& p : parts) {
        expected -= static_cast<long long>(p.size()) * (static_cast<long long>(p.size()) - 1) / 2;
    }
    if (expected != g.edge_count()) {
        return std::nullopt;
    }
    for (const auto& e : g.edges()) {
        if (part[static_cast<std::size_t>(e.u)] == part[static_cast<std::size_t>(e.v)]) {
            return std::nullopt;
        }
    }
    ClassTag tag{ClassKind::CompleteMultipartite, {}, {}};
    for (const auto& p : parts) {
        tag.part_sizes.push_back(static_cast<int>(p.size()));
        tag.layout.insert(tag.layout.end(), p.begin(), p.end());
    }
    return tag;
}

}  // namespace

const char* to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Path: return "path";
        case ClassKind::Cycle: return "cycle";
        case ClassKind::Wheel: return "wheel";
        case ClassKind::Complete: return "complete";
        case ClassKind::CompleteMultipartite: return "complete-multipartite";
        case ClassKind::Bipartite: return "bipartite";
        case ClassKind::TFamily: return "t-family";
        case ClassKind::OddPath: return "odd-path";
        case ClassKind::OddCycle: return "odd-cycle";
        case ClassKind::Other: return "other";
    }
    return "?";
}

ClassTag classify(const SimpleGraph& g) {
    if (g.vertex_count() == 0 || !g.is_connected()) {
        throw GraphError("classify needs a connected graph");
    }
    if (auto t = as_path(g)) {
        return *t;
    }
    const int n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) {
        std::vector<Vertex> layout(static_cast<std::size_t>(n));
        std::iota(layout.begin(), layout.end(), 0);
        return ClassTag{ClassKind::Complete, {}, std::move(layout)};
    }
    if (auto t = as_cycle(g)) {
        return *t;
    }
    if (auto t = as_wheel(g)) {
        return *t;
    }
    if (auto t = as_multipartite(g)) {
        return *t;
    }
    if (try_bipartition(g)) {
        return ClassTag{ClassKind::Bipartite, {}, {}};
    }
    if (recognize_t_family(g)) {
        return ClassTag{ClassKind::TFamily, {}, {}};
    }
    return ClassTag{};
}

Decomposition transplant(const Decomposition& templ, const SimpleGraph& g, std::span<const Vertex> layout) {
    const SimpleGraph& src = templ.graph();
    if (static_cast<int>(layout.size()) != src.vertex_count() || src.vertex_count() != g.vertex_count() ||
        src.edge_count() != g.edge_count()) {
        throw GraphError("layout does not match the template graph");
    }
    std::vector<int> mult(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> counts(static_cast<std::size_t>(g.edge_count() * templ.colors()), 0);
    for (EdgeId e = 0; e < src.edge_count(); ++e) {
        const Edge& ed = src.edge(e);
        const EdgeId target =
            g.find_edge(layout[static_cast<std::size_t>(ed.u)], layout[static_cast<std::size_t>(ed.v)]);
        if (target < 0 || mult[static_cast<std::size_t>(target)] != 0) {
            throw GraphError("layout is not an isomorphism onto the target graph");
        }
        mult[static_cast<std::size_t>(target)] = templ.host().mult(e);
        const auto row = templ.counts(e);
        std::copy(row.begin(), row.end(), counts.begin() + target * templ.colors());
    }
    return Decomposition(Multigraph(g, std::move(mult)), templ.colors(), std::move(counts));
}

Decomposition color_double_path(int n) {
    if (n <= 2) {
        throw GraphError("no locally irregular coloring exists for ²P" + std::to_string(n));
    }
    const int len = n - 1;
    std::vector<Split> splits;
    splits.reserve(static_cast<std::size_t>(len));
    if (len % 2 == 1) {
        splits = {Split::BB, Split::RB, Split::RR};
    }
    static constexpr std::array<Split, 4> kBlock = {Split::BB, Split::BB, Split::RR, Split::RR};
    for (std::size_t i = 0; splits.size() < static_cast<std::size_t>(len); ++i) {
        splits.push_back(kBlock[i % kBlock.size()]);
    }
    return from_splits(make_path(n), splits);
}

CycleBaseTable build_cycle_base_table() {
    CycleBaseTable table;
    table[3] = {Split::RR, Split::RB, Split::BB};
    for (int len = 4; len <= 7; ++len) {
        const SimpleGraph g = make_cycle(len);
        const int free = len - 2;
        int states = 1;
        for (int i = 0; i < free; ++i) {
            states *= 3;
        }
        bool found = false;
        for (int code = 0; code < states && !found; ++code) {
            std::vector<Split> splits{Split::RR, Split::RR};
            // Most significant digit first, so codes run in lexicographic order.
            for (int i = free - 1, rest = code; i >= 0; --i) {
                int p = 1;
                for (int j = 0; j < i; ++j) {
                    p *= 3;
                }
                splits.push_back(static_cast<Split>((rest / p) % 3));
            }
            if (verify(from_splits(g, splits)).valid()) {
                table[len] = std::move(splits);
                found = true;
            }
        }
        if (!found) {
            throw GraphError("no anchored coloring of ²C" + std::to_string(len));
        }
    }
    return table;
}

const CycleBaseTable& cycle_base_table() {
    using enum Split;
    static const CycleBaseTable table = {
        {3, {RR, RB, BB}},
        {4, {RR, RR, RB, RB}},
        {5, {RR, RR, RB, RB, BB}},
        {6, {RR, RR, RB, RB, BB, BB}},
        {7, {RR, RR, RB, RB, RR, BB, RB}},
    };
    return table;
}

std::vector<Split> double_cycle_splits(int len) {
    if (len < 3) {
        throw GraphError("cycle length must be at least 3");
    }
    const auto& table = cycle_base_table();
    if (len <= 7) {
        return table.at(len);
    }
    const int base_len = 4 + (len - 4) % 4;
    const auto& base = table.at(base_len);
    std::vector<Split> out(base.begin(), base.begin() + 2);
    for (int b = 0; b < (len - base_len) / 4; ++b) {
        out.insert(out.end(), {Split::BB, Split::BB, Split::RR, Split::RR});
    }
    out.insert(out.end(), base.begin() + 2, base.end());
    return out;
}

Decomposition color_double_cycle(int len) { return from_splits(make_cycle(len), double_cycle_splits(len)); }

Decomposition color_double_wheel(int n) {
    if (n < 4) {
        throw GraphError("wheel order must be at least 4");
    }
    auto splits = double_cycle_splits(n - 1);
    splits.resize(static_cast<std::size_t>(2 * (n - 1)), Split::RR);
    return from_splits(make_wheel(n), splits);
}

Decomposition color_double_complete(int n) {
    if (n < 3) {
        throw GraphError("complete graph order must be at least 3");
    }
    const SimpleGraph g = make_complete(n);
    Decomposition d(double_graph(g), 2);
    d.set(0, 1, Split::RR);
    d.set(1, 2, Split::RB);
    d.set(2, 0, Split::BB);
    for (Vertex v = 3; v < n; ++v) {
        const Split s = v % 2 == 1 ? Split::BB : Split::RR;
        for (Vertex u = 0; u < v; ++u) {
            d.set(u, v, s);
        }
    }
    return d;
}

Decomposition color_double_multipartite(std::span<const int> sizes) {
    if (sizes.size() < 2) {
        throw GraphError("complete multipartite graph needs at least two parts");
    }
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const SimpleGraph g = make_complete_multipartite(sizes);
    if (total < 3) {
        throw GraphError("²K2 has no locally irregular coloring");
    }
    std::vector<std::vector<Vertex>> part(sizes.size());
    for (Vertex v = 0, p = 0; p < static_cast<int>(sizes.size()); ++p) {
        for (int i = 0; i < sizes[static_cast<std::size_t>(p)]; ++i) {
            part[static_cast<std::size_t>(p)].push_back(v++);
        }
    }
    Decomposition d(double_graph(g), 2);
    auto color_between = [&](int a, int b, Split s) {
        for (Vertex u : part[static_cast<std::size_t>(a)]) {
            for (Vertex v : part[static_cast<std::size_t>(b)]) {
                d.set(u, v, s);
            }
        }
    };

    if (sizes.size() == 2) {
        if (sizes[0] != sizes[1]) {
            return d;  // already irregular, all red
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            d.set(e, g.edge(e).touches(part[0].front()) ? Split::RR : Split::BB);
        }
        return d;
    }

    // Largest parts first. Part i >= 4 then joins all earlier parts in one
    // color, alternating blue, red, ...; with non-increasing sizes a later
    // part never ties with the parts before it.
    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
    });
    const int a = order[0];
    const int b = order[1];
    const int c = order[2];
    const int sa = sizes[static_cast<std::size_t>(a)];
    const int sb = sizes[static_cast<std::size_t>(b)];
    const int sc = sizes[static_cast<std::size_t>(c)];
    if (sa == sb && sb == sc) {
        color_between(a, c, Split::RR);
        color_between(b, c, Split::BB);
        color_between(a, b, Split::RB);
    } else if (sa != sb && sb != sc && sa != sc) {
        // distinct sizes: the triple is irregular as is
    } else {
        // two equal parts (x, y) and a different one (z): x--z blue, rest red
        int x = a;
        int y = b;
        int z = c;
        if (sa != sb) {
            // sorted descending, so sa > sb == sc
            x = b;
            y = c;
            z = a;
        }
        color_between(x, z, Split::BB);
        color_between(x, y, Split::RR);
        color_between(y, z, Split::RR);
    }
    for (std::size_t i = 3; i < order.size(); ++i) {
        const Split s = i % 2 == 1 ? Split::BB : Split::RR;
        for (std::size_t j = 0; j < i; ++j) {
            color_between(order[i], order[j], s);
        }
    }
    return d;
}

}  // namespace lir
