#include "lir/io.hpp"

#include <array>
#include <istream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lir {

namespace {

constexpr int kMaxShortN = 62;
constexpr int kMaxMediumN = 258047;

void append_n(std::string& out, std::uint64_t n) {
    if (n <= kMaxShortN) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxMediumN) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

const char* color_name(int c) {
    static constexpr std::array<const char*, 8> kPalette = {"red",    "blue",  "darkgreen", "orange",
                                                            "purple", "brown", "cyan",      "magenta"};
    return kPalette[static_cast<std::size_t>(c) % kPalette.size()];
}

}  // namespace

ParseError::ParseError(const std::string& what, int line)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string to_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_n(out, static_cast<std::uint64_t>(n));
    int bits = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) {
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    }
    return out;
}

SimpleGraph from_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    if (text.empty()) {
        throw ParseError("empty graph6 string", 0);
    }
    for (char ch : text) {
        if (ch < 63 || ch > 126) {
            throw ParseError(std::string("invalid graph6 byte '") + ch + "'", 0);
        }
    }
    std::size_t pos = 0;
    auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size()) {
                throw ParseError("truncated graph6 size field", 0);
            }
            v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
        }
        return v;
    };
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > 100000) {
        throw ParseError("graph6 order " + std::to_string(n) + " too large", 0);
    }
    const auto nn = static_cast<int>(n);
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (pairs + 5) / 6;
    if (text.size() - pos != need) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(need),
                         0);
    }
    SimpleGraph g(nn);
    std::uint64_t bit = 0;
    for (int j = 1; j < nn; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    const int pad = static_cast<int>((6 - pairs % 6) % 6);
    if (pad > 0 && ((text.back() - 63) & ((1 << pad) - 1)) != 0) {
        throw ParseError("nonzero graph6 padding bits", 0);
    }
    return g;
}

std::vector<SimpleGraph> read_graph6_stream(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t == ">>graph6<<") {
            continue;
        }
        try {
            out.push_back(from_graph6(t));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        } catch (const GraphError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

SimpleGraph read_edge_list(std::istream& in) {
    struct Entry {
        int u;
        int v;
        int line;
    };
    std::vector<Entry> pairs;
    std::string line;
    int lineno = 0;
    int n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        std::istringstream ls(line);
        long long u = -1;
        long long v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0 || u > 1000000 || v > 1000000) {
            throw ParseError("expected two non-negative vertex ids", lineno);
        }
        pairs.push_back({static_cast<int>(u), static_cast<int>(v), lineno});
        n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
    }
    SimpleGraph g(n);
    for (const auto& p : pairs) {
        try {
            g.add_edge(p.u, p.v);
        } catch (const GraphError& e) {
            throw ParseError(e.what(), p.line);
        }
    }
    return g;
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

std::string to_json(const Decomposition& d) {
    nlohmann::ordered_json doc;
    doc["n"] = d.graph().vertex_count();
    doc["k"] = d.colors();
    auto edges = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < d.graph().edge_count(); ++e) {
        const Edge& ed = d.graph().edge(e);
        const auto row = d.counts(e);
        nlohmann::ordered_json item;
        item["u"] = ed.u;
        item["v"] = ed.v;
        item["mult"] = d.host().mult(e);
        item["counts"] = std::vector<int>(row.begin(), row.end());
        edges.push_back(std::move(item));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Decomposition decomposition_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    try {
        const auto& edges = doc.at("edges");
        int k = doc.contains("k") ? doc.at("k").get<int>() : 0;
        int n = doc.contains("n") ? doc.at("n").get<int>() : 0;
        for (const auto& item : edges) {
            n = std::max(n, std::max(item.at("u").get<int>(), item.at("v").get<int>()) + 1);
            if (k == 0) {
                k = static_cast<int>(item.at("counts").size());
            }
        }
        if (k < 1) {
            throw ParseError("decomposition has no colors", 0);
        }
        SimpleGraph g(n);
        std::vector<int> mult;
        std::vector<int> counts;
        for (const auto& item : edges) {
            g.add_edge(item.at("u").get<int>(), item.at("v").get<int>());
            auto row = item.at("counts").get<std::vector<int>>();
            if (static_cast<int>(row.size()) != k) {
                throw ParseError("counts row length differs from k", 0);
            }
            const int sum = std::accumulate(row.begin(), row.end(), 0);
            const int mu = item.contains("mult") ? item.at("mult").get<int>() : sum;
            mult.push_back(mu);
            counts.insert(counts.end(), row.begin(), row.end());
        }
        return Decomposition(Multigraph(std::move(g), std::move(mult)), k, std::move(counts));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed decomposition: ") + e.what(), 0);
    }
}

std::string to_dot(const Decomposition& d) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (EdgeId e = 0; e < d.graph().edge_count(); ++e) {
        const Edge& ed = d.graph().edge(e);
        const auto row = d.counts(e);
        for (int c = 0; c < d.colors(); ++c) {
            for (int copy = 0; copy < row[static_cast<std::size_t>(c)]; ++copy) {
                out << "  " << ed.u << " -- " << ed.v << " [color=" << color_name(c) << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_summary(const Decomposition& d) {
    std::ostringstream out;
    const auto table = color_degree_table(d);
    const int k = d.colors();
    out << "n=" << d.graph().vertex_count() << " m=" << d.graph().edge_count() << " k=" << k
        << " used=" << d.colors_used() << '\n';
    for (EdgeId e = 0; e < d.graph().edge_count(); ++e) {
        const Edge& ed = d.graph().edge(e);
        out << "  " << ed.u << '-' << ed.v << ' ';
        if (k == 2 && d.host().mult(e) == 2) {
            out << to_string(d.split(e));
        } else {
            const auto row = d.counts(e);
            out << '[';
            for (int c = 0; c < k; ++c) {
                out << (c ? "," : "") << row[static_cast<std::size_t>(c)];
            }
            out << ']';
        }
        out << '\n';
    }
    out << "color degrees:\n";
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v) {
        out << "  " << v << ':';
        for (int c = 0; c < k; ++c) {
            out << ' ' << table[static_cast<std::size_t>(v * k + c)];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lir
