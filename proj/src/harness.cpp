#include "lir/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lir/bipartite.hpp"
#include "lir/io.hpp"

namespace lir {

std::optional<Decomposition> color_by_class(const SimpleGraph& g, const ClassTag& tag) {
    const int n = g.vertex_count();
    switch (tag.kind) {
        case ClassKind::Path: return transplant(color_double_path(n), g, tag.layout);
        case ClassKind::Cycle: return transplant(color_double_cycle(n), g, tag.layout);
        case ClassKind::Wheel: return transplant(color_double_wheel(n), g, tag.layout);
        case ClassKind::Complete: return transplant(color_double_complete(n), g, tag.layout);
        case ClassKind::CompleteMultipartite:
            return transplant(color_double_multipartite(tag.part_sizes), g, tag.layout);
        case ClassKind::Bipartite: return color_double_bipartite(g);
        default: return std::nullopt;
    }
}

const char* to_string(SweepMethod m) {
    switch (m) {
        case SweepMethod::None: return "none";
        case SweepMethod::Constructive: return "constructive";
        case SweepMethod::Exact: return "exact";
        case SweepMethod::Both: return "both";
    }
    return "?";
}

const char* to_string(SweepOutcome o) {
    switch (o) {
        case SweepOutcome::Excluded: return "excluded";
        case SweepOutcome::AtMostTwo: return "lir<=2";
        case SweepOutcome::CounterexampleCandidate: return "counterexample-candidate";
        case SweepOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

SweepRecord check_graph(const SimpleGraph& g, const SweepOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SweepRecord r;
    r.id = to_graph6(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    auto finish = [&]() {
        r.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    if (r.m == 0 || (r.n == 2 && r.m == 1)) {
        r.outcome = SweepOutcome::Excluded;
        r.note = r.m == 0 ? "no edges" : "K2 is excluded";
        return finish();
    }
    if (!g.is_connected()) {
        r.note = "disconnected input";
        return finish();
    }

    const ClassTag tag = classify(g);
    r.class_tag = to_string(tag.kind);

    std::optional<Decomposition> constructive;
    try {
        constructive = color_by_class(g, tag);
    } catch (const GraphError& e) {
        r.note = std::string("colorer failed: ") + e.what();
    }
    if (constructive) {
        r.method = SweepMethod::Constructive;
        if (verify(*constructive).valid()) {
            r.constructive_ok = true;
            r.witness = std::move(constructive);
        } else {
            r.note = "constructive coloring did not verify";
        }
    }

    if (!r.constructive_ok || opt.cross_check) {
        SearchLimits lim = opt.limits;
        lim.max_colors = 2;
        if (r.m > lim.max_edges) {
            r.note += (r.note.empty() ? "" : "; ") + std::string("too many edges for the exact search");
        } else {
            auto result = exact_lir_multigraph(double_graph(g), lim);
            r.method = r.method == SweepMethod::Constructive ? SweepMethod::Both : SweepMethod::Exact;
            r.exact_status = result.witness ? SearchStatus::Found : result.status;
            if (result.witness && !verify(*result.witness).valid()) {
                r.note += (r.note.empty() ? "" : "; ") + std::string("exact witness did not verify");
                r.exact_status = SearchStatus::Inconclusive;
            } else if (result.witness && !r.witness) {
                r.witness = std::move(result.witness);
            }
        }
    }

    if (r.witness) {
        r.outcome = SweepOutcome::AtMostTwo;
    } else if (r.exact_status == SearchStatus::None) {
        r.outcome = SweepOutcome::CounterexampleCandidate;
    } else {
        r.outcome = SweepOutcome::Inconclusive;
    }
    return finish();
}

std::vector<SweepRecord> sweep(std::span<const SimpleGraph> graphs, const SweepOptions& opt) {
    std::vector<SweepRecord> out(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            out[i] = check_graph(graphs[i], opt);
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return out;
}

SweepSummary summarize(std::span<const SweepRecord> records) {
    SweepSummary s;
    for (const auto& r : records) {
        ++s.total;
        switch (r.outcome) {
            case SweepOutcome::Excluded: ++s.excluded; break;
            case SweepOutcome::AtMostTwo: ++s.at_most_two; break;
            case SweepOutcome::CounterexampleCandidate: ++s.counterexample_candidates; break;
            case SweepOutcome::Inconclusive: ++s.inconclusive; break;
        }
        switch (r.method) {
            case SweepMethod::Constructive: ++s.constructive; break;
            case SweepMethod::Exact: ++s.exact; break;
            case SweepMethod::Both: ++s.both; break;
            case SweepMethod::None: break;
        }
        if (r.method == SweepMethod::Both && r.constructive_ok && r.exact_status != SearchStatus::Found) {
            ++s.disagreements;
        }
    }
    return s;
}

std::string summary_table(std::span<const SweepRecord> records) {
    std::map<int, SweepSummary> by_n;
    for (const auto& r : records) {
        const auto one = summarize(std::span<const SweepRecord>(&r, 1));
        auto& acc = by_n[r.n];
        acc.total += one.total;
        acc.excluded += one.excluded;
        acc.at_most_two += one.at_most_two;
        acc.counterexample_candidates += one.counterexample_candidates;
        acc.inconclusive += one.inconclusive;
        acc.constructive += one.constructive;
        acc.exact += one.exact;
        acc.both += one.both;
        acc.disagreements += one.disagreements;
    }
    std::ostringstream out;
    auto row = [&](const std::string& label, const SweepSummary& s) {
        out << std::setw(6) << label << std::setw(8) << s.total << std::setw(9) << s.excluded << std::setw(8)
            << s.at_most_two << std::setw(8) << s.counterexample_candidates << std::setw(8) << s.inconclusive
            << std::setw(8) << s.constructive << std::setw(7) << s.exact << std::setw(7) << s.both << '\n';
    };
    out << std::setw(6) << "n" << std::setw(8) << "graphs" << std::setw(9) << "excluded" << std::setw(8) << "lir<=2"
        << std::setw(8) << "cand." << std::setw(8) << "incon." << std::setw(8) << "constr" << std::setw(7) << "exact"
        << std::setw(7) << "both" << '\n';
    for (const auto& [n, s] : by_n) {
        row(std::to_string(n), s);
    }
    row("all", summarize(records));
    return out.str();
}

std::string to_json_line(const SweepRecord& r, bool with_runtime) {
    nlohmann::ordered_json j;
    j["graph6"] = r.id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["class"] = r.class_tag;
    j["method"] = to_string(r.method);
    j["result"] = to_string(r.outcome);
    if (r.exact_status) {
        j["exact"] = to_string(*r.exact_status);
    }
    if (r.witness) {
        j["colors"] = r.witness->colors_used();
        auto w = nlohmann::ordered_json::array();
        for (EdgeId e = 0; e < r.witness->graph().edge_count(); ++e) {
            const Edge& ed = r.witness->graph().edge(e);
            const auto row = r.witness->counts(e);
            w.push_back({ed.u, ed.v, std::vector<int>(row.begin(), row.end())});
        }
        j["witness"] = std::move(w);
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    if (with_runtime) {
        j["runtime_ms"] = std::round(r.runtime_ms * 1000.0) / 1000.0;
    }
    return j.dump();
}

std::set<std::string> recorded_ids(std::istream& report) {
    std::set<std::string> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(report, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            ids.insert(nlohmann::json::parse(line).at("graph6").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("unreadable report line: ") + e.what(), lineno);
        }
    }
    return ids;
}

}  // namespace lir
