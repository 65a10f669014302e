#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lir/bipartite.hpp"
#include "lir/class_colorers.hpp"
#include "lir/enumerate.hpp"
#include "lir/exact.hpp"
#include "lir/harness.hpp"
#include "lir/io.hpp"
#include "lir/t_family.hpp"

namespace lir::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) {
        out.push_back(part);
    }
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + " '" + s + "'");
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + " '" + s + "'");
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        return line.find_first_of(" \t") != std::string::npos &&
               line.find_first_not_of("0123456789 \t\r") == std::string::npos;
    }
    return false;
}

std::optional<SimpleGraph> generator(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "bowtie" && arg.empty()) {
        return make_bowtie();
    }
    if (colon == std::string::npos) {
        return std::nullopt;
    }
    if (name == "path") {
        return make_path(to_int(arg, "path order"));
    }
    if (name == "cycle") {
        return make_cycle(to_int(arg, "cycle length"));
    }
    if (name == "wheel") {
        return make_wheel(to_int(arg, "wheel order"));
    }
    if (name == "complete") {
        return make_complete(to_int(arg, "complete order"));
    }
    if (name == "star") {
        return make_star(to_int(arg, "leaf count"));
    }
    if (name == "kpartite") {
        std::vector<int> sizes;
        for (const auto& p : split(arg, ',')) {
            sizes.push_back(to_int(p, "part size"));
        }
        return make_complete_multipartite(sizes);
    }
    if (name == "random" || name == "randbip") {
        const auto parts = split(arg, ':');
        if (parts.size() != 2) {
            throw UsageError(name + " expects N:P");
        }
        std::mt19937_64 rng(seed);
        const int n = to_int(parts[0], "order");
        const double p = to_double(parts[1], "edge probability");
        return name == "random" ? random_connected_graph(n, p, rng) : random_connected_bipartite(n, p, rng);
    }
    return std::nullopt;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimpleGraph single_graph(const std::string& spec, std::istream& in, std::uint64_t seed) {
    auto graphs = load_graphs(spec, in, seed);
    if (graphs.size() != 1) {
        throw UsageError("expected exactly one graph in '" + spec + "', found " + std::to_string(graphs.size()));
    }
    return std::move(graphs.front());
}

void add_limits(CLI::App* cmd, SearchLimits& lim) {
    cmd->add_option("--max-colors", lim.max_colors, "largest color count tried by the exact search");
    cmd->add_option("--max-edges", lim.max_edges, "refuse exact searches on larger graphs");
    cmd->add_option("--node-budget", lim.node_budget, "search-tree node budget");
}

void emit(const Decomposition& d, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(d);
    } else if (format == "dot") {
        out << to_dot(d);
    } else {
        out << to_summary(d);
    }
}

}  // namespace

std::vector<SimpleGraph> load_graphs(const std::string& spec, std::istream& stdin_stream, std::uint64_t seed) {
    if (spec == "-") {
        return read_graph6_stream(stdin_stream);
    }
    if (auto g = generator(spec, seed)) {
        return {std::move(*g)};
    }
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream file(spec);
        const std::string text = read_all(file);
        std::istringstream body(text);
        if (looks_like_edge_list(text)) {
            return {read_edge_list(body)};
        }
        return read_graph6_stream(body);
    }
    if (spec.find(':') != std::string::npos) {
        throw UsageError("unknown generator or missing file '" + spec + "'");
    }
    return {from_graph6(spec)};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally irregular decompositions of doubled graphs"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for random:N:P and randbip:N:P inputs");
    SearchLimits lim;
    try {
        lim = SearchLimits::from_environment();
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string input;
    std::string format = "summary";
    const std::vector<std::string> formats{"json", "dot", "summary"};

    auto* color = app.add_subcommand("color", "two-color ²G constructively (exact search as fallback)");
    color->add_option("input", input, "graph input")->required();
    color->add_option("--format", format)->check(CLI::IsMember(formats));
    bool force_bipartite = false;
    bool force_exact = false;
    bool force_t3 = false;
    color->add_flag("--bipartite", force_bipartite, "use the bipartite construction");
    color->add_flag("--exact", force_exact, "use the exact search");
    color->add_flag("--t-family3", force_t3, "three-color construction for the triangle family");
    add_limits(color, lim);

    auto* verify_cmd = app.add_subcommand("verify", "check a JSON decomposition");
    verify_cmd->add_option("decomposition", input, "JSON file or -")->required();

    auto* exact = app.add_subcommand("exact", "exact locally irregular chromatic index");
    exact->add_option("input", input, "graph input")->required();
    exact->add_option("--format", format)->check(CLI::IsMember(formats));
    bool graph_mode = false;
    exact->add_flag("--graph-mode", graph_mode, "color G itself instead of ²G");
    add_limits(exact, lim);

    auto* classify_cmd = app.add_subcommand("classify", "structural class of each input graph");
    classify_cmd->add_option("input", input, "graph input")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "check lir(²G) <= 2 over a corpus");
    int min_n = 3;
    int max_n = 0;
    std::string report_path;
    bool resume = false;
    SweepOptions sweep_opt;
    sweep_cmd->add_option("--input", input, "graph6 corpus instead of the built-in enumeration");
    sweep_cmd->add_option("--min-n", min_n, "smallest order to enumerate");
    sweep_cmd->add_option("--max-n", max_n, "largest order to enumerate (<= 8)");
    sweep_cmd->add_option("--jobs", sweep_opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--cross-check", sweep_opt.cross_check, "run the exact search next to every colorer");
    sweep_cmd->add_option("--report", report_path, "JSON-lines report file (default: stdout)");
    sweep_cmd->add_flag("--resume", resume, "skip graphs already in the report and append");
    add_limits(sweep_cmd, sweep_opt.limits);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (color->parsed()) {
            if (int(force_bipartite) + int(force_exact) + int(force_t3) > 1) {
                throw UsageError("choose at most one of --bipartite, --exact, --t-family3");
            }
            const SimpleGraph g = single_graph(input, in, seed);
            if (g.vertex_count() == 2 && g.edge_count() == 1) {
                err << "K2 is excluded by conjecture statement: ²K2 has no locally irregular coloring\n";
                return kExitInvalid;
            }
            if (!g.is_connected()) {
                throw UsageError("color needs a connected graph");
            }
            std::optional<Decomposition> d;
            if (force_bipartite) {
                d = color_double_bipartite(g);
            } else if (force_t3) {
                d = color_t_family_3(g);
            } else if (!force_exact) {
                d = color_by_class(g, classify(g));
            }
            if (!d) {
                SearchLimits two = lim;
                two.max_colors = std::min(lim.max_colors, 2);
                auto r = exact_lir_multigraph(double_graph(g), two);
                if (!r.witness) {
                    err << "exact search: " << to_string(r.status) << '\n';
                    return r.status == SearchStatus::None ? kExitInvalid : kExitInconclusive;
                }
                d = std::move(r.witness);
            }
            const auto report = verify(*d);
            if (!report.valid()) {
                err << "internal error: produced coloring has " << report.conflicts.size() << " conflicts\n";
                return kExitInvalid;
            }
            emit(*d, format, out);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::string text;
            if (input == "-") {
                text = read_all(in);
            } else {
                std::ifstream file(input);
                if (!file) {
                    throw UsageError("cannot open '" + input + "'");
                }
                text = read_all(file);
            }
            const Decomposition d = decomposition_from_json(text);
            const auto report = verify(d);
            if (report.valid()) {
                out << "valid: locally irregular " << d.colors() << "-coloring (" << d.colors_used()
                    << " colors used)\n";
                return kExitOk;
            }
            out << "invalid: " << report.conflicts.size() << " conflict(s)\n";
            for (const auto& c : report.conflicts) {
                out << "  color " << c.color << " edge " << c.edge.u << '-' << c.edge.v << " degree " << c.degree
                    << '\n';
            }
            return kExitInvalid;
        }

        if (exact->parsed()) {
            const SimpleGraph g = single_graph(input, in, seed);
            const Multigraph m = graph_mode ? Multigraph(g, 1) : double_graph(g);
            const auto r = exact_lir_multigraph(m, lim);
            if (r.witness) {
                out << "k=" << r.k << (r.status == SearchStatus::Inconclusive ? " (upper bound)" : "") << '\n';
                if (format != "summary") {
                    emit(*r.witness, format, out);
                } else {
                    out << to_summary(*r.witness);
                }
                return r.status == SearchStatus::Found ? kExitOk : kExitInconclusive;
            }
            out << to_string(r.status) << " (k <= " << lim.max_colors << ", " << r.nodes << " nodes)\n";
            return r.status == SearchStatus::None ? kExitInvalid : kExitInconclusive;
        }

        if (classify_cmd->parsed()) {
            for (const auto& g : load_graphs(input, in, seed)) {
                out << to_graph6(g) << ' ';
                if (!g.is_connected()) {
                    out << "disconnected\n";
                    continue;
                }
                const auto tag = classify(g);
                out << to_string(tag.kind);
                if (!tag.part_sizes.empty()) {
                    out << '(';
                    for (std::size_t i = 0; i < tag.part_sizes.size(); ++i) {
                        out << (i ? "," : "") << tag.part_sizes[i];
                    }
                    out << ')';
                }
                const auto tp = t_prime_kind(g);
                out << " t-prime=" << (tp ? to_string(*tp) : "no") << '\n';
            }
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            std::vector<SimpleGraph> graphs;
            if (!input.empty()) {
                graphs = load_graphs(input, in, seed);
            } else {
                if (max_n < 1) {
                    throw UsageError("sweep needs --input or --max-n");
                }
                for (int n = std::max(1, min_n); n <= max_n; ++n) {
                    auto level = enumerate_connected(n);
                    graphs.insert(graphs.end(), level.begin(), level.end());
                }
            }
            if (resume) {
                if (report_path.empty()) {
                    throw UsageError("--resume needs --report");
                }
                std::ifstream old(report_path);
                const auto done = recorded_ids(old);
                std::erase_if(graphs, [&](const SimpleGraph& g) { return done.contains(to_graph6(g)); });
            }
            const auto records = sweep(graphs, sweep_opt);
            std::ofstream file;
            std::ostream* sink = &out;
            if (!report_path.empty()) {
                file.open(report_path, resume ? std::ios::app : std::ios::trunc);
                if (!file) {
                    throw UsageError("cannot write '" + report_path + "'");
                }
                sink = &file;
            }
            for (const auto& r : records) {
                *sink << to_json_line(r) << '\n';
            }
            (report_path.empty() ? err : out) << summary_table(records);
            const auto s = summarize(records);
            if (s.counterexample_candidates > 0) {
                return kExitInvalid;
            }
            return s.inconclusive > 0 ? kExitInconclusive : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}

}  // namespace lir::cli
