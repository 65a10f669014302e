#include <doctest.h>

#include <sstream>
#include <vector>

#include "lir/enumerate.hpp"
#include "lir/harness.hpp"
#include "lir/io.hpp"

using namespace lir;

namespace {

std::vector<SimpleGraph> small_graphs(int max_n) {
    std::vector<SimpleGraph> out;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& g : enumerate_connected(n)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("K2 and edgeless inputs are excluded") {
    auto r = check_graph(SimpleGraph(2, {{0, 1}}), {});
    CHECK(r.outcome == SweepOutcome::Excluded);
    CHECK_FALSE(r.witness.has_value());
    CHECK(check_graph(SimpleGraph(1), {}).outcome == SweepOutcome::Excluded);
}

TEST_CASE("disconnected input is recorded, not thrown") {
    auto r = check_graph(SimpleGraph(4, {{0, 1}, {1, 2}}), {});
    CHECK(r.outcome == SweepOutcome::Inconclusive);
    CHECK(r.note == "disconnected input");
}

TEST_CASE("bow-tie goes to the exact search") {
    auto r = check_graph(make_bowtie(), {});
    CHECK(r.class_tag == "other");
    CHECK(r.method == SweepMethod::Exact);
    CHECK(r.outcome == SweepOutcome::AtMostTwo);
    REQUIRE(r.witness.has_value());
    CHECK(verify(*r.witness).valid());
    CHECK(r.witness->colors_used() == 2);
}

TEST_CASE("constructive classes skip the search unless cross-checking") {
    auto r = check_graph(make_cycle(9), {});
    CHECK(r.method == SweepMethod::Constructive);
    CHECK(r.constructive_ok);
    CHECK_FALSE(r.exact_status.has_value());
    SweepOptions cross;
    cross.cross_check = true;
    auto both = check_graph(make_cycle(9), cross);
    CHECK(both.method == SweepMethod::Both);
    CHECK(both.exact_status == SearchStatus::Found);
}

TEST_CASE("color_by_class") {
    CHECK_FALSE(color_by_class(make_bowtie(), classify(make_bowtie())).has_value());
    auto d = color_by_class(make_wheel(7), classify(make_wheel(7)));
    REQUIRE(d.has_value());
    CHECK(verify(*d).valid());
}

TEST_CASE("sweep up to six vertices has no counterexample candidates") {
    const auto graphs = small_graphs(6);
    SweepOptions opt;
    opt.cross_check = true;
    const auto records = sweep(graphs, opt);
    REQUIRE(records.size() == graphs.size());
    for (const auto& r : records) {
        if (r.witness) {
            CHECK(verify(*r.witness).valid());
        }
    }
    const auto s = summarize(records);
    CHECK(s.total == 1 + 2 + 6 + 21 + 112);
    CHECK(s.excluded == 1);
    CHECK(s.at_most_two == s.total - 1);
    CHECK(s.counterexample_candidates == 0);
    CHECK(s.inconclusive == 0);
    CHECK(s.disagreements == 0);
    const std::string table = summary_table(records);
    CHECK(table.find("all") != std::string::npos);
}

TEST_CASE("parallel sweep matches the serial one line for line") {
    const auto graphs = small_graphs(5);
    SweepOptions one;
    SweepOptions many;
    many.jobs = 4;
    const auto a = sweep(graphs, one);
    const auto b = sweep(graphs, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == to_graph6(graphs[i]));
        CHECK(to_json_line(a[i], false) == to_json_line(b[i], false));
    }
}

TEST_CASE("JSON lines and resume ids") {
    auto r = check_graph(make_bowtie(), {});
    const std::string line = to_json_line(r, false);
    CHECK(line.find("\"graph6\":\"D{c\"") != std::string::npos);
    CHECK(line.find("\"result\":\"lir<=2\"") != std::string::npos);
    CHECK(line.find("runtime_ms") == std::string::npos);
    CHECK(to_json_line(r).find("runtime_ms") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);
    std::istringstream report(line + "\n\n" + to_json_line(check_graph(make_path(3), {})) + "\n");
    CHECK(recorded_ids(report) == std::set<std::string>{"D{c", "Bg"});
    std::istringstream bad("{\"n\":1}\n");
    CHECK_THROWS_AS(recorded_ids(bad), GraphError);
}

TEST_CASE("exact search respects the edge limit") {
    SweepOptions opt;
    opt.limits.max_edges = 5;
    auto r = check_graph(make_bowtie(), opt);
    CHECK(r.outcome == SweepOutcome::Inconclusive);
    CHECK(r.note.find("too many edges") != std::string::npos);
}
