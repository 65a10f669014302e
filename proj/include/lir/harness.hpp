#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lir/class_colorers.hpp"
#include "lir/decomposition.hpp"
#include "lir/exact.hpp"
#include "lir/graph.hpp"

namespace lir {

/// Constructive two-coloring of ²g for the classes that have one (paths,
/// cycles, wheels, complete, complete multipartite, bipartite). nullopt for
/// the rest. Throws for ²K2.
std::optional<Decomposition> color_by_class(const SimpleGraph& g, const ClassTag& tag);

enum class SweepMethod { None, Constructive, Exact, Both };
enum class SweepOutcome { Excluded, AtMostTwo, CounterexampleCandidate, Inconclusive };

const char* to_string(SweepMethod m);
const char* to_string(SweepOutcome o);

struct SweepRecord {
    std::string id;  // graph6
    int n = 0;
    int m = 0;
    std::string class_tag;
    SweepMethod method = SweepMethod::None;
    SweepOutcome outcome = SweepOutcome::Inconclusive;
    /// Re-verified witness for AtMostTwo.
    std::optional<Decomposition> witness;
    bool constructive_ok = false;
    /// Set only when the exact search ran.
    std::optional<SearchStatus> exact_status;
    std::string note;
    double runtime_ms = 0.0;
};

struct SweepOptions {
    SearchLimits limits;
    /// Also run the exact search where a constructive colorer succeeded.
    bool cross_check = false;
    int jobs = 1;
};

SweepRecord check_graph(const SimpleGraph& g, const SweepOptions& opt);

/// Checks every graph; records come back in input order whatever `jobs` is.
std::vector<SweepRecord> sweep(std::span<const SimpleGraph> graphs, const SweepOptions& opt);

struct SweepSummary {
    int total = 0;
    int excluded = 0;
    int at_most_two = 0;
    int counterexample_candidates = 0;
    int inconclusive = 0;
    int constructive = 0;
    int exact = 0;
    int both = 0;
    /// Cross-checked graphs where the colorer succeeded but the search did not.
    int disagreements = 0;
};

SweepSummary summarize(std::span<const SweepRecord> records);
std::string summary_table(std::span<const SweepRecord> records);

/// One JSON object per line. `with_runtime` = false gives byte-stable output.
std::string to_json_line(const SweepRecord& r, bool with_runtime = true);
/// graph6 ids already present in a JSON-lines report (for resuming).
std::set<std::string> recorded_ids(std::istream& report);

}  // namespace lir
