#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lir/graph.hpp"

namespace lir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

/// Resolves an input spec: a family generator (path:7, cycle:11, wheel:6,
/// complete:5, kpartite:2,2,3, star:4, bowtie, random:N:P, randbip:N:P), a
/// file (graph6 lines or "u v" edge list), "-" for graph6 on stdin, or an
/// inline graph6 string.
std::vector<SimpleGraph> load_graphs(const std::string& spec, std::istream& stdin_stream, std::uint64_t seed);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lir::cli
