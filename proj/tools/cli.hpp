#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Reads a graph argument: a constructor spec ("F n m", "H n", "K n",
/// "K1 s", "C k", "P k"), a path to an edge-list file, or a graph6 string.
Graph read_graph(const std::string& text);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace oddcycle::cli
