#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cpa/graph.hpp"

namespace cpa {

// Text format:
//   # comment
//   n 5
//   0 1 0.25
//   1 2 0.12   # trailing comments are fine too
// The header must precede every edge line.

/// Throws ParseError (with a 1-based line number) on malformed input,
/// including loops, repeated pairs and out-of-range vertex ids.
WeightedGraph parse_edge_list(std::istream& in);
WeightedGraph parse_edge_list(const std::string& text);
WeightedGraph read_edge_list(const std::filesystem::path& path);

/// Weights are written in shortest round-trip form.
std::string format_edge_list(const WeightedGraph& g);

}  // namespace cpa
