#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpa/graph.hpp"

namespace cpa {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;         // each sorted ascending
  std::vector<std::vector<std::size_t>> tree;    // adjacency among bag indices

  /// Largest bag size minus one; -1 for a decomposition with no bags.
  long width() const;
};

/// Min-fill elimination heuristic (ties: smaller degree, then smaller id).
/// Always valid, not necessarily optimal.
TreeDecomposition tree_decomposition(const SimpleGraph& h);

/// Checks edge coverage, vertex coverage, running intersection, and that the
/// bag tree is a tree. Returns an empty string when valid, otherwise the first
/// violated condition.
std::string validate_decomposition(const SimpleGraph& h, const TreeDecomposition& td);

}  // namespace cpa
