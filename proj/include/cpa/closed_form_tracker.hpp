#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cpa/chromatic.hpp"
#include "cpa/graph.hpp"

namespace cpa {

/// Follows a threshold chain edge by edge and keeps the closed-form factors of
/// the current graph while every component is a tree or a single cycle. Each
/// insertion costs one union-find step, so the chromatic step on forests and
/// cycle unions never rebuilds the graph.
class ClosedFormTracker {
 public:
  explicit ClosedFormTracker(std::size_t vertex_count);

  void add_edge(Edge e);

  /// Every component is a tree or a single cycle.
  bool in_family() const noexcept { return irregular_ == 0; }

  /// Factors of the current graph. Requires in_family().
  ClosedForm current() const;

  /// Factors of the current graph with `e` contracted. Requires in_family()
  /// and e to be an edge already added.
  ClosedForm contracted(Edge e);

 private:
  // Component shapes only ever move rightwards: a path may become a branched
  // tree or a cycle, and anything else that gains an edge becomes irregular.
  enum class Shape : std::uint8_t { path, tree, cycle, irregular };

  // Union-find parent, saturated degree and the root's component record in
  // one 12-byte slot, so an insertion touches few cache lines on long chains.
  // Edge counts follow from the shape: trees have vertices - 1, cycles vertices.
  struct Slot {
    std::uint32_t parent = 0;
    std::uint32_t vertices = 1;  // valid at roots
    std::uint8_t degree = 0;     // saturates at 3
    Shape shape = Shape::path;   // valid at roots
  };

  std::uint32_t find(std::uint32_t x);
  void account(const Slot& root, int sign);

  std::vector<Slot> slots_;
  std::size_t trees_ = 0;
  std::size_t tree_edges_ = 0;
  std::map<std::size_t, std::size_t> cycles_;
  std::size_t irregular_ = 0;
};

}  // namespace cpa
