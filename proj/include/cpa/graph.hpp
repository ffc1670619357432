#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cpa {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;
};

/// Simple graph on vertices 0..n-1. Edges are kept sorted and normalized.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws std::invalid_argument on loops, out-of-range ids or repeated pairs.
  SimpleGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
  bool has_edge(Edge e) const noexcept;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Simple graph with real edge weights; the experiment's input object.
/// Weight distinctness is checked when the threshold chain is built.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }

  SimpleGraph skeleton() const;

 private:
  std::size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
};

struct ThresholdEvent {
  std::size_t index = 0;  // 1-based event number j
  Edge edge;
  double weight = 0.0;
};

/// Edge insertions ordered by strictly increasing weight.
struct ThresholdChain {
  std::size_t vertex_count = 0;
  std::vector<ThresholdEvent> events;

  std::size_t size() const noexcept { return events.size(); }
  /// H_j: the first j inserted edges on the full vertex set.
  SimpleGraph prefix(std::size_t j) const;
};

/// Throws InvariantError when two edges share a weight.
ThresholdChain build_threshold_chain(const WeightedGraph& g);

/// Merges e.v into e.u, collapses parallel edges, and shifts ids above e.v down by one.
SimpleGraph contract_edge(const SimpleGraph& h, Edge e);
SimpleGraph delete_edge(const SimpleGraph& h, Edge e);

/// Weighted union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  Vertex find(Vertex x);
  /// Returns false when a and b were already joined.
  bool unite(Vertex a, Vertex b);
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_;
};

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const SimpleGraph& h);

/// Induced subgraph on `vertices` (relabelled to 0..k-1 in the given order).
SimpleGraph induced_subgraph(const SimpleGraph& h, std::span<const Vertex> vertices);

enum class GraphClass { forest, cycles, series_parallel, general };

const char* to_string(GraphClass c) noexcept;

/// forest: every component is a tree. cycles: every component is a tree or a
/// single cycle, and at least one is a cycle. series_parallel: no K4 minor.
GraphClass classify(const SimpleGraph& h);

bool is_forest(const SimpleGraph& h);
/// True when each component is a tree or a single cycle.
bool is_tree_or_cycle_union(const SimpleGraph& h);
/// True when h reduces to nothing by removing vertices of degree <= 1 and
/// suppressing vertices of degree 2 (merging the resulting parallel edges).
bool is_series_parallel(const SimpleGraph& h);

/// |E| - n + #components.
std::size_t cycle_rank(const SimpleGraph& h);

/// Edges lying on at least one cycle (non-bridges), sorted.
std::vector<Edge> cycle_edges(const SimpleGraph& h);

}  // namespace cpa
