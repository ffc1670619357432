#include "cpa/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cpa/error.hpp"

namespace cpa {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) throw std::invalid_argument("vertex id " + std::to_string(e.v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("repeated edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(Edge e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("weighted graph needs at least one vertex");
  // Reuse the simple-graph validation for loops, ranges and repeats.
  (void)skeleton();
}

SimpleGraph WeightedGraph::skeleton() const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.emplace_back(e.u, e.v);
  return SimpleGraph(n_, std::move(es));
}

SimpleGraph ThresholdChain::prefix(std::size_t j) const {
  if (j > events.size()) throw std::out_of_range("threshold index past the last event");
  std::vector<Edge> es;
  es.reserve(j);
  for (std::size_t i = 0; i < j; ++i) es.push_back(events[i].edge);
  return SimpleGraph(vertex_count, std::move(es));
}

ThresholdChain build_threshold_chain(const WeightedGraph& g) {
  std::vector<WeightedEdge> sorted(g.edges().begin(), g.edges().end());
  // Edges are distinct pairs, so (w, u, v) is a total order and the result
  // does not depend on the input listing.
  std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.w != b.w) return a.w < b.w;
    return std::pair(std::min(a.u, a.v), std::max(a.u, a.v)) < std::pair(std::min(b.u, b.v), std::max(b.u, b.v));
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i - 1].w < sorted[i].w)) {
      std::ostringstream msg;
      msg << "duplicate edge weight " << sorted[i].w << " on edges {" << sorted[i - 1].u << "," << sorted[i - 1].v
          << "} and {" << sorted[i].u << "," << sorted[i].v << "}; threshold chains require pairwise distinct weights";
      throw InvariantError(msg.str());
    }
  }
  ThresholdChain chain;
  chain.vertex_count = g.vertex_count();
  chain.events.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    chain.events.push_back({i + 1, Edge(sorted[i].u, sorted[i].v), sorted[i].w});
  }
  return chain;
}

SimpleGraph contract_edge(const SimpleGraph& h, Edge e) {
  if (!h.has_edge(e)) throw std::invalid_argument("contract_edge: edge not in graph");
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> es;
  es.reserve(h.edge_count());
  for (const Edge& f : h.edges()) {
    if (f == e) continue;
    es.emplace_back(relabel(f.u), relabel(f.v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return SimpleGraph(h.vertex_count() - 1, std::move(es));
}

SimpleGraph delete_edge(const SimpleGraph& h, Edge e) {
  if (!h.has_edge(e)) throw std::invalid_argument("delete_edge: edge not in graph");
  std::vector<Edge> es;
  es.reserve(h.edge_count() - 1);
  for (const Edge& f : h.edges()) {
    if (f != e) es.push_back(f);
  }
  return SimpleGraph(h.vertex_count(), std::move(es));
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSets::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& h) {
  DisjointSets ds(h.vertex_count());
  for (const Edge& e : h.edges()) ds.unite(e.u, e.v);
  std::map<Vertex, std::size_t> slot;
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto [it, fresh] = slot.try_emplace(ds.find(v), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& h, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> es;
  for (const Edge& e : h.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      es.emplace_back(static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v]));
    }
  }
  return SimpleGraph(vertices.size(), std::move(es));
}

std::size_t cycle_rank(const SimpleGraph& h) {
  DisjointSets ds(h.vertex_count());
  std::size_t rank = 0;
  for (const Edge& e : h.edges()) {
    if (!ds.unite(e.u, e.v)) ++rank;
  }
  return rank;
}

bool is_forest(const SimpleGraph& h) { return cycle_rank(h) == 0; }

bool is_tree_or_cycle_union(const SimpleGraph& h) {
  for (const auto& comp : components(h)) {
    std::size_t edges = 0;
    bool all_degree_two = true;
    for (Vertex v : comp) {
      edges += h.degree(v);
      all_degree_two = all_degree_two && h.degree(v) == 2;
    }
    edges /= 2;
    if (edges + 1 == comp.size()) continue;
    if (edges == comp.size() && all_degree_two) continue;
    return false;
  }
  return true;
}

bool is_series_parallel(const SimpleGraph& h) {
  std::vector<std::set<Vertex>> adj(h.vertex_count());
  for (const Edge& e : h.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<Vertex> work;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (adj[v].size() <= 2) work.push_back(v);
  }
  std::vector<bool> removed(h.vertex_count(), false);
  std::size_t remaining = h.vertex_count();
  while (!work.empty()) {
    Vertex x = work.back();
    work.pop_back();
    if (removed[x] || adj[x].size() > 2) continue;
    std::vector<Vertex> nb(adj[x].begin(), adj[x].end());
    for (Vertex y : nb) adj[y].erase(x);
    if (nb.size() == 2) {
      // Parallel edges collapse because the sets are simple.
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    adj[x].clear();
    removed[x] = true;
    --remaining;
    for (Vertex y : nb) {
      if (adj[y].size() <= 2) work.push_back(y);
    }
  }
  return remaining == 0;
}

GraphClass classify(const SimpleGraph& h) {
  if (is_forest(h)) return GraphClass::forest;
  if (is_tree_or_cycle_union(h)) return GraphClass::cycles;
  if (is_series_parallel(h)) return GraphClass::series_parallel;
  return GraphClass::general;
}

const char* to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::forest: return "forest";
    case GraphClass::cycles: return "cycles";
    case GraphClass::series_parallel: return "series_parallel";
    case GraphClass::general: return "general";
  }
  return "unknown";
}

std::vector<Edge> cycle_edges(const SimpleGraph& h) {
  // Iterative bridge finding (Tarjan low-link).
  const std::size_t n = h.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unvisited), low(n, 0);
  std::set<Edge> bridges;
  std::size_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unvisited) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = h.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent && f.v != root) {
          // Simple graph: the single tree edge back to the parent is skipped.
          continue;
        }
        if (disc[w] == unvisited) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v, p = f.parent;
        stack.pop_back();
        if (!stack.empty()) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.insert(Edge(p, v));
        }
      }
    }
  }
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    if (!bridges.contains(e)) out.push_back(e);
  }
  return out;
}

}  // namespace cpa
