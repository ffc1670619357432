#include "cpa/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace cpa {

long TreeDecomposition::width() const {
  long w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<long>(b.size()) - 1);
  return w;
}

namespace {

std::size_t fill_in(const std::vector<std::set<Vertex>>& adj, Vertex v) {
  std::size_t missing = 0;
  for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
    for (auto b = std::next(a); b != adj[v].end(); ++b) {
      if (!adj[*a].contains(*b)) ++missing;
    }
  }
  return missing;
}

}  // namespace

TreeDecomposition tree_decomposition(const SimpleGraph& h) {
  const std::size_t n = h.vertex_count();
  TreeDecomposition td;
  if (n == 0) return td;

  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : h.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }

  std::vector<Vertex> order;
  std::vector<std::size_t> position(n, 0);
  std::vector<bool> eliminated(n, false);
  std::vector<std::vector<Vertex>> bag_of(n);
  order.reserve(n);

  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t f = fill_in(adj, v);
      if (f < best_fill || (f == best_fill && adj[v].size() < best_degree)) {
        best = v;
        best_fill = f;
        best_degree = adj[v].size();
      }
    }
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t k = i + 1; k < nb.size(); ++k) {
        adj[nb[i]].insert(nb[k]);
        adj[nb[k]].insert(nb[i]);
      }
      adj[nb[i]].erase(best);
    }
    adj[best].clear();
    eliminated[best] = true;
    position[best] = step;
    order.push_back(best);

    std::vector<Vertex> bag = nb;
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bag_of[best] = std::move(bag);
  }

  // Bag i belongs to order[i]. Its parent is the bag of the neighbour
  // eliminated next; bags with no later neighbour hang off the next bag.
  td.bags.resize(n);
  td.tree.resize(n);
  for (std::size_t i = 0; i < n; ++i) td.bags[i] = bag_of[order[i]];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Vertex v = order[i];
    std::size_t parent = n;
    for (Vertex u : td.bags[i]) {
      if (u != v) parent = std::min(parent, position[u]);
    }
    if (parent == n) parent = i + 1;
    td.tree[i].push_back(parent);
    td.tree[parent].push_back(i);
  }
  return td;
}

std::string validate_decomposition(const SimpleGraph& h, const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  if (td.tree.size() != nb) return "tree adjacency size differs from bag count";
  if (nb == 0) return h.vertex_count() == 0 ? "" : "no bags for a non-empty graph";

  std::size_t arcs = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j : td.tree[i]) {
      if (j >= nb || j == i) return "tree adjacency refers to an invalid bag";
      if (std::count(td.tree[j].begin(), td.tree[j].end(), i) != 1) return "tree adjacency not symmetric";
      ++arcs;
    }
  }
  if (arcs != 2 * (nb - 1)) return "bag tree does not have bags-1 edges";
  std::vector<bool> seen(nb, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : td.tree[i]) {
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != nb) return "bag tree is not connected";

  auto contains = [&](std::size_t bag, Vertex v) {
    return std::binary_search(td.bags[bag].begin(), td.bags[bag].end(), v);
  };
  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      return "bag not sorted or has repeated vertices";
    }
    for (Vertex v : bag) {
      if (v >= h.vertex_count()) return "bag vertex out of range";
    }
  }
  for (const Edge& e : h.edges()) {
    bool covered = false;
    for (std::size_t i = 0; i < nb && !covered; ++i) covered = contains(i, e.u) && contains(i, e.v);
    if (!covered) return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not covered";
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < nb; ++i) {
      if (contains(i, v)) holders.push_back(i);
    }
    if (holders.empty()) return "vertex " + std::to_string(v) + " in no bag";
    // The holders must induce a connected subtree.
    std::vector<bool> visited(nb, false);
    std::vector<std::size_t> st{holders.front()};
    visited[holders.front()] = true;
    std::size_t count = 1;
    while (!st.empty()) {
      std::size_t i = st.back();
      st.pop_back();
      for (std::size_t j : td.tree[i]) {
        if (!visited[j] && contains(j, v)) {
          visited[j] = true;
          ++count;
          st.push_back(j);
        }
      }
    }
    if (count != holders.size()) return "bags holding vertex " + std::to_string(v) + " are disconnected";
  }
  return "";
}

}  // namespace cpa
