#include <map>
#include <vector>

#include "cpa/chromatic.hpp"
#include "cpa/error.hpp"

namespace cpa {
namespace {

// Two-terminal colouring counts with both terminal colours held fixed:
// `same` counts interior colourings when the terminals share a colour,
// `distinct` when they differ. A bare edge is (0, 1).
struct Gadget {
  IntPolynomial same;
  IntPolynomial distinct;
};

const IntPolynomial& q_minus(long k) {
  static const IntPolynomial minus_one = IntPolynomial::linear(-1);
  static const IntPolynomial minus_two = IntPolynomial::linear(-2);
  return k == 1 ? minus_one : minus_two;
}

Gadget in_series(const Gadget& a, const Gadget& b) {
  // Middle vertex either matches a terminal colour or takes a free one.
  Gadget out;
  const IntPolynomial bb = a.distinct * b.distinct;
  out.same = a.same * b.same + q_minus(1) * bb;
  out.distinct = a.same * b.distinct + a.distinct * b.same + q_minus(2) * bb;
  return out;
}

Gadget in_parallel(const Gadget& a, const Gadget& b) {
  return {a.same * b.same, a.distinct * b.distinct};
}

}  // namespace

IntPolynomial chi_series_parallel(const SimpleGraph& h) {
  const std::size_t n = h.vertex_count();
  const Gadget edge{IntPolynomial{}, IntPolynomial::constant(1)};
  std::vector<std::map<Vertex, Gadget>> adj(n);
  for (const Edge& e : h.edges()) {
    adj[e.u].emplace(e.v, edge);
    adj[e.v].emplace(e.u, edge);
  }

  IntPolynomial chi = IntPolynomial::constant(1);
  const IntPolynomial q = IntPolynomial::monomial(1);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> work;
  for (Vertex v = n; v-- > 0;) work.push_back(v);
  std::size_t remaining = n;

  while (!work.empty()) {
    const Vertex x = work.back();
    work.pop_back();
    if (removed[x] || adj[x].size() > 2) continue;

    std::vector<Vertex> touched;
    if (adj[x].empty()) {
      chi *= q;
    } else if (adj[x].size() == 1) {
      // Pendant gadget: sum over the colours of x relative to its neighbour.
      auto& [y, g] = *adj[x].begin();
      chi *= g.same + q_minus(1) * g.distinct;
      adj[y].erase(x);
      touched.push_back(y);
    } else {
      auto it = adj[x].begin();
      const auto& [y, g1] = *it++;
      const auto& [z, g2] = *it;
      Gadget merged = in_series(g1, g2);
      adj[y].erase(x);
      adj[z].erase(x);
      if (auto existing = adj[y].find(z); existing != adj[y].end()) {
        merged = in_parallel(existing->second, merged);
        existing->second = merged;
        adj[z][y] = std::move(merged);
      } else {
        adj[y].emplace(z, merged);
        adj[z].emplace(y, std::move(merged));
      }
      touched = {y, z};
    }
    adj[x].clear();
    removed[x] = true;
    --remaining;
    for (Vertex t : touched) {
      if (adj[t].size() <= 2) work.push_back(t);
    }
  }
  if (remaining != 0) {
    throw EnginePreconditionError("series-parallel engine: graph has a K4 minor; use another engine");
  }
  return chi;
}

}  // namespace cpa
