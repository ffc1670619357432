#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

#include "cpa/chromatic.hpp"

namespace cpa {
namespace {

using Cell = std::vector<Vertex>;
using OrderedPartition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& h) : n_(h.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : h.edges()) {
      adj_[e.u] |= 1U << e.v;
      adj_[e.v] |= 1U << e.u;
    }
  }

  std::uint64_t run() {
    OrderedPartition start;
    if (n_ > 0) {
      Cell all(n_);
      for (Vertex v = 0; v < n_; ++v) all[v] = v;
      start.push_back(std::move(all));
    }
    search(std::move(start));
    return best_;
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }

  // Splits cells by neighbour counts into each splitter cell until stable.
  // Fragments are ordered by count, so the result is label independent.
  void refine(OrderedPartition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        const Cell splitter = p[s];
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() < 2) continue;
          std::vector<std::pair<std::size_t, Vertex>> keyed;
          for (Vertex x : p[c]) {
            std::size_t k = 0;
            for (Vertex y : splitter) k += adjacent(x, y);
            keyed.emplace_back(k, x);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          std::vector<Cell> pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint32_t mask = ~((1U << a) | (1U << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  std::uint64_t leaf_code(const OrderedPartition& p) const {
    std::vector<Vertex> order;
    for (const Cell& c : p) order.push_back(c.front());
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < order.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) code = (code << 1U) | (adjacent(order[i], order[j]) ? 1U : 0U);
    }
    return code;
  }

  void search(OrderedPartition p) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      const std::uint64_t code = leaf_code(p);
      if (!found_ || code > best_) best_ = code;
      found_ = true;
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> tried;
    for (Vertex v : p[t]) {
      // Swapping twins is an automorphism that fixes the current partition,
      // so their subtrees produce the same leaf codes.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      OrderedPartition child = p;
      Cell rest;
      for (Vertex x : p[t]) {
        if (x != v) rest.push_back(x);
      }
      child[t] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
      search(std::move(child));
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

std::string canonical_key(const SimpleGraph& h) {
  std::ostringstream key;
  if (h.vertex_count() <= kCanonicalKeyLimit) {
    key << 'c' << h.vertex_count() << ':' << std::hex << Canonizer(h).run();
  } else {
    key << 'l' << h.vertex_count() << ':';
    for (const Edge& e : h.edges()) key << e.u << '-' << e.v << ',';
  }
  return key.str();
}

}  // namespace cpa
