#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cpa/chromatic.hpp"
#include "cpa/error.hpp"

namespace cpa {
namespace {

// Block labels of the bag vertices in restricted-growth form: the colouring of
// a bag up to permutation of colours. Symmetry makes the number of extensions
// below a node depend only on this partition.
using Partition = std::vector<std::uint8_t>;

struct Table {
  std::vector<Vertex> bag;  // sorted
  std::map<Partition, BigInt> rows;
};

std::size_t normalize(Partition& p) {
  std::uint8_t relabel[256];
  std::fill(std::begin(relabel), std::end(relabel), std::uint8_t{0xFF});
  std::uint8_t next = 0;
  for (auto& b : p) {
    if (relabel[b] == 0xFF) relabel[b] = next++;
    b = relabel[b];
  }
  return next;
}

void forget(Table& t, Vertex v, std::size_t q) {
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(t.bag.begin(), t.bag.end(), v) - t.bag.begin());
  std::map<Partition, BigInt> next;
  for (auto& [part, count] : t.rows) {
    const std::uint8_t block = part[pos];
    const bool singleton = std::count(part.begin(), part.end(), block) == 1;
    Partition reduced = part;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(pos));
    const std::size_t blocks = normalize(reduced);
    // A vertex alone in its block may take any colour unused by the bag.
    BigInt contribution = singleton ? BigInt(count * (q - blocks)) : count;
    next[std::move(reduced)] += contribution;
  }
  t.bag.erase(t.bag.begin() + static_cast<std::ptrdiff_t>(pos));
  t.rows = std::move(next);
}

void introduce(Table& t, Vertex v, std::size_t q, const SimpleGraph& h) {
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(t.bag.begin(), t.bag.end(), v) - t.bag.begin());
  std::map<Partition, BigInt> next;
  for (const auto& [part, count] : t.rows) {
    const std::size_t blocks =
        part.empty() ? 0 : static_cast<std::size_t>(*std::max_element(part.begin(), part.end())) + 1;
    std::vector<bool> forbidden(blocks, false);
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (h.has_edge(Edge(v, t.bag[i]))) forbidden[part[i]] = true;
    }
    auto place = [&](std::uint8_t block) {
      Partition grown = part;
      grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), block);
      normalize(grown);
      next[std::move(grown)] += count;
    };
    for (std::size_t b = 0; b < blocks; ++b) {
      if (!forbidden[b]) place(static_cast<std::uint8_t>(b));
    }
    if (blocks + 1 <= q) place(static_cast<std::uint8_t>(blocks));
  }
  t.bag.insert(t.bag.begin() + static_cast<std::ptrdiff_t>(pos), v);
  t.rows = std::move(next);
}

Table transform(Table t, const std::vector<Vertex>& target, std::size_t q, const SimpleGraph& h) {
  std::vector<Vertex> drop, add;
  std::set_difference(t.bag.begin(), t.bag.end(), target.begin(), target.end(), std::back_inserter(drop));
  std::set_difference(target.begin(), target.end(), t.bag.begin(), t.bag.end(), std::back_inserter(add));
  for (Vertex v : drop) forget(t, v, q);
  for (Vertex v : add) introduce(t, v, q, h);
  return t;
}

Table multiply(const Table& a, const Table& b) {
  Table out{a.bag, {}};
  for (const auto& [part, count] : a.rows) {
    if (auto it = b.rows.find(part); it != b.rows.end()) out.rows.emplace(part, count * it->second);
  }
  return out;
}

}  // namespace

BigInt count_colorings_treewidth_dp(const SimpleGraph& h, const TreeDecomposition& td, std::size_t q) {
  if (h.vertex_count() == 0) return 1;
  if (std::string why = validate_decomposition(h, td); !why.empty()) {
    throw EnginePreconditionError("treewidth DP: invalid tree decomposition: " + why);
  }
  const std::size_t nb = td.bags.size();
  if (td.width() >= 255) throw EnginePreconditionError("treewidth DP: bags larger than 255 vertices");

  // Root at bag 0; post-order without recursion.
  std::vector<std::size_t> parent(nb, nb), order;
  std::vector<std::size_t> stack{0};
  std::vector<bool> seen(nb, false);
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    order.push_back(i);
    for (std::size_t j : td.tree[i]) {
      if (!seen[j]) {
        seen[j] = true;
        parent[j] = i;
        stack.push_back(j);
      }
    }
  }

  std::vector<std::optional<Table>> tables(nb);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    std::optional<Table> acc;
    for (std::size_t j : td.tree[i]) {
      if (j == parent[i]) continue;
      Table child = transform(std::move(*tables[j]), td.bags[i], q, h);
      tables[j].reset();
      acc = acc ? multiply(*acc, child) : std::move(child);
    }
    if (!acc) acc = transform(Table{{}, {{Partition{}, BigInt(1)}}}, td.bags[i], q, h);
    tables[i] = std::move(acc);
  }
  Table root = transform(std::move(*tables[0]), {}, q, h);
  auto it = root.rows.find(Partition{});
  return it == root.rows.end() ? BigInt(0) : it->second;
}

IntPolynomial chi_treewidth_dp(const SimpleGraph& h, const TreeDecomposition& td) {
  const std::size_t n = h.vertex_count();
  std::vector<std::pair<BigInt, BigInt>> points;
  points.reserve(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    points.emplace_back(BigInt(q), count_colorings_treewidth_dp(h, td, q));
  }
  return lagrange_interpolate(points);
}

}  // namespace cpa
