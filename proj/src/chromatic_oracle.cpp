#include <vector>

#include "cpa/chromatic.hpp"
#include "cpa/error.hpp"

namespace cpa {
namespace {

// Walks every assignment of vertices to colour classes in first-use order
// (each proper colouring up to renaming of colours, exactly once) and tallies
// how many classes it uses.
void enumerate_classes(const SimpleGraph& h, std::vector<int>& cls, std::size_t v, int used,
                       std::vector<BigInt>& by_class_count) {
  if (v == h.vertex_count()) {
    by_class_count[static_cast<std::size_t>(used)] += 1;
    return;
  }
  for (int c = 0; c <= used; ++c) {
    bool ok = true;
    for (Vertex w : h.neighbors(static_cast<Vertex>(v))) {
      if (w < v && cls[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cls[v] = c;
    enumerate_classes(h, cls, v + 1, c == used ? used + 1 : used, by_class_count);
  }
}

}  // namespace

IntPolynomial chi_bruteforce_oracle(const SimpleGraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > kBruteForceLimit) {
    throw EnginePreconditionError("brute-force oracle refuses graphs with more than " +
                                  std::to_string(kBruteForceLimit) + " vertices");
  }
  std::vector<BigInt> by_class_count(n + 1);
  std::vector<int> cls(n, -1);
  enumerate_classes(h, cls, 0, 0, by_class_count);

  // Colourings with q colours: choose an injective colour for each class.
  std::vector<std::pair<BigInt, BigInt>> points;
  for (std::size_t q = 0; q <= n; ++q) {
    BigInt total = 0;
    for (std::size_t k = 0; k <= n && k <= q; ++k) {
      BigInt falling = 1;
      for (std::size_t i = 0; i < k; ++i) falling *= q - i;
      total += by_class_count[k] * falling;
    }
    points.emplace_back(BigInt(q), total);
  }
  return lagrange_interpolate(points);
}

}  // namespace cpa
