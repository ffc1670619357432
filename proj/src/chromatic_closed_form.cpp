#include "cpa/chromatic.hpp"

#include "cpa/error.hpp"

namespace cpa {

IntPolynomial chi_tree(std::size_t vertices) {
  if (vertices == 0) return IntPolynomial::constant(1);
  return IntPolynomial::monomial(1) * IntPolynomial::linear(-1).pow(vertices - 1);
}

IntPolynomial chi_cycle(std::size_t length) {
  if (length < 3) throw std::invalid_argument("a simple cycle has at least three vertices");
  const IntPolynomial q_minus_one = IntPolynomial::linear(-1);
  IntPolynomial tail = q_minus_one;
  if (length % 2 == 1) tail = -tail;
  return q_minus_one.pow(length) + tail;
}

IntPolynomial ClosedForm::expand() const {
  IntPolynomial p = IntPolynomial::monomial(trees) * IntPolynomial::linear(-1).pow(tree_edges);
  for (const auto& [length, count] : cycles) p *= chi_cycle(length).pow(count);
  return p;
}

std::optional<ClosedForm> closed_form_factors(const SimpleGraph& h) {
  ClosedForm form;
  for (const auto& comp : components(h)) {
    std::size_t edges = 0;
    bool all_degree_two = true;
    for (Vertex v : comp) {
      edges += h.degree(v);
      all_degree_two = all_degree_two && h.degree(v) == 2;
    }
    edges /= 2;
    if (edges + 1 == comp.size()) {
      ++form.trees;
      form.tree_edges += edges;
    } else if (edges == comp.size() && all_degree_two) {
      ++form.cycles[comp.size()];
    } else {
      return std::nullopt;
    }
  }
  return form;
}

IntPolynomial chi_closed_form(const SimpleGraph& h) {
  auto form = closed_form_factors(h);
  if (!form) {
    throw EnginePreconditionError(
        "closed-form engine needs every component to be a tree or a single cycle; use another engine");
  }
  return form->expand();
}

}  // namespace cpa
