#include "cpa/closed_form_tracker.hpp"

#include <stdexcept>

namespace cpa {

ClosedFormTracker::ClosedFormTracker(std::size_t vertex_count) : slots_(vertex_count), trees_(vertex_count) {
  for (std::size_t v = 0; v < vertex_count; ++v) slots_[v].parent = static_cast<std::uint32_t>(v);
}

std::uint32_t ClosedFormTracker::find(std::uint32_t x) {
  while (slots_[x].parent != x) {
    slots_[x].parent = slots_[slots_[x].parent].parent;
    x = slots_[x].parent;
  }
  return x;
}

void ClosedFormTracker::account(const Slot& root, int sign) {
  switch (root.shape) {
    case Shape::path:
    case Shape::tree:
      trees_ = sign > 0 ? trees_ + 1 : trees_ - 1;
      tree_edges_ = sign > 0 ? tree_edges_ + root.vertices - 1 : tree_edges_ - (root.vertices - 1);
      break;
    case Shape::cycle:
      if (sign > 0) {
        ++cycles_[root.vertices];
      } else if (--cycles_[root.vertices] == 0) {
        cycles_.erase(root.vertices);
      }
      break;
    case Shape::irregular:
      irregular_ = sign > 0 ? irregular_ + 1 : irregular_ - 1;
      break;
  }
}

void ClosedFormTracker::add_edge(Edge e) {
  const std::uint32_t ru = find(e.u);
  const std::uint32_t rv = find(e.v);
  Slot& a = slots_[ru];
  Slot& b = slots_[rv];
  const std::uint8_t du = slots_[e.u].degree;
  const std::uint8_t dv = slots_[e.v].degree;
  if (du < 3) ++slots_[e.u].degree;
  if (dv < 3) ++slots_[e.v].degree;

  const bool a_tree = a.shape == Shape::path || a.shape == Shape::tree;
  const bool b_tree = b.shape == Shape::path || b.shape == Shape::tree;
  // Path ends have degree <= 1; joining two of them keeps every degree <= 2.
  const bool ends = du <= 1 && dv <= 1;

  account(a, -1);
  if (ru == rv) {
    // The only way to close a single cycle is to join the two ends of a path.
    a.shape = a.shape == Shape::path && ends ? Shape::cycle : Shape::irregular;
    account(a, +1);
    return;
  }
  account(b, -1);
  Shape merged = Shape::irregular;
  if (a_tree && b_tree) merged = a.shape == Shape::path && b.shape == Shape::path && ends ? Shape::path : Shape::tree;

  // Union by size; the vertex count doubles as the rank.
  Slot& root = a.vertices >= b.vertices ? a : b;
  Slot& child = a.vertices >= b.vertices ? b : a;
  child.parent = a.vertices >= b.vertices ? ru : rv;
  root.vertices = a.vertices + b.vertices;
  root.shape = merged;
  account(root, +1);
}

ClosedForm ClosedFormTracker::current() const {
  if (!in_family()) throw std::logic_error("closed-form tracker: graph left the tree/cycle family");
  return ClosedForm{trees_, tree_edges_, cycles_};
}

ClosedForm ClosedFormTracker::contracted(Edge e) {
  ClosedForm form = current();
  const Slot& c = slots_[find(e.u)];
  if (c.vertices < 2 || find(e.v) != find(e.u)) {
    throw std::logic_error("closed-form tracker: contracted edge was never added");
  }
  if (c.shape != Shape::cycle) {
    // One vertex and one edge fewer; still a tree.
    --form.tree_edges;
    return form;
  }
  if (--form.cycles[c.vertices] == 0) form.cycles.erase(c.vertices);
  if (c.vertices > 3) {
    ++form.cycles[c.vertices - 1];
  } else {
    // A contracted triangle collapses to a single edge.
    ++form.trees;
    ++form.tree_edges;
  }
  return form;
}

}  // namespace cpa
