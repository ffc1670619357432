#include <mutex>

#include "cpa/chromatic.hpp"

namespace cpa {

std::optional<IntPolynomial> MemoTable::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  return std::nullopt;
}

void MemoTable::insert(const std::string& key, const IntPolynomial& chi) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, chi);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

IntPolynomial chi_deletion_contraction(const SimpleGraph& h, MemoTable& memo) {
  const auto on_cycle = cycle_edges(h);
  if (on_cycle.empty()) {
    // Forest: q^(components) (q-1)^(edges).
    return IntPolynomial::monomial(h.vertex_count() - h.edge_count()) *
           IntPolynomial::linear(-1).pow(h.edge_count());
  }
  const std::string key = canonical_key(h);
  if (auto hit = memo.find(key)) return *hit;

  const Edge pivot = on_cycle.front();
  IntPolynomial chi = chi_deletion_contraction(delete_edge(h, pivot), memo) -
                      chi_deletion_contraction(contract_edge(h, pivot), memo);
  memo.insert(key, chi);
  return chi;
}

}  // namespace cpa
