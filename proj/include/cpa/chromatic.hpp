#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "cpa/graph.hpp"
#include "cpa/polynomial.hpp"
#include "cpa/tree_decomposition.hpp"

namespace cpa {

enum class Engine { closed_form, series_parallel, treewidth_dp, deletion_contraction, brute_force };

const char* to_string(Engine e) noexcept;

/// Chromatic polynomial of a union of trees and cycles, kept in factored form:
///   q^trees * (q-1)^tree_edges * prod_k ((q-1)^k + (-1)^k (q-1))^cycles[k]
struct ClosedForm {
  std::size_t trees = 0;
  std::size_t tree_edges = 0;
  std::map<std::size_t, std::size_t> cycles;  // cycle length -> multiplicity

  IntPolynomial expand() const;
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

IntPolynomial chi_tree(std::size_t vertices);
IntPolynomial chi_cycle(std::size_t length);

/// nullopt unless every component is a tree or a single cycle.
std::optional<ClosedForm> closed_form_factors(const SimpleGraph& h);

/// Throws EnginePreconditionError when some component is neither a tree nor a cycle.
IntPolynomial chi_closed_form(const SimpleGraph& h);

/// Two-terminal series/parallel reduction. Throws EnginePreconditionError on
/// graphs with a K4 minor.
IntPolynomial chi_series_parallel(const SimpleGraph& h);

/// Counts proper q-colourings for q = 0..n over the decomposition and
/// interpolates. Throws EnginePreconditionError if `td` is not valid for `h`.
IntPolynomial chi_treewidth_dp(const SimpleGraph& h, const TreeDecomposition& td);
/// Number of proper q-colourings computed by the decomposition DP.
BigInt count_colorings_treewidth_dp(const SimpleGraph& h, const TreeDecomposition& td, std::size_t q);

/// Largest vertex count for which canonical_key merges isomorphic graphs.
inline constexpr std::size_t kCanonicalKeyLimit = 10;

/// Exact key: equal keys imply isomorphic graphs. Up to kCanonicalKeyLimit
/// vertices isomorphic graphs also get equal keys; above it the key is the
/// labelled edge list.
std::string canonical_key(const SimpleGraph& h);

/// Canonical key -> chromatic polynomial. Readers may miss an entry that is
/// being computed elsewhere, but never observe a partially written one.
class MemoTable {
 public:
  std::optional<IntPolynomial> find(const std::string& key) const;
  /// First writer wins; later inserts for the same key are ignored.
  void insert(const std::string& key, const IntPolynomial& chi);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, IntPolynomial> table_;
};

/// chi_H = chi_{H-e} - chi_{H/e} on the smallest non-bridge edge, bottoming
/// out at forests. Results are memoised under canonical_key.
IntPolynomial chi_deletion_contraction(const SimpleGraph& h, MemoTable& memo);

inline constexpr std::size_t kBruteForceLimit = 10;

/// Test oracle: enumerates colourings up to relabelling of colours for
/// q = 0..n and interpolates. Refuses graphs above kBruteForceLimit vertices.
IntPolynomial chi_bruteforce_oracle(const SimpleGraph& h);

struct ChiResult {
  IntPolynomial chi;
  Engine engine = Engine::closed_form;
  long width = -1;  // decomposition width when the treewidth DP ran
};

inline constexpr long kDefaultMaxDpWidth = 8;

/// closed form, then series-parallel, then treewidth DP when the min-fill
/// width is at most `max_dp_width`, else deletion-contraction.
ChiResult chi_auto(const SimpleGraph& h, MemoTable& memo, long max_dp_width = kDefaultMaxDpWidth);

/// Runs exactly the requested engine (preconditions are not relaxed).
ChiResult chi_with_engine(const SimpleGraph& h, Engine engine, MemoTable& memo);

}  // namespace cpa
