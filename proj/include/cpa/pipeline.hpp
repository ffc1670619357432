#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpa/chromatic.hpp"
#include "cpa/graph.hpp"
#include "cpa/polynomial.hpp"

namespace cpa {

/// prod_j (1 - T^j)^(-Delta_j) on the s-diagonal, truncated after T^order.
struct BarcodeZeta {
  std::size_t order = 0;
  std::vector<RationalPolynomial> coefficients;  // index = power of T

  static BarcodeZeta one(std::size_t order);
  const RationalPolynomial& operator[](std::size_t k) const { return coefficients.at(k); }
  friend bool operator==(const BarcodeZeta&, const BarcodeZeta&) = default;
};

/// Multiplies z by (1 - T^j)^(-delta) = sum_k C(delta + k - 1, k) T^(jk).
/// Factors with j > z.order are 1 modulo the truncation and leave z unchanged.
BarcodeZeta zeta_update(const BarcodeZeta& z, std::size_t j, const DiagonalEPolynomial& delta);

struct StepLog {
  Engine engine = Engine::closed_form;
  double micros = 0.0;  // chromatic step only
};

struct CpaOptions {
  /// Zeta truncation; defaults to the number of events.
  std::optional<std::size_t> zeta_order;
  /// When false only the chromatic step runs: E, jumps and zeta stay empty.
  /// Dense exact E_j for a forest on n vertices carries Theta(n^2) coefficient
  /// bits, which dominates everything else on long chains.
  bool materialize = true;
  long max_dp_width = kDefaultMaxDpWidth;
};

struct CpaResult {
  ThresholdChain chain;
  std::vector<DiagonalEPolynomial> e;      // E_0 .. E_m
  std::vector<DiagonalEPolynomial> jumps;  // Delta_1 .. Delta_m
  BarcodeZeta zeta;
  std::vector<StepLog> engine_log;         // one entry per event
  bool materialized = true;

  std::size_t vertex_count() const noexcept { return chain.vertex_count; }
  std::size_t event_count() const noexcept { return chain.size(); }
};

CpaResult run_cpa(const WeightedGraph& g, const CpaOptions& options = {});
/// Shares `memo` across calls (and with other threads, see MemoTable).
CpaResult run_cpa(const WeightedGraph& g, MemoTable& memo, const CpaOptions& options = {});

/// {"n", "events":[{"j","edge","weight","delta","E","engine"}], "zeta"}.
/// Timings are left out so the document is a pure function of the input.
/// With include_weights = false the "weight" fields are dropped and the
/// document depends on the event order only.
nlohmann::json to_json(const CpaResult& r, bool include_weights = true);

struct VerificationReport {
  bool pass = true;
  std::optional<std::size_t> first_divergence;  // event index j, 0 for E_0
  std::string detail;
};

/// Compares every E_j with chi_{H_j}(s) and every Delta_j with
/// chi_{H_j / e_j}(s), both from the brute-force oracle.
VerificationReport verify_correctness(const WeightedGraph& g);

}  // namespace cpa
