#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpa/graph.hpp"

namespace cpa {

struct PhRecord {
  std::size_t j = 0;
  double tau = 0.0;  // t_j / t_m
  std::size_t b0 = 0;
  std::size_t b1 = 0;
};

/// b0 / b1 of the 1-skeleton after each threshold event.
struct PhTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<PhRecord> records;
};

struct PhSummary {
  double auc_b0 = 0.0;  // of b0 / n
  double auc_b1 = 0.0;
  std::size_t final_b1 = 0;
  std::size_t b1_jumps = 0;
  double b1_birth_norm = 1.0;  // 1.0 when no cycle is ever born
};

/// Requires at least one edge and positive weights (tau must lie in (0, 1]).
PhTrace run_ph_baseline(const WeightedGraph& g);

/// Areas under the left-continuous step curves on [tau_1, 1]: value_j holds
/// on (tau_j, tau_{j+1}]. A cycle closed by the last event adds no b1 area.
PhSummary summarize(const PhTrace& trace);

/// "j,tau,b0,b1" header plus one row per event.
std::string trace_to_csv(const PhTrace& trace);

}  // namespace cpa
