#include "cpa/ph_baseline.hpp"

#include <charconv>
#include <stdexcept>

namespace cpa {

PhTrace run_ph_baseline(const WeightedGraph& g) {
  const ThresholdChain chain = build_threshold_chain(g);
  if (chain.size() == 0) throw std::invalid_argument("PH baseline needs at least one edge");
  const double t_max = chain.events.back().weight;
  if (chain.events.front().weight <= 0.0) {
    throw std::invalid_argument("PH baseline normalizes by the largest weight; weights must be positive");
  }

  PhTrace trace{chain.vertex_count, chain.size(), {}};
  trace.records.reserve(chain.size());
  DisjointSets sets(chain.vertex_count);
  std::size_t b1 = 0;
  for (const auto& ev : chain.events) {
    if (!sets.unite(ev.edge.u, ev.edge.v)) ++b1;
    trace.records.push_back({ev.index, ev.weight / t_max, sets.set_count(), b1});
  }
  return trace;
}

PhSummary summarize(const PhTrace& trace) {
  PhSummary s;
  const auto& rec = trace.records;
  if (rec.empty()) return s;
  const double n = static_cast<double>(trace.n);
  for (std::size_t i = 1; i < rec.size(); ++i) {
    const double width = rec[i].tau - rec[i - 1].tau;
    // Left-continuous: the value reached at tau_{i-1} holds on (tau_{i-1}, tau_i].
    s.auc_b0 += width * static_cast<double>(rec[i - 1].b0) / n;
    s.auc_b1 += width * static_cast<double>(rec[i - 1].b1);
  }
  s.final_b1 = rec.back().b1;
  std::size_t previous = 0;
  bool born = false;
  for (const auto& r : rec) {
    if (r.b1 > previous) {
      ++s.b1_jumps;
      if (!born) s.b1_birth_norm = r.tau;
      born = true;
    }
    previous = r.b1;
  }
  return s;
}

std::string trace_to_csv(const PhTrace& trace) {
  std::string out = "j,tau,b0,b1\n";
  char buf[64];
  for (const auto& r : trace.records) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r.tau);
    out += std::to_string(r.j) + "," + std::string(buf, ptr) + "," + std::to_string(r.b0) + "," +
           std::to_string(r.b1) + "\n";
  }
  return out;
}

}  // namespace cpa
