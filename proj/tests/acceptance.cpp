// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.
//
// Random graphs come from fixed seeds so the run is reproducible. All
// polynomial comparisons are exact; the only tolerances are the runtime
// budgets and the scaling ratio, pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpa/chromatic.hpp"
#include "cpa/experiment.hpp"
#include "cpa/pipeline.hpp"
#include "support/oracles.hpp"

using namespace cpa;

namespace {

constexpr double kOracleSuiteBudgetS = 60.0;
constexpr double kExperimentBudgetS = 30.0;
constexpr double kScalingRatioLimit = 15.0;
constexpr int kScalingRepeats = 7;  // timed runs per size; the median is reported

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

std::size_t max_edges(std::size_t n) { return n * (n - 1) / 2; }

Verdict oracle_suite() {
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  std::size_t events = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::size_t hi = std::min<std::size_t>(14, max_edges(n));
    const std::size_t m = n - 1 + rng() % (hi - (n - 1) + 1);
    const WeightedGraph g = oracle::with_random_weights(rng, oracle::random_connected_graph(rng, n, m));
    const VerificationReport report = verify_correctness(g);
    if (!report.pass) {
      return {false, "graph " + std::to_string(trial) + ", event " + std::to_string(*report.first_divergence) +
                         ": " + report.detail};
    }
    events += g.edge_count();
  }
  const double t = seconds_since(start);
  Verdict v{t < kOracleSuiteBudgetS, fmt("200 graphs, %.0f events exact, %.2f s (budget %.0f s)", double(events), t,
                                         kOracleSuiteBudgetS)};
  return v;
}

Verdict engine_agreement() {
  std::mt19937_64 rng(1002);
  std::size_t runs[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const SimpleGraph h = oracle::random_graph(rng, n, rng() % (max_edges(n) + 1));
    const IntPolynomial truth = chi_bruteforce_oracle(h);
    MemoTable memo;
    auto check = [&](Engine e, int slot) {
      ++runs[slot];
      return chi_with_engine(h, e, memo).chi == truth;
    };
    bool ok = true;
    if (is_tree_or_cycle_union(h)) ok = ok && check(Engine::closed_form, 0);
    if (is_series_parallel(h)) ok = ok && check(Engine::series_parallel, 1);
    ok = ok && check(Engine::treewidth_dp, 2);
    ok = ok && check(Engine::deletion_contraction, 3);
    if (!ok) return {false, "disagreement on graph " + std::to_string(trial) + " (n = " + std::to_string(n) + ")"};
  }
  return {true, fmt("300 graphs; closed %.0f, sp %.0f, twdp %.0f, delcon %.0f runs exact", double(runs[0]),
                    double(runs[1]), double(runs[2]), double(runs[3]))};
}

Verdict deletion_contraction_identity() {
  std::mt19937_64 rng(1003);
  std::size_t edges = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const SimpleGraph h = oracle::random_graph(rng, n, 1 + rng() % max_edges(n));
    const IntPolynomial chi = chi_bruteforce_oracle(h);
    for (const Edge& e : h.edges()) {
      ++edges;
      if (chi != chi_bruteforce_oracle(delete_edge(h, e)) - chi_bruteforce_oracle(contract_edge(h, e))) {
        return {false, "identity fails on graph " + std::to_string(trial)};
      }
    }
  }
  return {true, fmt("100 graphs, %.0f edges exact", double(edges))};
}

Verdict poincare_structure() {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const SimpleGraph h = oracle::random_graph(rng, n, rng() % (max_edges(n) + 1));
    const IntPolynomial p = chromatic_to_poincare(chi_bruteforce_oracle(h), n);
    if (p.coeff(1) != h.edge_count()) return {false, "t^1 coefficient differs from |E| on graph " + std::to_string(trial)};
    if (p.eval(BigInt(1)) != oracle::count_acyclic_orientations(h)) {
      return {false, "P(1) differs from the acyclic orientation count on graph " + std::to_string(trial)};
    }
  }
  const BigInt c5 = chromatic_to_poincare(chi_bruteforce_oracle(oracle::cycle(5)), 5).eval(BigInt(1));
  const auto orientations = oracle::count_acyclic_orientations(oracle::cycle(5));
  return {c5 == 30 && orientations == 30,
          "200 graphs n <= 6 exact; C5 P(1) = " + c5.str() + ", acyclic orientations = " + std::to_string(orientations)};
}

Verdict table_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const EvalReport r = run_experiment();
  const double t = seconds_since(start);
  const bool ok = r.accuracy_cpa == 1.0 && r.accuracy_baseline >= 0.40 && r.accuracy_baseline <= 0.70 &&
                  r.mcnemar.b == 0 && r.mcnemar.chi2 >= 20.0 && t < kExperimentBudgetS;
  std::string detail = fmt("seed 0: CPA %.2f, baseline %.2f (want 0.40..0.70), ", r.accuracy_cpa, r.accuracy_baseline);
  detail += "b = " + std::to_string(r.mcnemar.b) + ", c = " + std::to_string(r.mcnemar.c);
  detail += fmt(", chi2 = %.2f (want >= 20), %.2f s", r.mcnemar.chi2, t);
  return {ok, detail};
}

// Informational only: how the default seed compares with its neighbours.
std::string seed_spread() {
  std::size_t in_range = 0;
  constexpr std::uint64_t kSeeds = 20;
  std::vector<double> accs;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    ExperimentConfig config;
    config.seed = seed;
    config.timing_repeats = 1;
    const EvalReport r = run_experiment(config);
    accs.push_back(r.accuracy_baseline);
    if (r.accuracy_cpa == 1.0 && r.accuracy_baseline >= 0.40 && r.accuracy_baseline <= 0.70 && r.mcnemar.b == 0 &&
        r.mcnemar.chi2 >= 20.0) {
      ++in_range;
    }
  }
  std::sort(accs.begin(), accs.end());
  return fmt("seeds 0..19: %.0f/20 meet every ring-size condition; baseline accuracy min %.2f, median %.2f, max %.2f",
             double(in_range), accs.front(), (accs[9] + accs[10]) / 2, accs.back());
}

Verdict scaling() {
  std::mt19937_64 rng(1006);
  CpaOptions lean;
  lean.materialize = false;
  const std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::vector<WeightedGraph> graphs;
  for (std::size_t m : sizes) graphs.push_back(oracle::with_random_weights(rng, oracle::path(m + 1)));

  auto timed = [&](std::size_t i) -> double {
    const auto start = std::chrono::steady_clock::now();
    const CpaResult r = run_cpa(graphs[i], lean);
    const double t = seconds_since(start);
    const bool closed = std::all_of(r.engine_log.begin(), r.engine_log.end(),
                                    [](const StepLog& s) { return s.engine == Engine::closed_form; });
    if (!closed || r.engine_log.size() != sizes[i]) throw std::runtime_error("a non-closed-form engine ran on a path");
    return t;
  };
  for (std::size_t i = 0; i < sizes.size(); ++i) timed(i);  // warm-up

  // Sizes are interleaved within each round so machine drift hits both sides
  // of the ratio; the verdict uses the median of the per-round ratios.
  std::vector<std::vector<double>> samples(sizes.size());
  std::vector<double> ratios;
  for (int rep = 0; rep < kScalingRepeats; ++rep) {
    for (std::size_t i = 0; i < sizes.size(); ++i) samples[i].push_back(timed(i));
    ratios.push_back(samples[2].back() / samples[1].back());
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  const double ratio = median(ratios);
  return {ratio <= kScalingRatioLimit,
          fmt("median s at m = 1e3/1e4/1e5: %.4f / %.4f / %.4f, t(1e5)/t(1e4) = %.2f (limit 15), closed form only",
              median(samples[0]), median(samples[1]), median(samples[2]), ratio)};
}

Verdict zeta_small_order() {
  const RationalPolynomial one = RationalPolynomial::constant(1), s = RationalPolynomial::monomial(1);
  const CpaResult k2 = run_cpa(WeightedGraph(2, {{0, 1, 0.5}}));
  const bool k2_ok = k2.zeta.order == 1 && k2.zeta[0] == one && k2.zeta[1] == s;

  // Two-edge path on three vertices: Delta_1 = s^2 (two isolated vertices),
  // Delta_2 = s^2 - s (an edge).
  const CpaResult p = run_cpa(WeightedGraph(3, {{0, 1, 0.1}, {1, 2, 0.2}}));
  const RationalPolynomial d1 = to_rational(p.jumps[0].poly()), d2 = to_rational(p.jumps[1].poly());
  const bool jumps_ok = d1 == s * s && d2 == s * s - s;
  const bool path_ok = p.zeta[2] == d2 + d1 * (d1 + one) * Rational(1, 2);

  // The same expansion fed Delta_1 = Delta_2 = s directly.
  const DiagonalEPolynomial unit(IntPolynomial::monomial(1));
  const BarcodeZeta z = zeta_update(zeta_update(BarcodeZeta::one(2), 1, unit), 2, unit);
  const bool direct_ok = z[2] == s + s * (s + one) * Rational(1, 2);

  std::string detail = "K2: Z = 1 + " + k2.zeta[1].to_string("s") + " T; path: T^2 = " + p.zeta[2].to_string("s");
  detail += " = Delta_2 + Delta_1 (Delta_1 + 1) / 2; Delta = s fed directly: T^2 = " + z[2].to_string("s");
  return {k2_ok && jumps_ok && path_ok && direct_ok, detail};
}

Verdict order_only() {
  std::mt19937_64 rng(1008);
  std::vector<WeightedGraph> graphs{oracle::weighted_ring({0.21, 0.13, 0.95, 0.29, 0.1}),
                                    oracle::weighted_ring({0.2, 0.95, 0.25, 0.14, 0.11, 0.3})};
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 8;
    graphs.push_back(oracle::with_random_weights(rng, oracle::random_connected_graph(rng, n, n - 1 + rng() % 6)));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const WeightedGraph& g = graphs[i];
    std::vector<WeightedEdge> mapped;
    for (const auto& e : g.edges()) mapped.push_back({e.u, e.v, 2.0 * e.w + 7.0});
    const CpaResult a = run_cpa(g), b = run_cpa(WeightedGraph(g.vertex_count(), mapped));
    if (to_json(a, false).dump() != to_json(b, false).dump()) {
      return {false, "result changed under w -> 2w + 7 on graph " + std::to_string(i)};
    }
    for (std::size_t j = 0; j < a.event_count(); ++j) {
      if (b.chain.events[j].weight != 2.0 * a.chain.events[j].weight + 7.0) {
        return {false, "event weights are not the mapped weights on graph " + std::to_string(i)};
      }
    }
  }
  return {true, std::to_string(graphs.size()) + " graphs byte-identical (order-only document)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"oracle equivalence of E_j and Delta_j", oracle_suite},
      {"engine agreement", engine_agreement},
      {"deletion-contraction identity", deletion_contraction_identity},
      {"Poincare structure", poincare_structure},
      {"ring-size table", table_reproduction},
      {"scaling on paths", scaling},
      {"zeta at small order", zeta_small_order},
      {"order-only stability", order_only},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("criterion %zu (%s): %s: %s\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    if (i == 4) std::printf("  note: %s\n", seed_spread().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
