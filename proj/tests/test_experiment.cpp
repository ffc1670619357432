#include <doctest.h>

#include <random>
#include <set>

#include "cpa/edge_list.hpp"
#include "cpa/error.hpp"
#include "cpa/experiment.hpp"
#include "cpa/ph_baseline.hpp"
#include "support/oracles.hpp"

using namespace cpa;

namespace {

const WeightedGraph kC5 = oracle::weighted_ring({0.21, 0.13, 0.95, 0.29, 0.1});
const WeightedGraph kC6 = oracle::weighted_ring({0.2, 0.95, 0.25, 0.14, 0.11, 0.3});

std::vector<double> block(const FeatureVector& f, std::size_t j) {
  return {f.values.begin() + static_cast<long>(j * f.block_width),
          f.values.begin() + static_cast<long>((j + 1) * f.block_width)};
}

}  // namespace

TEST_CASE("baseline traces") {
  const PhTrace k2 = run_ph_baseline(WeightedGraph(2, {{0, 1, 0.4}}));
  REQUIRE(k2.records.size() == 1);
  CHECK(k2.records[0].tau == 1.0);
  CHECK(k2.records[0].b0 == 1);
  CHECK(k2.records[0].b1 == 0);

  const PhTrace c5 = run_ph_baseline(kC5);
  for (std::size_t j = 0; j < 4; ++j) CHECK(c5.records[j].b1 == 0);
  CHECK(c5.records[4].b1 == 1);

  const PhTrace forest = run_ph_baseline(WeightedGraph(4, {{0, 1, 0.3}, {2, 3, 0.6}}));
  CHECK(forest.records[0].b0 == 3);
  CHECK(forest.records[1].b0 == 2);
  CHECK(forest.records[1].b1 == 0);

  CHECK(trace_to_csv(k2) == "j,tau,b0,b1\n1,1,1,0\n");
  CHECK_THROWS(run_ph_baseline(WeightedGraph(3, {})));
  CHECK_THROWS(run_ph_baseline(WeightedGraph(2, {{0, 1, -1.0}})));
}

TEST_CASE("baseline summaries") {
  const PhSummary c5 = summarize(run_ph_baseline(kC5));
  const PhSummary c6 = summarize(run_ph_baseline(kC6));
  CHECK(c5.final_b1 == 1);
  CHECK(c5.b1_jumps == 1);
  CHECK(c5.b1_birth_norm == 1.0);
  CHECK(c6.final_b1 == c5.final_b1);
  CHECK(c6.b1_jumps == c5.b1_jumps);
  CHECK(c6.b1_birth_norm == c5.b1_birth_norm);

  // Step areas: taus 0.1, 0.13, 0.21, 0.29 over 0.95, then 1; b0 = 4, 3, 2, 1 before each step.
  const double expected = (4 * (0.13 - 0.1) + 3 * (0.21 - 0.13) + 2 * (0.29 - 0.21) + 1 * (0.95 - 0.29)) / 0.95 / 5;
  CHECK(c5.auc_b0 == doctest::Approx(expected).epsilon(1e-12));
  CHECK(c5.auc_b1 == 0.0);

  const PhSummary forest = summarize(run_ph_baseline(WeightedGraph(4, {{0, 1, 0.3}, {2, 3, 0.6}})));
  CHECK(forest.final_b1 == 0);
  CHECK(forest.b1_jumps == 0);
  CHECK(forest.b1_birth_norm == 1.0);
  const FeatureVector fv = vectorize_baseline(forest);
  CHECK(fv.values == std::vector<double>{forest.auc_b0, 0, 0, 0, 1.0});
}

TEST_CASE("property: Euler relation and scale invariance of summaries") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const SimpleGraph h = oracle::random_graph(rng, n, 1 + rng() % (n * (n - 1) / 2));
    const WeightedGraph g = oracle::with_random_weights(rng, h);
    const PhTrace t = run_ph_baseline(g);
    for (const auto& r : t.records) {
      CHECK(static_cast<long>(r.b1) - static_cast<long>(r.b0) == static_cast<long>(r.j) - static_cast<long>(n));
    }
    std::vector<WeightedEdge> scaled;
    for (const auto& e : g.edges()) scaled.push_back({e.u, e.v, 8.0 * e.w});
    const PhSummary a = summarize(t), b = summarize(run_ph_baseline(WeightedGraph(n, scaled)));
    CHECK(a.auc_b0 == doctest::Approx(b.auc_b0).epsilon(1e-12));
    CHECK(a.auc_b1 == doctest::Approx(b.auc_b1).epsilon(1e-12));
    CHECK(a.b1_birth_norm == doctest::Approx(b.b1_birth_norm).epsilon(1e-12));
    CHECK(a.final_b1 == b.final_b1);
    CHECK(a.b1_jumps == b.b1_jumps);
  }
}

TEST_CASE("dataset generation") {
  const auto data = generate_dataset(0);
  REQUIRE(data.size() == 60);
  std::size_t c5 = 0;
  for (const auto& inst : data) {
    c5 += inst.label == RingLabel::c5 ? 1 : 0;
    CHECK(inst.graph.vertex_count() == static_cast<std::size_t>(inst.label));
    std::size_t closers = 0;
    std::set<double> seen;
    for (const auto& e : inst.graph.edges()) {
      seen.insert(e.w);
      if (e.w == kClosingWeight) {
        ++closers;
      } else {
        CHECK(e.w >= kTreeWeightLow);
        CHECK(e.w <= kTreeWeightHigh);
      }
    }
    CHECK(closers == 1);
    CHECK(seen.size() == inst.graph.edge_count());
    const ThresholdChain chain = build_threshold_chain(inst.graph);
    CHECK(chain.events.back().weight == kClosingWeight);
    CHECK(cycle_rank(chain.prefix(chain.size() - 1)) == 0);
  }
  CHECK(c5 == 30);
  CHECK(dataset_manifest(0, data) == dataset_manifest(0, generate_dataset(0)));
  CHECK(dataset_manifest(0, data) != dataset_manifest(1, generate_dataset(1)));
}

TEST_CASE("CPA feature blocks") {
  const FeatureVector f5 = vectorize_cpa(run_cpa(kC5), 6, 7);
  CHECK(f5.values.size() == 42);
  CHECK(block(f5, 3) == std::vector<double>{1, 4, 6, 4, 1, 0, 0});
  CHECK(block(f5, 4) == std::vector<double>{1, 5, 10, 10, 4, 0, 0});
  CHECK(block(f5, 5) == std::vector<double>(7, 0.0));

  const FeatureVector f6 = vectorize_cpa(run_cpa(kC6), 6, 7);
  CHECK(block(f6, 5) == std::vector<double>{1, 6, 15, 20, 15, 5, 0});

  const FeatureVector empty = vectorize_cpa(run_cpa(WeightedGraph(3, {})), 1, 4);
  CHECK(empty.values == std::vector<double>{1, 0, 0, 0});

  CHECK_THROWS(vectorize_cpa(run_cpa(kC6), 5, 7));
  CHECK_THROWS(vectorize_cpa(run_cpa(kC6), 6, 6));
}

TEST_CASE("leave-one-out 1-NN") {
  const std::vector<FeatureVector> twins{{{1.0, 2.0}, 1, 2}, {{1.0, 2.0}, 1, 2}};
  const std::vector<int> labels{5, 6};
  CHECK(loo_1nn(twins, labels).accuracy == 0.0);

  const std::vector<FeatureVector> clusters{{{0.0}, 1, 1}, {{0.1}, 1, 1}, {{5.0}, 1, 1}, {{5.1}, 1, 1}};
  const std::vector<int> split{5, 5, 6, 6};
  CHECK(loo_1nn(clusters, split).accuracy == 1.0);

  // Equidistant neighbours: the lower index wins.
  const std::vector<FeatureVector> line{{{0.0}, 1, 1}, {{1.0}, 1, 1}, {{2.0}, 1, 1}};
  const std::vector<int> line_labels{5, 6, 6};
  CHECK(loo_1nn(line, line_labels).predictions[1] == 5);
}

TEST_CASE("McNemar") {
  std::vector<int> labels(27, 1), base(27, 0), cpa(27, 1);
  const McNemarResult r = mcnemar(base, cpa, labels);
  CHECK(r.b == 0);
  CHECK(r.c == 27);
  CHECK(r.chi2 == doctest::Approx(676.0 / 27.0));
  CHECK(mcnemar(cpa, cpa, labels).chi2 == 0.0);
  const std::vector<int> y{1, 1}, p{1, 0}, q{0, 1};
  const McNemarResult one_each = mcnemar(p, q, y);
  CHECK(one_each.b == 1);
  CHECK(one_each.c == 1);
  CHECK(one_each.chi2 == doctest::Approx(0.5));
}

TEST_CASE("experiment structure") {
  ExperimentConfig config;
  config.timing_repeats = 1;
  const EvalReport report = run_experiment(config);
  CHECK(report.pad_events == 6);
  CHECK(report.pad_betti == 7);
  CHECK(report.accuracy_cpa == 1.0);
  CHECK(report.mcnemar.b == 0);

  // Within a class the CPA vectors coincide, across classes they differ.
  const auto data = generate_dataset(config.seed);
  const FeatureVector first5 = vectorize_cpa(run_cpa(data.front().graph), 6, 7);
  const FeatureVector first6 = vectorize_cpa(run_cpa(data.back().graph), 6, 7);
  CHECK(first5.values != first6.values);
  for (const auto& inst : data) {
    const FeatureVector f = vectorize_cpa(run_cpa(inst.graph), 6, 7);
    CHECK(f.values == (inst.label == RingLabel::c5 ? first5.values : first6.values));
    const FeatureVector b = vectorize_baseline(summarize(run_ph_baseline(inst.graph)));
    CHECK(std::vector<double>(b.values.begin() + 2, b.values.end()) == std::vector<double>{1, 1, 1.0});
  }

  const EvalReport again = run_experiment(config);
  nlohmann::json a = to_json(report), b = to_json(again);
  for (auto* doc : {&a, &b}) {
    doc->erase("mean_ms_cpa");
    doc->erase("mean_ms_baseline");
    for (auto& row : (*doc)["instances"]) {
      row.erase("ms_cpa");
      row.erase("ms_baseline");
    }
  }
  CHECK(a == b);
  CHECK(format_table(report).find("CPA (per-threshold E-profiles)    1.00") != std::string::npos);
}

TEST_CASE("edge-list parsing") {
  const WeightedGraph g = parse_edge_list("# ring\nn 3\n0 1 0.5\n1 2 0.25  # note\n\n2 0 1e-1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[2].w == 0.1);
  CHECK(parse_edge_list(format_edge_list(g)).edges()[1].w == 0.25);
  CHECK(parse_edge_list("n 4\n").edge_count() == 0);

  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1 0.5\n") == 1);
  CHECK(line_of("n 3\n0 1\n") == 2);
  CHECK(line_of("n 3\n0 1 x\n") == 2);
  CHECK(line_of("n 3\n0 1 0.5\n0 3 0.2\n") == 3);
  CHECK(line_of("n 3\n1 1 0.5\n") == 2);
  CHECK(line_of("n 3\n0 1 0.5\n1 0 0.7\n") == 3);
  CHECK(line_of("n 3\nn 3\n") == 2);
  CHECK_THROWS_AS(parse_edge_list(std::string{}), ParseError);
}
