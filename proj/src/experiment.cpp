#include "cpa/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "cpa/edge_list.hpp"

namespace cpa {
namespace {

// splitmix64 finalizer; decorrelates consecutive seeds before they reach the engine.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

// Explicit bit-to-double mapping so datasets match across standard libraries.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

template <class F>
double median_ms(std::size_t repeats, F&& work) {
  std::vector<double> samples;
  for (std::size_t i = 0; i < std::max<std::size_t>(repeats, 1); ++i) {
    const auto start = std::chrono::steady_clock::now();
    work();
    samples.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2.0;
}

}  // namespace

const char* to_string(RingLabel label) noexcept { return label == RingLabel::c5 ? "C5" : "C6"; }

Instance make_ring_instance(RingLabel label, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(label);
  std::mt19937_64 rng(mix(seed));
  const std::size_t closing = static_cast<std::size_t>(rng() % n);

  std::vector<double> weights(n, kClosingWeight);
  std::set<double> used;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == closing) continue;
    double w = 0.0;
    do {
      w = kTreeWeightLow + (kTreeWeightHigh - kTreeWeightLow) * unit_interval(rng);
    } while (used.contains(w));
    used.insert(w);
    weights[i] = w;
  }
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), weights[i]});
  }
  return {WeightedGraph(n, std::move(edges)), label, seed};
}

std::vector<Instance> generate_dataset(std::uint64_t seed, std::size_t per_class) {
  std::mt19937_64 master(mix(seed));
  std::vector<Instance> out;
  out.reserve(2 * per_class);
  for (RingLabel label : {RingLabel::c5, RingLabel::c6}) {
    for (std::size_t i = 0; i < per_class; ++i) out.push_back(make_ring_instance(label, master()));
  }
  return out;
}

nlohmann::json dataset_manifest(std::uint64_t seed, std::span<const Instance> instances) {
  nlohmann::json doc;
  doc["seed"] = seed;
  auto items = nlohmann::json::array();
  for (const auto& inst : instances) {
    items.push_back({{"label", to_string(inst.label)}, {"seed", inst.seed}, {"edge_list", format_edge_list(inst.graph)}});
  }
  doc["instances"] = std::move(items);
  return doc;
}

FeatureVector vectorize_cpa(const CpaResult& r, std::size_t pad_events, std::size_t pad_betti) {
  const std::size_t n = r.vertex_count();
  const std::size_t m = r.event_count();
  if (!r.materialized) throw std::invalid_argument("vectorize_cpa needs materialized E-polynomials");
  if (pad_events < std::max<std::size_t>(m, 1)) throw std::invalid_argument("pad_events smaller than the event count");
  if (pad_betti < n + 1) throw std::invalid_argument("pad_betti smaller than vertex count + 1");

  FeatureVector f{std::vector<double>(pad_events * pad_betti, 0.0), pad_events, pad_betti};
  auto write_block = [&](std::size_t block, const DiagonalEPolynomial& e) {
    const BettiVector b = betti_vector(chromatic_to_poincare(e.as_chromatic(), n), n);
    for (std::size_t k = 0; k < b.size(); ++k) f.values[block * pad_betti + k] = b[k].convert_to<double>();
  };
  if (m == 0) {
    write_block(0, r.e.front());
  } else {
    for (std::size_t j = 1; j <= m; ++j) write_block(j - 1, r.e[j]);
  }
  return f;
}

FeatureVector vectorize_baseline(const PhSummary& s) {
  return {{s.auc_b0, s.auc_b1, static_cast<double>(s.final_b1), static_cast<double>(s.b1_jumps), s.b1_birth_norm},
          1,
          5};
}

LooResult loo_1nn(std::span<const FeatureVector> features, std::span<const int> labels) {
  if (features.size() != labels.size()) throw std::invalid_argument("features and labels differ in length");
  if (features.size() < 2) throw std::invalid_argument("LOO needs at least two instances");
  if (std::set<int>(labels.begin(), labels.end()).size() < 2) throw std::invalid_argument("LOO needs two classes");
  const std::size_t dim = features.front().values.size();
  for (const auto& f : features) {
    if (f.values.size() != dim) throw std::invalid_argument("feature vectors differ in length");
  }

  LooResult out;
  out.predictions.resize(features.size());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t nearest = i;
    for (std::size_t k = 0; k < features.size(); ++k) {
      if (k == i) continue;
      double d = 0.0;
      for (std::size_t x = 0; x < dim; ++x) {
        const double diff = features[i].values[x] - features[k].values[x];
        d += diff * diff;
      }
      if (d < best) {
        best = d;
        nearest = k;
      }
    }
    out.predictions[i] = labels[nearest];
    if (out.predictions[i] == labels[i]) ++correct;
  }
  out.accuracy = static_cast<double>(correct) / static_cast<double>(features.size());
  return out;
}

McNemarResult mcnemar(std::span<const int> baseline_predictions, std::span<const int> cpa_predictions,
                      std::span<const int> labels) {
  if (baseline_predictions.size() != labels.size() || cpa_predictions.size() != labels.size()) {
    throw std::invalid_argument("mcnemar: prediction and label lengths differ");
  }
  McNemarResult r;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool base_ok = baseline_predictions[i] == labels[i];
    const bool cpa_ok = cpa_predictions[i] == labels[i];
    if (base_ok && !cpa_ok) ++r.b;
    if (!base_ok && cpa_ok) ++r.c;
  }
  if (r.b + r.c > 0) {
    const double gap = std::abs(static_cast<double>(r.b) - static_cast<double>(r.c)) - 1.0;
    r.chi2 = gap * gap / static_cast<double>(r.b + r.c);
  }
  return r;
}

EvalReport run_experiment(const ExperimentConfig& config) {
  const std::vector<Instance> data = generate_dataset(config.seed, config.per_class);

  EvalReport report;
  report.seed = config.seed;
  std::size_t max_m = 1, max_n = 0;
  for (const auto& inst : data) {
    max_m = std::max(max_m, inst.graph.edge_count());
    max_n = std::max(max_n, inst.graph.vertex_count());
  }
  report.pad_events = config.pad_events.value_or(max_m);
  report.pad_betti = config.pad_betti.value_or(max_n + 1);

  MemoTable memo;
  std::vector<FeatureVector> cpa_features, base_features;
  std::vector<int> labels;
  for (const auto& inst : data) {
    InstanceOutcome outcome{inst.label, inst.seed};
    FeatureVector cpa_f, base_f;
    outcome.ms_cpa = median_ms(config.timing_repeats, [&] {
      cpa_f = vectorize_cpa(run_cpa(inst.graph, memo), report.pad_events, report.pad_betti);
    });
    outcome.ms_baseline = median_ms(config.timing_repeats, [&] {
      base_f = vectorize_baseline(summarize(run_ph_baseline(inst.graph)));
    });
    cpa_features.push_back(std::move(cpa_f));
    base_features.push_back(std::move(base_f));
    labels.push_back(static_cast<int>(inst.label));
    report.instances.push_back(outcome);
  }

  const LooResult cpa = loo_1nn(cpa_features, labels);
  const LooResult base = loo_1nn(base_features, labels);
  report.accuracy_cpa = cpa.accuracy;
  report.accuracy_baseline = base.accuracy;
  report.mcnemar = mcnemar(base.predictions, cpa.predictions, labels);
  for (std::size_t i = 0; i < data.size(); ++i) {
    report.instances[i].predicted_cpa = cpa.predictions[i];
    report.instances[i].predicted_baseline = base.predictions[i];
    report.mean_ms_cpa += report.instances[i].ms_cpa;
    report.mean_ms_baseline += report.instances[i].ms_baseline;
  }
  report.mean_ms_cpa /= static_cast<double>(data.size());
  report.mean_ms_baseline /= static_cast<double>(data.size());
  return report;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json doc;
  doc["seed"] = report.seed;
  doc["pad_events"] = report.pad_events;
  doc["pad_betti"] = report.pad_betti;
  doc["accuracy_cpa"] = report.accuracy_cpa;
  doc["accuracy_baseline"] = report.accuracy_baseline;
  doc["mcnemar"] = {{"b", report.mcnemar.b}, {"c", report.mcnemar.c}, {"chi2", report.mcnemar.chi2}};
  doc["mean_ms_cpa"] = report.mean_ms_cpa;
  doc["mean_ms_baseline"] = report.mean_ms_baseline;
  auto rows = nlohmann::json::array();
  for (const auto& r : report.instances) {
    rows.push_back({{"label", to_string(r.label)},
                    {"seed", r.seed},
                    {"predicted_cpa", r.predicted_cpa == 5 ? "C5" : "C6"},
                    {"predicted_baseline", r.predicted_baseline == 5 ? "C5" : "C6"},
                    {"ms_cpa", r.ms_cpa},
                    {"ms_baseline", r.ms_baseline}});
  }
  doc["instances"] = std::move(rows);
  return doc;
}

std::string format_table(const EvalReport& report) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "%-32s  %-14s  %s\n", "Method", "Accuracy (LOO)", "Avg. time / graph (ms)");
  out += line;
  std::snprintf(line, sizeof line, "%-32s  %-14.2f  %.3f\n", "PH baseline (1-skeleton)", report.accuracy_baseline,
                report.mean_ms_baseline);
  out += line;
  std::snprintf(line, sizeof line, "%-32s  %-14.2f  %.3f\n", "CPA (per-threshold E-profiles)", report.accuracy_cpa,
                report.mean_ms_cpa);
  out += line;
  std::snprintf(line, sizeof line, "McNemar: b=%zu, c=%zu, chi2=%.2f\n", report.mcnemar.b, report.mcnemar.c,
                report.mcnemar.chi2);
  out += line;
  return out;
}

}  // namespace cpa
