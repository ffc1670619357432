#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpa/graph.hpp"
#include "cpa/ph_baseline.hpp"
#include "cpa/pipeline.hpp"

namespace cpa {

enum class RingLabel : int { c5 = 5, c6 = 6 };

const char* to_string(RingLabel label) noexcept;

/// A labelled ring with a spanning-tree-first schedule: one uniformly chosen
/// cycle edge closes the ring at weight 0.95, the rest lie in [0.1, 0.3].
struct Instance {
  WeightedGraph graph;
  RingLabel label = RingLabel::c5;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kInstancesPerClass = 30;
inline constexpr double kClosingWeight = 0.95;
inline constexpr double kTreeWeightLow = 0.1;
inline constexpr double kTreeWeightHigh = 0.3;

Instance make_ring_instance(RingLabel label, std::uint64_t seed);

/// per_class C5 instances followed by per_class C6 instances; a pure
/// function of `seed`.
std::vector<Instance> generate_dataset(std::uint64_t seed, std::size_t per_class = kInstancesPerClass);

/// {"seed", "instances":[{"label","seed","edge_list"}]}
nlohmann::json dataset_manifest(std::uint64_t seed, std::span<const Instance> instances);

struct FeatureVector {
  std::vector<double> values;
  std::size_t blocks = 0;       // event slots
  std::size_t block_width = 0;  // Betti slots per event
};

/// Concatenated Betti vectors of H_1..H_m, each zero-padded to pad_betti,
/// followed by zero blocks up to pad_events. A chain without events
/// contributes the Betti vector of its edgeless graph as the only block.
FeatureVector vectorize_cpa(const CpaResult& r, std::size_t pad_events, std::size_t pad_betti);

/// (auc_b0, auc_b1, final_b1, b1_jumps, b1_birth_norm)
FeatureVector vectorize_baseline(const PhSummary& s);

struct LooResult {
  double accuracy = 0.0;
  std::vector<int> predictions;
};

/// Leave-one-out 1-NN under Euclidean distance; ties go to the lowest index.
LooResult loo_1nn(std::span<const FeatureVector> features, std::span<const int> labels);

struct McNemarResult {
  std::size_t b = 0;  // baseline correct, CPA wrong
  std::size_t c = 0;  // baseline wrong, CPA correct
  double chi2 = 0.0;  // (|b - c| - 1)^2 / (b + c), 0 when b + c = 0
};

McNemarResult mcnemar(std::span<const int> baseline_predictions, std::span<const int> cpa_predictions,
                      std::span<const int> labels);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t per_class = kInstancesPerClass;
  std::optional<std::size_t> pad_events;  // default: largest event count
  std::optional<std::size_t> pad_betti;   // default: largest vertex count + 1
  std::size_t timing_repeats = 5;
};

struct InstanceOutcome {
  RingLabel label = RingLabel::c5;
  std::uint64_t seed = 0;
  int predicted_cpa = 0;
  int predicted_baseline = 0;
  double ms_cpa = 0.0;       // median over the timing repeats
  double ms_baseline = 0.0;
};

struct EvalReport {
  std::uint64_t seed = 0;
  std::size_t pad_events = 0;
  std::size_t pad_betti = 0;
  double accuracy_cpa = 0.0;
  double accuracy_baseline = 0.0;
  McNemarResult mcnemar;
  double mean_ms_cpa = 0.0;
  double mean_ms_baseline = 0.0;
  std::vector<InstanceOutcome> instances;
};

EvalReport run_experiment(const ExperimentConfig& config = {});

nlohmann::json to_json(const EvalReport& report);
/// Method / Accuracy (LOO) / Avg. time per graph (ms), plus the McNemar line.
std::string format_table(const EvalReport& report);

}  // namespace cpa
