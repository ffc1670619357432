// Command-line front end: chi, run, baseline, verify, experiment.
//
// Exit codes: 0 success, 1 other failure (including a failed verify),
// 2 input parse error, 3 invariant violation, 4 engine precondition.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpa/chromatic.hpp"
#include "cpa/edge_list.hpp"
#include "cpa/error.hpp"
#include "cpa/experiment.hpp"
#include "cpa/ph_baseline.hpp"
#include "cpa/pipeline.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int cmd_chi(const std::string& input, const std::string& engine_flag, const std::string& out_path) {
  const cpa::SimpleGraph h = cpa::read_edge_list(input).skeleton();
  cpa::MemoTable memo;
  const auto start = std::chrono::steady_clock::now();
  cpa::ChiResult r;
  if (engine_flag == "auto") {
    r = cpa::chi_auto(h, memo);
  } else {
    static const std::map<std::string, cpa::Engine> engines{
        {"closed", cpa::Engine::closed_form},          {"sp", cpa::Engine::series_parallel},
        {"twdp", cpa::Engine::treewidth_dp},           {"delcon", cpa::Engine::deletion_contraction},
        {"brute", cpa::Engine::brute_force}};
    r = cpa::chi_with_engine(h, engines.at(engine_flag), memo);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json doc;
  doc["n"] = h.vertex_count();
  doc["m"] = h.edge_count();
  doc["engine"] = cpa::to_string(r.engine);
  if (r.width >= 0) doc["width"] = r.width;
  doc["coefficients"] = cpa::to_json(r.chi);
  doc["elapsed_ms"] = ms;
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

int cmd_run(const std::string& input, std::optional<std::size_t> truncate, const std::string& out_path) {
  cpa::CpaOptions options;
  options.zeta_order = truncate;
  const cpa::CpaResult r = cpa::run_cpa(cpa::read_edge_list(input), options);
  emit(cpa::to_json(r).dump(2) + "\n", out_path);
  return 0;
}

int cmd_baseline(const std::string& input, const std::string& out_path) {
  const cpa::PhTrace trace = cpa::run_ph_baseline(cpa::read_edge_list(input));
  const cpa::PhSummary s = cpa::summarize(trace);
  emit(cpa::trace_to_csv(trace), out_path);
  std::fprintf(stderr, "auc_b0=%.6f auc_b1=%.6f final_b1=%zu b1_jumps=%zu b1_birth_norm=%.6f\n", s.auc_b0,
               s.auc_b1, s.final_b1, s.b1_jumps, s.b1_birth_norm);
  return 0;
}

int cmd_verify(const std::string& input) {
  const cpa::VerificationReport report = cpa::verify_correctness(cpa::read_edge_list(input));
  if (report.pass) {
    std::cout << "pass\n" << report.detail << "\n";
    return 0;
  }
  std::cout << "fail\nfirst divergence at event " << *report.first_divergence << ": " << report.detail << "\n";
  return 1;
}

int cmd_experiment(const cpa::ExperimentConfig& config, const std::string& out_path, const std::string& manifest) {
  if (!manifest.empty()) {
    const auto data = cpa::generate_dataset(config.seed, config.per_class);
    std::ofstream out(manifest);
    if (!out) throw std::runtime_error("cannot write " + manifest);
    out << cpa::dataset_manifest(config.seed, data).dump(2) << "\n";
  }
  const cpa::EvalReport report = cpa::run_experiment(config);
  if (!out_path.empty()) emit(cpa::to_json(report).dump(2) + "\n", out_path);
  std::cout << cpa::format_table(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic persistence on weighted graphs"};
  app.require_subcommand(1);

  std::string input, out_path, engine = "auto", manifest;
  std::optional<std::size_t> truncate;
  cpa::ExperimentConfig config;
  std::size_t pad_events = 0, pad_betti = 0;

  auto* chi = app.add_subcommand("chi", "chromatic polynomial of the graph (weights ignored)");
  chi->add_option("input", input, "edge-list file")->required();
  chi->add_option("--engine", engine, "engine")
      ->check(CLI::IsMember({"auto", "closed", "sp", "twdp", "delcon", "brute"}));
  chi->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* run = app.add_subcommand("run", "per-threshold E-polynomials, jumps and barcode zeta as JSON");
  run->add_option("input", input, "edge-list file")->required();
  run->add_option("--truncate-zeta", truncate, "zeta truncation order (default: event count)");
  run->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* baseline = app.add_subcommand("baseline", "1-skeleton b0/b1 trace as CSV; summary on stderr");
  baseline->add_option("input", input, "edge-list file")->required();
  baseline->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check every event against the brute-force oracle");
  verify->add_option("input", input, "edge-list file")->required();

  auto* experiment = app.add_subcommand("experiment", "ring-size recognition, LOO 1-NN, McNemar");
  experiment->add_option("--seed", config.seed, "dataset seed");
  experiment->add_option("--out", out_path, "write the report JSON here");
  experiment->add_option("--manifest", manifest, "write the dataset manifest JSON here");
  experiment->add_option("--pad-events", pad_events, "event slots per feature vector");
  experiment->add_option("--pad-betti", pad_betti, "Betti slots per event");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chi) return cmd_chi(input, engine, out_path);
    if (*run) return cmd_run(input, truncate, out_path);
    if (*baseline) return cmd_baseline(input, out_path);
    if (*verify) return cmd_verify(input);
    if (pad_events > 0) config.pad_events = pad_events;
    if (pad_betti > 0) config.pad_betti = pad_betti;
    return cmd_experiment(config, out_path, manifest);
  } catch (const cpa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cpa::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const cpa::EnginePreconditionError& e) {
    std::cerr << "engine precondition: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
