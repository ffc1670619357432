#include "cpa/pipeline.hpp"

#include <chrono>
#include <stdexcept>

#include "cpa/closed_form_tracker.hpp"

namespace cpa {

BarcodeZeta BarcodeZeta::one(std::size_t order) {
  BarcodeZeta z;
  z.order = order;
  z.coefficients.resize(order + 1);
  z.coefficients[0] = RationalPolynomial::constant(1);
  return z;
}

BarcodeZeta zeta_update(const BarcodeZeta& z, std::size_t j, const DiagonalEPolynomial& delta) {
  if (j == 0) throw std::invalid_argument("zeta_update: event index starts at 1");
  if (delta.poly().is_zero() || j > z.order) return z;

  const RationalPolynomial d = to_rational(delta.poly());
  const std::size_t terms = z.order / j;
  // binom[k] = d (d + 1) ... (d + k - 1) / k!
  std::vector<RationalPolynomial> binom{RationalPolynomial::constant(1)};
  for (std::size_t k = 1; k <= terms; ++k) {
    RationalPolynomial next = binom.back() * (d + RationalPolynomial::constant(Rational(k - 1)));
    next *= Rational(1, k);
    binom.push_back(std::move(next));
  }

  BarcodeZeta out = BarcodeZeta::one(z.order);
  for (std::size_t i = 0; i <= z.order; ++i) {
    RationalPolynomial acc;
    for (std::size_t k = 0; k <= terms && k * j <= i; ++k) {
      const RationalPolynomial& prev = z.coefficients[i - k * j];
      if (!prev.is_zero()) acc += binom[k] * prev;
    }
    out.coefficients[i] = std::move(acc);
  }
  return out;
}

CpaResult run_cpa(const WeightedGraph& g, const CpaOptions& options) {
  MemoTable memo;
  return run_cpa(g, memo, options);
}

CpaResult run_cpa(const WeightedGraph& g, MemoTable& memo, const CpaOptions& options) {
  using clock = std::chrono::steady_clock;

  CpaResult r;
  r.chain = build_threshold_chain(g);
  r.materialized = options.materialize;
  const std::size_t n = r.chain.vertex_count;
  const std::size_t m = r.chain.size();

  r.engine_log.reserve(m);
  if (options.materialize) {
    r.e.reserve(m + 1);
    r.jumps.reserve(m);
    r.e.push_back(chromatic_to_e(IntPolynomial::monomial(n)));
    r.zeta = BarcodeZeta::one(options.zeta_order.value_or(m));
  } else {
    r.zeta = BarcodeZeta::one(0);
  }

  ClosedFormTracker tracker(n);

  for (const ThresholdEvent& ev : r.chain.events) {
    const auto start = clock::now();
    tracker.add_edge(ev.edge);

    StepLog log;
    IntPolynomial minor_chi;
    if (tracker.in_family()) {
      // The minor H_j / e_j stays a union of trees and cycles.
      const ClosedForm form = tracker.contracted(ev.edge);
      if (options.materialize) minor_chi = form.expand();
      log.engine = Engine::closed_form;
    } else {
      const SimpleGraph minor = contract_edge(r.chain.prefix(ev.index), ev.edge);
      ChiResult chi = chi_auto(minor, memo, options.max_dp_width);
      minor_chi = std::move(chi.chi);
      log.engine = chi.engine;
    }
    log.micros = std::chrono::duration<double, std::micro>(clock::now() - start).count();
    r.engine_log.push_back(log);

    if (!options.materialize) continue;
    DiagonalEPolynomial delta = chromatic_to_e(minor_chi);
    r.e.push_back(r.e.back() - delta);
    r.zeta = zeta_update(r.zeta, ev.index, delta);
    r.jumps.push_back(std::move(delta));
  }
  return r;
}

nlohmann::json to_json(const CpaResult& r, bool include_weights) {
  if (!r.materialized) throw std::logic_error("CPA result was run without materialized polynomials");
  nlohmann::json doc;
  doc["n"] = r.vertex_count();
  auto events = nlohmann::json::array();
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    const ThresholdEvent& ev = r.chain.events[i];
    nlohmann::json item;
    item["j"] = ev.index;
    item["edge"] = {ev.edge.u, ev.edge.v};
    if (include_weights) item["weight"] = ev.weight;
    item["delta"] = to_json(r.jumps[i].poly());
    item["E"] = to_json(r.e[i + 1].poly());
    item["engine"] = to_string(r.engine_log[i].engine);
    events.push_back(std::move(item));
  }
  doc["events"] = std::move(events);
  auto zeta = nlohmann::json::array();
  for (const auto& c : r.zeta.coefficients) zeta.push_back(to_json(c));
  doc["zeta"] = std::move(zeta);
  return doc;
}

VerificationReport verify_correctness(const WeightedGraph& g) {
  const CpaResult r = run_cpa(g);
  VerificationReport report;
  auto fail = [&](std::size_t j, std::string what) {
    report.pass = false;
    report.first_divergence = j;
    report.detail = std::move(what);
    return report;
  };

  if (r.e.front().as_chromatic() != chi_bruteforce_oracle(r.chain.prefix(0))) {
    return fail(0, "E_0 differs from the edgeless chromatic polynomial");
  }
  for (std::size_t j = 1; j <= r.event_count(); ++j) {
    const SimpleGraph hj = r.chain.prefix(j);
    const IntPolynomial expected_e = chi_bruteforce_oracle(hj);
    if (r.e[j].as_chromatic() != expected_e) {
      return fail(j, "E_" + std::to_string(j) + " = " + r.e[j].poly().to_string("s") + " but oracle gives " +
                         expected_e.to_string("s"));
    }
    const IntPolynomial expected_delta = chi_bruteforce_oracle(contract_edge(hj, r.chain.events[j - 1].edge));
    if (r.jumps[j - 1].as_chromatic() != expected_delta) {
      return fail(j, "Delta_" + std::to_string(j) + " = " + r.jumps[j - 1].poly().to_string("s") +
                         " but oracle gives " + expected_delta.to_string("s"));
    }
  }
  report.detail = "all " + std::to_string(r.event_count()) + " events agree with the oracle";
  return report;
}

}  // namespace cpa
