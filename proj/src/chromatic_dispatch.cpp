#include "cpa/chromatic.hpp"

namespace cpa {

const char* to_string(Engine e) noexcept {
  switch (e) {
    case Engine::closed_form: return "closed_form";
    case Engine::series_parallel: return "series_parallel";
    case Engine::treewidth_dp: return "treewidth_dp";
    case Engine::deletion_contraction: return "deletion_contraction";
    case Engine::brute_force: return "brute_force";
  }
  return "unknown";
}

ChiResult chi_auto(const SimpleGraph& h, MemoTable& memo, long max_dp_width) {
  if (auto form = closed_form_factors(h)) return {form->expand(), Engine::closed_form};
  if (is_series_parallel(h)) return {chi_series_parallel(h), Engine::series_parallel};
  TreeDecomposition td = tree_decomposition(h);
  if (td.width() <= max_dp_width) return {chi_treewidth_dp(h, td), Engine::treewidth_dp, td.width()};
  return {chi_deletion_contraction(h, memo), Engine::deletion_contraction};
}

ChiResult chi_with_engine(const SimpleGraph& h, Engine engine, MemoTable& memo) {
  switch (engine) {
    case Engine::closed_form: return {chi_closed_form(h), engine};
    case Engine::series_parallel: return {chi_series_parallel(h), engine};
    case Engine::treewidth_dp: {
      TreeDecomposition td = tree_decomposition(h);
      return {chi_treewidth_dp(h, td), engine, td.width()};
    }
    case Engine::deletion_contraction: return {chi_deletion_contraction(h, memo), engine};
    case Engine::brute_force: return {chi_bruteforce_oracle(h), engine};
  }
  return {};
}

}  // namespace cpa
