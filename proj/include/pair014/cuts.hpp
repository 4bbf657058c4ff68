#pragma once

#include <cstdint>
#include <vector>

#include "pair014/formulation.hpp"
#include "pair014/graph.hpp"

namespace pair014 {

/// Per-vertex |I_v|: size of a largest independent set containing v.
struct CutReport {
  std::vector<int> sizes;
  /// false where the search ran out of budget; sizes[v] is then an upper bound.
  std::vector<bool> exact;
  double preprocess_seconds = 0.0;
};

struct IndependentSetBound {
  int size = 1;
  bool exact = true;
};

/// Branch and bound over independent sets forced to contain v. Branches on
/// the lowest-index candidate; bounds with a greedy clique cover of the
/// remaining candidates. When node_budget runs out the result is the best
/// proved upper bound with exact = false.
IndependentSetBound max_independent_with(const Graph& g, int v, std::int64_t node_budget);

/// Runs max_independent_with for every vertex in index order and records the
/// elapsed wall time.
CutReport compute_cut_report(const Graph& g, std::int64_t node_budget = 1'000'000);

/// sum_u x_uv <= sizes[v] - 1 per vertex, named cut_<v>. Rows without any
/// incident pair variable are vacuous and omitted.
std::vector<LinearConstraint> build_simple_cuts(const Graph& g, const CutReport& report);
std::vector<LinearConstraint> build_simple_cuts(const Graph& g, const PairIndex& index,
                                                const CutReport& report);

}  // namespace pair014
