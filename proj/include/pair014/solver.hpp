#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "pair014/graph.hpp"
#include "pair014/rational.hpp"

namespace pair014 {

enum class BranchRule : std::uint8_t {
  /// Undecided class pair with the most common non-neighbours; ties go to
  /// the lexicographically smallest pair of representatives.
  common_non_neighbors,
  /// First undecided pair in lexicographic order.
  lexicographic,
};

std::string_view rule_name(BranchRule r);
std::optional<BranchRule> parse_rule(std::string_view name);

struct BoundEvent {
  double seconds = 0.0;
  int lower = 0;
  int upper = 0;
  std::int64_t nodes = 0;
};

struct SolveConfig {
  double time_limit = 7200.0;  // seconds, must be > 0
  std::optional<std::int64_t> node_limit;
  bool use_cuts = false;
  std::int64_t cut_node_budget = 1'000'000;
  BranchRule rule = BranchRule::common_non_neighbors;
  /// Called whenever the global lower or upper bound changes, and once at
  /// the start.
  std::function<void(const BoundEvent&)> on_bound;
};

enum class SolveStatus : std::uint8_t { optimal, time_limit, node_limit };

std::string_view status_name(SolveStatus s);

struct SolveReport {
  int lower_bound = 0;
  int upper_bound = 0;
  Coloring incumbent;
  Rational gap;
  SolveStatus status = SolveStatus::optimal;
  double wall_time = 0.0;        // seconds, including preprocessing
  std::int64_t nodes = 0;
  double preprocess_time = 0.0;  // |I_v| computation when use_cuts
};

/// (ub - lb) / ub. Throws Error unless 1 <= lb <= ub.
Rational relative_gap(int lb, int ub);

/// Exact branch and bound over same-colour / different-colour decisions on
/// vertex pairs. A node is a partition in progress: classes already merged
/// (x_uv = 1) plus pairs of classes forced apart (x_uv = 0), represented as
/// a contracted graph. Bounds: greedy clique of the contracted graph below,
/// DSATUR on it above. With use_cuts a merge is refused when the class would
/// outgrow the smallest |I_v| among its members.
SolveReport solve(const Graph& g, const SolveConfig& cfg = {});

}  // namespace pair014
