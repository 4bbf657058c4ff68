#pragma once

#include <optional>

#include "pair014/graph.hpp"

namespace pair014::oracle {

struct OracleResult {
  int chromatic_number = 0;
  Coloring witness;
};

/// Plain backtracking k-colouring test. Vertices are visited by decreasing
/// degree (lower index first on ties).
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Smallest k, starting from the greedy clique size, for which
/// is_k_colorable succeeds.
OracleResult chromatic_number(const Graph& g);

}  // namespace pair014::oracle
