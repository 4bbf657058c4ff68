#pragma once

#include <span>
#include <vector>

#include "pair014/graph.hpp"

namespace pair014 {

/// DSATUR: repeatedly colour the uncoloured vertex of maximum saturation
/// (ties: larger degree, then lower index) with the lowest feasible colour.
Coloring dsatur_coloring(const Graph& g);

/// Greedy clique: start at a maximum-degree vertex, then repeatedly add the
/// candidate with the most neighbours among the remaining candidates (lowest
/// index on ties). Returns sorted vertex indices.
std::vector<int> greedy_clique(const Graph& g);

// Variants over an induced subgraph given as adjacency rows plus the set of
// live vertices. Rows may contain dead vertices; they are masked out. Used by
// the solver on its contracted graphs.
std::vector<int> greedy_clique(std::span<const VertexSet> adj, const VertexSet& live);
/// Returns a colour per row index (-1 for dead rows).
std::vector<int> dsatur_coloring(std::span<const VertexSet> adj, const VertexSet& live);

}  // namespace pair014
