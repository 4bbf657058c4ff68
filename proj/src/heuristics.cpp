#include "pair014/heuristics.hpp"

#include <algorithm>

namespace pair014 {
namespace {

std::vector<VertexSet> rows_of(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) rows.push_back(g.neighbors(v));
  return rows;
}

}  // namespace

std::vector<int> greedy_clique(std::span<const VertexSet> adj, const VertexSet& live) {
  std::vector<int> clique;
  if (live.empty()) return clique;

  std::size_t seed = live.capacity();
  std::size_t best_degree = 0;
  live.for_each([&](std::size_t v) {
    const std::size_t d = adj[v].intersection_count(live);
    if (seed == live.capacity() || d > best_degree) {
      seed = v;
      best_degree = d;
    }
  });

  clique.push_back(static_cast<int>(seed));
  VertexSet candidates = adj[seed];
  candidates &= live;
  while (!candidates.empty()) {
    std::size_t pick = candidates.capacity();
    std::size_t pick_degree = 0;
    candidates.for_each([&](std::size_t v) {
      const std::size_t d = adj[v].intersection_count(candidates);
      if (pick == candidates.capacity() || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    clique.push_back(static_cast<int>(pick));
    candidates &= adj[pick];
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<int> greedy_clique(const Graph& g) {
  const auto rows = rows_of(g);
  return greedy_clique(rows, VertexSet::full(static_cast<std::size_t>(g.n())));
}

std::vector<int> dsatur_coloring(std::span<const VertexSet> adj, const VertexSet& live) {
  const std::size_t n = adj.size();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> saturation(n, 0);
  // neighbour_colors[v] holds the colours already present around v
  std::vector<VertexSet> neighbour_colors(n, VertexSet(n + 1));
  live.for_each([&](std::size_t v) { degree[v] = adj[v].intersection_count(live); });

  VertexSet uncolored = live;
  while (!uncolored.empty()) {
    std::size_t pick = n;
    uncolored.for_each([&](std::size_t v) {
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && degree[v] > degree[pick]))
        pick = v;
    });
    std::size_t c = 0;
    while (neighbour_colors[pick].contains(c)) ++c;
    color[pick] = static_cast<int>(c);
    uncolored.erase(pick);

    adj[pick].for_each([&](std::size_t u) {
      if (!uncolored.contains(u) || neighbour_colors[u].contains(c)) return;
      neighbour_colors[u].insert(c);
      ++saturation[u];
    });
  }
  return color;
}

Coloring dsatur_coloring(const Graph& g) {
  const auto rows = rows_of(g);
  return Coloring{dsatur_coloring(rows, VertexSet::full(static_cast<std::size_t>(g.n())))};
}

}  // namespace pair014
