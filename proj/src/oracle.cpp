#include "pair014/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "pair014/heuristics.hpp"

namespace pair014::oracle {
namespace {

// Colours are interchangeable, so a vertex never needs a colour index more
// than one past the largest used so far: any colouring can be relabelled so
// that colours first appear in visiting order 0, 1, 2, ... Restricting to
// those labellings loses no colourable instance and prunes the k! copies.
bool extend(const Graph& g, const std::vector<int>& order, std::size_t pos, int used, int k,
            std::vector<int>& color) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (int u = 0; u < g.n() && !clash; ++u)
      clash = color[u] == c && g.adjacent(u, v);
    if (clash) continue;
    color[v] = c;
    if (extend(g, order, pos + 1, std::max(used, c + 1), k, color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  if (k < 1) throw Error("is_k_colorable: k must be at least 1");
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  if (!extend(g, order, 0, 0, k, color)) return std::nullopt;
  return Coloring{std::move(color)};
}

OracleResult chromatic_number(const Graph& g) {
  if (g.n() == 0) return {0, {}};
  for (int k = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));; ++k) {
    if (auto c = is_k_colorable(g, k)) return {k, std::move(*c)};
  }
}

}  // namespace pair014::oracle
