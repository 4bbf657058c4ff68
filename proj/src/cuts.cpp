#include "pair014/cuts.hpp"

#include <algorithm>
#include <chrono>

namespace pair014 {
namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, std::int64_t budget) : g_(g), budget_(budget) {
    const auto n = static_cast<std::size_t>(g.n());
    const VertexSet all = VertexSet::full(n);
    non_adjacent_.reserve(n);
    for (int v = 0; v < g.n(); ++v) {
      VertexSet s = all;
      s.subtract(g.neighbors(v));
      s.erase(static_cast<std::size_t>(v));
      non_adjacent_.push_back(std::move(s));
    }
  }

  IndependentSetBound run(int v) {
    best_ = 1;
    nodes_ = 0;
    const int proved = explore(1, non_adjacent_[v]);
    return {std::max(best_, proved), proved <= best_};
  }

 private:
  // Minimum number of cliques of g covering `candidates` (greedy), an upper
  // bound on how many of them an independent set can use.
  int clique_cover(VertexSet candidates) const {
    int cliques = 0;
    while (!candidates.empty()) {
      const std::size_t u = candidates.first();
      candidates.erase(u);
      VertexSet grow = candidates;
      grow &= g_.neighbors(static_cast<int>(u));
      while (!grow.empty()) {
        const std::size_t w = grow.first();
        candidates.erase(w);
        grow.erase(w);
        grow &= g_.neighbors(static_cast<int>(w));
      }
      ++cliques;
    }
    return cliques;
  }

  // Returns an upper bound on the best set reachable from this node; exact
  // unless the budget ran out inside the subtree.
  int explore(int size, const VertexSet& candidates) {
    if (candidates.empty()) {
      best_ = std::max(best_, size);
      return size;
    }
    const int bound = size + clique_cover(candidates);
    if (bound <= best_ || nodes_ >= budget_) return bound;
    ++nodes_;

    const std::size_t w = candidates.first();
    VertexSet with = candidates;
    with &= non_adjacent_[w];
    const int take = explore(size + 1, with);

    VertexSet without = candidates;
    without.erase(w);
    const int skip = explore(size, without);
    return std::min(bound, std::max(take, skip));
  }

  const Graph& g_;
  std::int64_t budget_;
  std::vector<VertexSet> non_adjacent_;
  int best_ = 1;
  std::int64_t nodes_ = 0;
};

}  // namespace

IndependentSetBound max_independent_with(const Graph& g, int v, std::int64_t node_budget) {
  if (v < 0 || v >= g.n()) throw Error("max_independent_with: vertex out of range");
  if (node_budget < 1) throw Error("max_independent_with: node budget must be positive");
  return IndependentSetSearch(g, node_budget).run(v);
}

CutReport compute_cut_report(const Graph& g, std::int64_t node_budget) {
  if (node_budget < 1) throw Error("compute_cut_report: node budget must be positive");
  const auto start = std::chrono::steady_clock::now();
  CutReport report;
  report.sizes.reserve(static_cast<std::size_t>(g.n()));
  report.exact.reserve(static_cast<std::size_t>(g.n()));
  IndependentSetSearch search(g, node_budget);
  for (int v = 0; v < g.n(); ++v) {
    const auto r = search.run(v);
    report.sizes.push_back(r.size);
    report.exact.push_back(r.exact);
  }
  report.preprocess_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<LinearConstraint> build_simple_cuts(const Graph& g, const CutReport& report) {
  return build_simple_cuts(g, PairIndex(g), report);
}

std::vector<LinearConstraint> build_simple_cuts(const Graph& g, const PairIndex& index,
                                                const CutReport& report) {
  if (report.sizes.size() != static_cast<std::size_t>(g.n()))
    throw Error("build_simple_cuts: report does not cover every vertex");
  std::vector<LinearConstraint> rows;
  for (int v = 0; v < g.n(); ++v) {
    LinearConstraint row;
    row.name = "cut_" + std::to_string(v + 1);
    row.tag = RowTag::simple_cut;
    row.sense = Sense::less_equal;
    row.rhs = report.sizes[v] - 1;
    for (int u = 0; u < g.n(); ++u)
      if (const int id = index.id(u, v); id >= 0) row.terms.push_back({VarRef::pair(id), 1});
    if (row.terms.empty()) continue;
    std::sort(row.terms.begin(), row.terms.end(),
              [](const Term& a, const Term& b) { return a.var.index < b.var.index; });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pair014
