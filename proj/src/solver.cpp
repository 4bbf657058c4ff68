#include "pair014/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "pair014/cuts.hpp"
#include "pair014/heuristics.hpp"
#include "pair014/union_find.hpp"

namespace pair014 {

std::string_view rule_name(BranchRule r) {
  switch (r) {
    case BranchRule::common_non_neighbors: return "common-non-neighbors";
    case BranchRule::lexicographic: return "lexicographic";
  }
  return "?";
}

std::optional<BranchRule> parse_rule(std::string_view name) {
  if (name == "common-non-neighbors") return BranchRule::common_non_neighbors;
  if (name == "lexicographic") return BranchRule::lexicographic;
  return std::nullopt;
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::time_limit: return "time_limit";
    case SolveStatus::node_limit: return "node_limit";
  }
  return "?";
}

Rational relative_gap(int lb, int ub) {
  if (ub < 1) throw Error("relative_gap: upper bound must be at least 1");
  if (lb < 1 || lb > ub) throw Error("relative_gap: need 1 <= lower <= upper");
  return Rational(ub - lb, ub);
}

namespace {

using Clock = std::chrono::steady_clock;

// Contracted graph: one slot per original vertex, slot s alive while it is
// the smallest member of its class. adj holds original edges between classes
// plus the different-colour decisions.
struct Partition {
  VertexSet live;
  std::vector<VertexSet> adj;
  std::vector<int> size;
  std::vector<int> cap;
  UnionFind classes;

  void merge(std::size_t a, std::size_t b) {  // a < b, non-adjacent
    adj[b].for_each([&](std::size_t c) {
      adj[c].erase(b);
      adj[c].insert(a);
    });
    adj[a] |= adj[b];
    adj[b] = VertexSet(adj[b].capacity());
    live.erase(b);
    size[a] += size[b];
    cap[a] = std::min(cap[a], cap[b]);
    classes.unite(static_cast<int>(a), static_cast<int>(b));
  }

  void separate(std::size_t a, std::size_t b) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolveConfig& cfg, Clock::time_point start)
      : g_(g), cfg_(cfg), start_(start) {}

  SolveReport run(const std::vector<int>& caps, double preprocess) {
    const auto n = static_cast<std::size_t>(g_.n());
    report_.preprocess_time = preprocess;
    report_.incumbent = dsatur_coloring(g_);
    report_.upper_bound = num_colors(report_.incumbent);
    report_.lower_bound = static_cast<int>(greedy_clique(g_).size());
    if (n == 0) {
      report_.lower_bound = report_.upper_bound = 0;
      return finish(true);
    }
    notify();

    Partition root{VertexSet::full(n), {}, std::vector<int>(n, 1), caps, UnionFind(g_.n())};
    root.adj.reserve(n);
    for (int v = 0; v < g_.n(); ++v) root.adj.push_back(g_.neighbors(v));

    if (report_.lower_bound < report_.upper_bound) explore(root);
    return finish(!stopped_);
  }

 private:
  bool out_of_budget() {
    if (stopped_) return true;
    if (cfg_.node_limit && report_.nodes >= *cfg_.node_limit) {
      stopped_ = true;
      stop_status_ = SolveStatus::node_limit;
    } else if ((report_.nodes & 63) == 0 && elapsed() >= cfg_.time_limit) {
      stopped_ = true;
      stop_status_ = SolveStatus::time_limit;
    }
    return stopped_;
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  void notify() {
    if (cfg_.on_bound)
      cfg_.on_bound({elapsed(), report_.lower_bound, report_.upper_bound, report_.nodes});
  }

  void adopt(const Partition& p, const std::vector<int>& slot_color, int colors) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(g_.n()))};
    for (int v = 0; v < g_.n(); ++v) c.colors[v] = slot_color[p.classes.find_const(v)];
    report_.incumbent = std::move(c);
    report_.upper_bound = colors;
    notify();
  }

  void explore(const Partition& p) {
    if (out_of_budget()) return;
    ++report_.nodes;

    const int lower = static_cast<int>(greedy_clique(p.adj, p.live).size());
    if (lower >= report_.upper_bound) return;

    const auto slot_color = dsatur_coloring(p.adj, p.live);
    const int colors = 1 + *std::max_element(slot_color.begin(), slot_color.end());
    if (colors < report_.upper_bound) adopt(p, slot_color, colors);
    if (colors == lower) return;  // subtree solved

    const auto pair = pick_pair(p);
    if (!pair) return;  // contracted graph is complete: its colouring was just evaluated
    const auto [a, b] = *pair;

    if (!cfg_.use_cuts || p.size[a] + p.size[b] <= std::min(p.cap[a], p.cap[b])) {
      Partition same = p;
      same.merge(a, b);
      explore(same);
      if (report_.lower_bound >= report_.upper_bound) return;
    }
    Partition apart = p;
    apart.separate(a, b);
    explore(apart);
  }

  std::optional<std::pair<std::size_t, std::size_t>> pick_pair(const Partition& p) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_score = 0;
    for (std::size_t a = p.live.first(); a < p.live.capacity(); a = p.live.next(a + 1)) {
      VertexSet open = p.live;
      open.subtract(p.adj[a]);
      for (std::size_t b = open.next(a + 1); b < open.capacity(); b = open.next(b + 1)) {
        if (cfg_.rule == BranchRule::lexicographic) return std::pair{a, b};
        const std::size_t score = count_outside_both(p.live, p.adj[a], p.adj[b]);
        if (!best || score > best_score) {
          best = std::pair{a, b};
          best_score = score;
        }
      }
    }
    return best;
  }

  SolveReport finish(bool complete) {
    if (complete) {
      report_.status = SolveStatus::optimal;
      if (report_.lower_bound != report_.upper_bound) {
        report_.lower_bound = report_.upper_bound;
        notify();
      }
    } else {
      report_.status = stop_status_;
    }
    report_.gap = report_.upper_bound > 0 ? relative_gap(report_.lower_bound, report_.upper_bound)
                                          : Rational(0);
    report_.wall_time = elapsed();
    return std::move(report_);
  }

  const Graph& g_;
  const SolveConfig& cfg_;
  Clock::time_point start_;
  SolveReport report_;
  bool stopped_ = false;
  SolveStatus stop_status_ = SolveStatus::optimal;
};

}  // namespace

SolveReport solve(const Graph& g, const SolveConfig& cfg) {
  if (!(cfg.time_limit > 0)) throw Error("solve: time limit must be positive");
  const auto start = Clock::now();
  std::vector<int> caps(static_cast<std::size_t>(g.n()), std::numeric_limits<int>::max());
  double preprocess = 0.0;
  if (cfg.use_cuts) {
    const CutReport cuts = compute_cut_report(g, cfg.cut_node_budget);
    caps = cuts.sizes;
    preprocess = cuts.preprocess_seconds;
  }
  return BranchAndBound(g, cfg, start).run(caps, preprocess);
}

}  // namespace pair014
