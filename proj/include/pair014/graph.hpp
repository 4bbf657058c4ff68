#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pair014/error.hpp"
#include "pair014/rational.hpp"
#include "pair014/vertex_set.hpp"

namespace pair014 {

using Edge = std::pair<int, int>;  // first < second

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds from an edge list. Orientation and duplicates are normalised;
  /// self-loops and out-of-range endpoints throw Error.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted lexicographically, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return adj_[u].contains(static_cast<std::size_t>(v)); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

/// Color label per vertex.
struct Coloring {
  std::vector<int> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_proper(const Graph& g, const Coloring& c);
/// Number of distinct labels in use.
int num_colors(const Coloring& c);
/// Relabels colors to 0..k-1 in order of first appearance.
Coloring canonical(const Coloring& c);

/// |E| / C(n,2). Throws Error when n < 2.
Rational density(const Graph& g);
/// Percentage with one decimal, e.g. "96.8".
std::string density_percent(const Graph& g);

Graph complement(const Graph& g);

/// Standard small graphs used throughout the tests and examples.
namespace named {
Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
}  // namespace named

}  // namespace pair014
