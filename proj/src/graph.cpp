#include "pair014/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace pair014 {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw Error("graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("graph: edge endpoint out of range");
    if (u == v) throw Error("graph: self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u].contains(static_cast<std::size_t>(v))) continue;
    adj_[u].insert(static_cast<std::size_t>(v));
    adj_[v].insert(static_cast<std::size_t>(u));
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.colors.size() != static_cast<std::size_t>(g.n())) return false;
  for (int col : c.colors)
    if (col < 0) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

int num_colors(const Coloring& c) {
  std::set<int> distinct(c.colors.begin(), c.colors.end());
  return static_cast<int>(distinct.size());
}

Coloring canonical(const Coloring& c) {
  std::unordered_map<int, int> relabel;
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (int col : c.colors) {
    auto [it, _] = relabel.emplace(col, static_cast<int>(relabel.size()));
    out.colors.push_back(it->second);
  }
  return out;
}

Rational density(const Graph& g) {
  if (g.n() < 2) throw Error("density: undefined for fewer than 2 vertices");
  const std::int64_t n = g.n();
  return Rational(static_cast<std::int64_t>(g.edge_count()), n * (n - 1) / 2);
}

std::string density_percent(const Graph& g) {
  const Rational d = density(g);
  // tenths of a percent, rounded half up
  const std::int64_t tenths = (2000 * d.numerator() + d.denominator()) / (2 * d.denominator());
  std::ostringstream os;
  os << tenths / 10 << '.' << tenths % 10;
  return os.str();
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges);
}

namespace named {

Graph complete(int n) { return complement(Graph(n)); }

Graph empty(int n) { return Graph(n); }

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace named
}  // namespace pair014
