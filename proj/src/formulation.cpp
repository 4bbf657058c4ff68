#include "pair014/formulation.hpp"

#include <algorithm>
#include <map>

#include "pair014/cuts.hpp"
#include "pair014/union_find.hpp"

namespace pair014 {

std::string_view tag_name(RowTag tag) {
  switch (tag) {
    case RowTag::triangle: return "triangle";
    case RowTag::objective_tangent: return "tangent";
    case RowTag::simple_cut: return "cut";
  }
  return "?";
}

std::string_view kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::triangle: return "triangle";
    case Violation::Kind::tangent: return "tangent";
    case Violation::Kind::cut: return "cut";
    case Violation::Kind::bound: return "bound";
    case Violation::Kind::integrality: return "integrality";
  }
  return "?";
}

std::string pair_var_name(const PairVar& p) {
  return "x_" + std::to_string(p.u + 1) + "_" + std::to_string(p.v + 1);
}

std::string fv_name(int v) { return "f_" + std::to_string(v + 1); }

PairIndex::PairIndex(const Graph& g)
    : n_(static_cast<std::size_t>(g.n())), ids_(n_ * n_, -1) {
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      const int id = static_cast<int>(vars_.size());
      vars_.push_back({u, v, id});
      ids_[static_cast<std::size_t>(u) * n_ + v] = id;
      ids_[static_cast<std::size_t>(v) * n_ + u] = id;
    }
  }
}

std::vector<PairVar> build_pair_vars(const Graph& g) { return PairIndex(g).vars(); }

std::vector<LinearConstraint> build_triangle_constraints(const Graph& g) {
  return build_triangle_constraints(g, PairIndex(g));
}

std::vector<LinearConstraint> build_triangle_constraints(const Graph& g, const PairIndex& index) {
  std::vector<LinearConstraint> rows;
  const int n = g.n();
  auto emit = [&](int apex, int a, int b) {
    const int left = index.id(apex, a);
    const int right = index.id(apex, b);
    // an edge in a +1 slot fixes that term to 0 and the row follows from bounds
    if (left < 0 || right < 0) return;
    LinearConstraint row;
    row.name = "t_" + std::to_string(rows.size());
    row.tag = RowTag::triangle;
    row.sense = Sense::less_equal;
    row.rhs = 1;
    row.terms.push_back({VarRef::pair(left), 1});
    row.terms.push_back({VarRef::pair(right), 1});
    if (const int base = index.id(a, b); base >= 0) row.terms.push_back({VarRef::pair(base), -1});
    rows.push_back(std::move(row));
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        emit(u, v, w);
        emit(v, u, w);
        emit(w, u, v);
      }
  return rows;
}

Rational tangent_value(int i, const Rational& d) {
  if (i < 0) throw Error("tangent_value: index must be non-negative");
  const std::int64_t a = i + 1;
  const std::int64_t b = i + 2;
  return -(d - Rational(i)) / (a * b) + Rational(1, a);
}

std::vector<LinearConstraint> build_fv_constraints(const Graph& g, int v, int i_max) {
  return build_fv_constraints(g, PairIndex(g), v, i_max);
}

std::vector<LinearConstraint> build_fv_constraints(const Graph& g, const PairIndex& index, int v,
                                                   int i_max) {
  if (v < 0 || v >= g.n()) throw Error("build_fv_constraints: vertex out of range");
  if (i_max < 0 || i_max > g.n() - 1)
    throw Error("build_fv_constraints: i_max must lie in [0, n-1]");

  std::vector<int> incident;
  for (int u = 0; u < g.n(); ++u)
    if (const int id = index.id(u, v); id >= 0) incident.push_back(id);
  std::sort(incident.begin(), incident.end());

  std::vector<LinearConstraint> rows;
  rows.reserve(static_cast<std::size_t>(i_max) + 1);
  for (int i = 0; i <= i_max; ++i) {
    const std::int64_t a = i + 1;
    const Rational slope(1, a * (i + 2));
    LinearConstraint row;
    row.name = "pw_" + std::to_string(v + 1) + "_" + std::to_string(i);
    row.tag = RowTag::objective_tangent;
    row.sense = Sense::greater_equal;
    row.rhs = slope * i + Rational(1, a);
    row.terms.push_back({VarRef::fv(v), 1});
    for (int id : incident) row.terms.push_back({VarRef::pair(id), slope});
    rows.push_back(std::move(row));
  }
  return rows;
}

Model build_model(const Graph& g, const ModelOptions& opts) {
  if (opts.use_cuts) return build_model(g, opts, compute_cut_report(g, opts.cut_node_budget));
  if (opts.tangent_range == TangentRange::truncated)
    throw Error("build_model: truncated tangent range requires cuts");
  return build_model(g, opts, CutReport{});
}

Model build_model(const Graph& g, const ModelOptions& opts, const CutReport& cuts) {
  if (opts.tangent_range == TangentRange::truncated && !opts.use_cuts)
    throw Error("build_model: truncated tangent range requires cuts");
  if (opts.use_cuts && cuts.sizes.size() != static_cast<std::size_t>(g.n()))
    throw Error("build_model: cut report does not cover every vertex");

  Model m;
  m.graph = g;
  m.options = opts;
  m.index = PairIndex(g);
  m.fv_lower = g.n() > 0 ? Rational(1, g.n()) : Rational(1);

  m.constraints = build_triangle_constraints(g, m.index);
  m.stats.triangle_rows = m.constraints.size();

  for (int v = 0; v < g.n(); ++v) {
    int i_max = g.n() - 1;
    if (opts.tangent_range == TangentRange::truncated) i_max = std::min(i_max, cuts.sizes[v] - 1);
    auto rows = build_fv_constraints(g, m.index, v, i_max);
    m.stats.tangent_rows += rows.size();
    std::move(rows.begin(), rows.end(), std::back_inserter(m.constraints));
  }

  if (opts.use_cuts) {
    auto rows = build_simple_cuts(g, m.index, cuts);
    m.stats.cut_rows = rows.size();
    std::move(rows.begin(), rows.end(), std::back_inserter(m.constraints));
    m.independent_set_sizes = cuts.sizes;
    m.independent_set_exact = cuts.exact;
    m.stats.cut_preprocess_seconds = cuts.preprocess_seconds;
  }

  m.stats.pair_vars = m.index.size();
  m.stats.fv_vars = static_cast<std::size_t>(g.n());
  return m;
}

PairAssignment coloring_to_x(const Graph& g, const Coloring& c) {
  return coloring_to_x(g, PairIndex(g), c);
}

PairAssignment coloring_to_x(const Graph& g, const PairIndex& index, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("coloring_to_x: colouring is not proper");
  PairAssignment x;
  x.values.reserve(index.size());
  for (const auto& p : index.vars())
    x.values.push_back(c.colors[p.u] == c.colors[p.v] ? 1 : 0);
  return x;
}

std::vector<int> incident_sums(const Graph& g, const PairIndex& index, const PairAssignment& x) {
  if (x.values.size() != index.size()) throw Error("pair assignment has the wrong length");
  std::vector<int> d(static_cast<std::size_t>(g.n()), 0);
  for (const auto& p : index.vars()) {
    if (x.values[p.id] > 1) throw Error("pair assignment value is not 0/1");
    d[p.u] += x.values[p.id];
    d[p.v] += x.values[p.id];
  }
  return d;
}

std::vector<Rational> tight_fv(const Graph& g, const PairIndex& index, const PairAssignment& x) {
  const auto d = incident_sums(g, index, x);
  std::vector<Rational> f;
  f.reserve(d.size());
  for (int dv : d) f.emplace_back(1, 1 + dv);
  return f;
}

std::vector<std::vector<int>> x_to_components(const Graph& g, const PairAssignment& x) {
  const PairIndex index(g);
  const auto d = incident_sums(g, index, x);
  UnionFind uf(g.n());
  for (const auto& p : index.vars())
    if (x.values[p.id]) uf.unite(p.u, p.v);

  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.n(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  components.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    // a component is a clique of E_x iff each member touches all the others
    for (int v : members)
      if (d[v] != static_cast<int>(members.size()) - 1)
        throw Error("pair assignment is infeasible: component of vertex " +
                    std::to_string(root + 1) + " is not transitively closed");
    components.push_back(std::move(members));
  }
  return components;
}

Coloring x_to_coloring(const Graph& g, const PairAssignment& x) {
  Coloring c{std::vector<int>(static_cast<std::size_t>(g.n()), 0)};
  const auto comps = x_to_components(g, x);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int v : comps[k]) c.colors[v] = static_cast<int>(k);
  return c;
}

Rational fractional_objective(const Graph& g, const PairAssignment& x) {
  x_to_components(g, x);  // feasibility
  const auto d = incident_sums(g, PairIndex(g), x);
  // group by degree: on a partition each group sums to a whole number of
  // classes, so the denominators never accumulate
  std::map<int, std::int64_t> count;
  for (int dv : d) ++count[dv];
  Rational total;
  for (const auto& [dv, c] : count) total += Rational(c, 1 + dv);
  return total;
}

FeasibilityReport check_feasibility(const Model& m, const PairAssignment& x,
                                    std::optional<std::span<const Rational>> fv) {
  if (x.values.size() != m.index.size())
    throw Error("check_feasibility: assignment has " + std::to_string(x.values.size()) +
                " values, model has " + std::to_string(m.index.size()) + " pair variables");
  if (fv && fv->size() != static_cast<std::size_t>(m.n()))
    throw Error("check_feasibility: expected " + std::to_string(m.n()) + " f values");

  FeasibilityReport report;
  for (const auto& p : m.pair_vars()) {
    const std::uint8_t value = x.values[p.id];
    if (value > 1)
      report.violations.push_back(
          {Violation::Kind::integrality, pair_var_name(p), Rational(1) - Rational(value)});
  }
  if (fv) {
    for (int v = 0; v < m.n(); ++v) {
      const Rational& f = (*fv)[v];
      if (f < m.fv_lower) report.violations.push_back({Violation::Kind::bound, fv_name(v), f - m.fv_lower});
      if (f > m.fv_upper) report.violations.push_back({Violation::Kind::bound, fv_name(v), m.fv_upper - f});
    }
  }

  for (const auto& row : m.constraints) {
    Rational lhs;
    bool needs_fv = false;
    for (const auto& t : row.terms) {
      if (t.var.kind == VarRef::Kind::fv) {
        if (!fv) {
          needs_fv = true;
          break;
        }
        lhs += t.coef * (*fv)[t.var.index];
      } else {
        lhs += t.coef * Rational(x.values[t.var.index]);
      }
    }
    if (needs_fv) continue;
    const Rational slack = row.sense == Sense::less_equal ? row.rhs - lhs : lhs - row.rhs;
    if (slack >= 0) continue;
    Violation::Kind kind = Violation::Kind::triangle;
    if (row.tag == RowTag::objective_tangent) kind = Violation::Kind::tangent;
    if (row.tag == RowTag::simple_cut) kind = Violation::Kind::cut;
    report.violations.push_back({kind, row.name, slack});
  }
  return report;
}

}  // namespace pair014
