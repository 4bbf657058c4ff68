#pragma once

// Pairwise (clique-partitioning) MILP for vertex colouring.
//
//   minimize   sum_v f_v
//   subject to x_uv + x_vw - x_uw <= 1        (transitivity, non-edges only)
//              f_v >= u_i(sum_u x_uv)          (tangents of 1/(1+d), i = 0..i_max)
//              sum_u x_uv <= |I_v| - 1         (optional simple cuts)
//              x_uv in {0,1}, f_v in [1/n, 1]
//
// x_uv = 1 means u and v share a colour. Pairs joined by an edge never get a
// variable. u_i is the tangent line through (i, 1/(i+1)) and (i+1, 1/(i+2)),
// so at integer d the largest tangent is u_d(d) = 1/(1+d) and sum_v f_v at
// an integral point equals the number of colour classes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pair014/graph.hpp"
#include "pair014/rational.hpp"

namespace pair014 {

struct CutReport;

struct PairVar {
  int u = 0;  // u < v
  int v = 0;
  int id = 0;

  friend bool operator==(const PairVar&, const PairVar&) = default;
};

/// Reference to a model column: a pair variable (by id) or f_v (by vertex).
struct VarRef {
  enum class Kind : std::uint8_t { pair, fv };
  Kind kind = Kind::pair;
  int index = 0;

  static VarRef pair(int id) { return {Kind::pair, id}; }
  static VarRef fv(int v) { return {Kind::fv, v}; }
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct Term {
  VarRef var;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Sense : std::uint8_t { less_equal, greater_equal };
enum class RowTag : std::uint8_t { triangle, objective_tangent, simple_cut };

std::string_view tag_name(RowTag tag);

struct LinearConstraint {
  std::string name;  // t_<k>, pw_<v>_<i>, cut_<v> (v 1-based)
  std::vector<Term> terms;
  Sense sense = Sense::less_equal;
  Rational rhs;
  RowTag tag = RowTag::triangle;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Dense lookup from an unordered vertex pair to its variable id.
class PairIndex {
 public:
  PairIndex() = default;
  explicit PairIndex(const Graph& g);

  /// -1 when {u,v} is an edge or u == v.
  int id(int u, int v) const { return ids_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::vector<PairVar>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<int> ids_;
  std::vector<PairVar> vars_;
};

/// One variable per non-adjacent pair, lexicographic in (u, v).
std::vector<PairVar> build_pair_vars(const Graph& g);

/// Transitivity rows after removing those implied by fixing edge pairs to 0.
/// For each triple and each choice of apex w with other endpoints a < b the
/// row is x_wa + x_wb - x_ab <= 1. It is kept only when both {w,a} and {w,b}
/// are non-edges; if {a,b} is an edge it is kept as x_wa + x_wb <= 1.
/// Rows are named t_0, t_1, ... in emission order.
std::vector<LinearConstraint> build_triangle_constraints(const Graph& g);
std::vector<LinearConstraint> build_triangle_constraints(const Graph& g, const PairIndex& index);

/// u_i(d) = -(d - i) / ((i+1)(i+2)) + 1/(i+1). Throws Error if i < 0.
Rational tangent_value(int i, const Rational& d);

/// Tangent rows for vertex v, i = 0..i_max, in the form
///   f_v + c_i * sum_u x_uv >= c_i * i + 1/(i+1),   c_i = 1/((i+1)(i+2)).
/// Throws Error unless 0 <= i_max <= n-1.
std::vector<LinearConstraint> build_fv_constraints(const Graph& g, int v, int i_max);
std::vector<LinearConstraint> build_fv_constraints(const Graph& g, const PairIndex& index, int v,
                                                   int i_max);

enum class TangentRange : std::uint8_t { full, truncated };

struct ModelOptions {
  bool use_cuts = false;
  /// `truncated` stops each vertex at i = |I_v| - 1 and requires use_cuts.
  TangentRange tangent_range = TangentRange::full;
  std::int64_t cut_node_budget = 1'000'000;
};

struct ModelStats {
  std::size_t pair_vars = 0;
  std::size_t fv_vars = 0;
  std::size_t triangle_rows = 0;
  std::size_t tangent_rows = 0;
  std::size_t cut_rows = 0;
  double cut_preprocess_seconds = 0.0;

  std::size_t rows() const { return triangle_rows + tangent_rows + cut_rows; }
};

struct Model {
  Graph graph;
  ModelOptions options;
  PairIndex index;
  std::vector<LinearConstraint> constraints;  // triangle, then tangent, then cut
  Rational fv_lower;                          // 1/n
  Rational fv_upper{1};
  ModelStats stats;
  std::vector<int> independent_set_sizes;  // |I_v| bounds when cuts are on
  std::vector<bool> independent_set_exact;

  const std::vector<PairVar>& pair_vars() const { return index.vars(); }
  int n() const { return graph.n(); }
};

Model build_model(const Graph& g, const ModelOptions& opts = {});
/// Same, reusing an already computed cut report (opts.use_cuts must be set).
Model build_model(const Graph& g, const ModelOptions& opts, const CutReport& cuts);

/// 0/1 value per pair variable id.
struct PairAssignment {
  std::vector<std::uint8_t> values;

  friend bool operator==(const PairAssignment&, const PairAssignment&) = default;
};

/// x_uv = 1 iff u and v share a colour. Throws Error if c is not proper.
PairAssignment coloring_to_x(const Graph& g, const Coloring& c);
PairAssignment coloring_to_x(const Graph& g, const PairIndex& index, const Coloring& c);

/// Connected components of (V, E_x), each sorted, ordered by smallest member.
/// Throws Error unless every component is a clique of E_x (i.e. x is feasible).
std::vector<std::vector<int>> x_to_components(const Graph& g, const PairAssignment& x);

/// The colouring whose classes are x_to_components(g, x).
Coloring x_to_coloring(const Graph& g, const PairAssignment& x);

/// sum_v 1/(1 + sum_u x_uv), exactly. Throws Error on infeasible x.
Rational fractional_objective(const Graph& g, const PairAssignment& x);

/// d_v = sum_u x_uv for every vertex.
std::vector<int> incident_sums(const Graph& g, const PairIndex& index, const PairAssignment& x);

/// f_v = 1/(1+d_v), the smallest value the tangent rows allow.
std::vector<Rational> tight_fv(const Graph& g, const PairIndex& index, const PairAssignment& x);

struct Violation {
  enum class Kind : std::uint8_t { triangle, tangent, cut, bound, integrality };
  Kind kind;
  std::string row;  // constraint or variable name
  Rational slack;   // negative: amount by which the row is violated
};

std::string_view kind_name(Violation::Kind kind);

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Checks x (and f, when given) against every row and bound of m. Tangent
/// rows are skipped when fv is absent. Throws Error on dimension mismatch.
FeasibilityReport check_feasibility(const Model& m, const PairAssignment& x,
                                    std::optional<std::span<const Rational>> fv = std::nullopt);

/// Column names used by the exporters: x_<u>_<v> and f_<v>, 1-based.
std::string pair_var_name(const PairVar& p);
std::string fv_name(int v);

}  // namespace pair014
