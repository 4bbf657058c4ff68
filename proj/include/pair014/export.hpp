#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pair014/formulation.hpp"

namespace pair014 {

/// CPLEX LP text. Rows keep the model order and names; pair variables go in
/// the Binary section, f_v get bounds [1/n, 1]. Coefficients are printed as
/// the shortest decimal that round-trips their double value.
std::string write_lp(const Model& m);

/// Fixed-column MPS (names longer than eight characters simply widen the
/// field, which every free-format reader accepts). Pair variables are
/// wrapped in INTORG/INTEND markers with explicit [0,1] bounds.
std::string write_mps(const Model& m);

/// Shortest round-trip decimal for a double (at most 17 significant digits).
std::string format_number(double value);
std::string format_number(const Rational& value);

/// A solver solution file: `# Objective value = <v>` then `name value` lines.
struct SolutionFile {
  double objective = 0.0;
  std::map<std::string, double> values;
};

/// Throws Error on unparseable lines, duplicate names, a missing objective
/// header, or an input without any variable lines.
SolutionFile parse_sol(std::string_view text);

/// Writes x and f (tight values 1/(1+d_v) when f is omitted) with the
/// objective set to sum f.
std::string write_sol(const Model& m, const PairAssignment& x,
                      std::optional<std::span<const Rational>> fv = std::nullopt);

struct VerificationReport {
  enum class Problem : std::uint8_t {
    unknown_name,
    missing_value,
    non_integral,
    infeasible,
    objective_mismatch
  };
  struct Issue {
    Problem problem;
    std::string detail;
  };

  std::vector<Issue> issues;
  PairAssignment x;                    // binaries after rounding
  FeasibilityReport feasibility;       // exact check of x-only rows
  Rational recomputed_objective;       // sum_v 1/(1+d_v), valid when x is feasible
  std::optional<Coloring> coloring;    // implied colouring when x is feasible
  int colors = 0;

  bool ok() const { return issues.empty(); }
  bool has(Problem p) const;
};

std::string_view problem_name(VerificationReport::Problem p);

/// Rounds binaries, checks every row and bound, recomputes the objective and
/// compares it with both the file's objective and sum f_v, within tol.
VerificationReport verify_solution(const Model& m, const SolutionFile& s, double tol = 1e-6);

}  // namespace pair014
