#include "pair014/export.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace pair014 {
namespace {

constexpr std::size_t kTermsPerLine = 6;

std::string column_name(const Model& m, const VarRef& ref) {
  return ref.kind == VarRef::Kind::pair ? pair_var_name(m.pair_vars()[ref.index])
                                        : fv_name(ref.index);
}

void write_lp_terms(std::ostream& os, const Model& m, const std::vector<Term>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) os << "\n   ";
    const Rational& c = terms[k].coef;
    const bool negative = c < 0;
    if (k > 0) os << (negative ? " - " : " + ");
    else if (negative) os << "- ";
    const Rational magnitude = negative ? -c : c;
    if (magnitude != 1) os << format_number(magnitude) << ' ';
    os << column_name(m, terms[k].var);
  }
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

// One MPS data line: fields start in columns 2, 5, 15, 25.
std::string mps_line(std::string_view type, std::string_view name1, std::string_view name2,
                     std::string_view value) {
  std::string line = " " + pad(type, 2) + " " + pad(name1, 8) + "  " + pad(name2, 8) + "  " +
                     std::string(value);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::string format_number(const Rational& value) { return format_number(to_double(value)); }

std::string write_lp(const Model& m) {
  std::ostringstream os;
  const auto& st = m.stats;
  os << "\\ pairwise vertex colouring model\n"
     << "\\ n=" << m.n() << " edges=" << m.graph.edge_count() << " pair_vars=" << st.pair_vars
     << " triangle=" << st.triangle_rows << " tangent=" << st.tangent_rows
     << " cut=" << st.cut_rows << '\n';

  os << "Minimize\n obj: ";
  std::vector<Term> objective;
  for (int v = 0; v < m.n(); ++v) objective.push_back({VarRef::fv(v), 1});
  write_lp_terms(os, m, objective);
  os << "\nSubject To\n";
  for (const auto& row : m.constraints) {
    os << ' ' << row.name << ": ";
    write_lp_terms(os, m, row.terms);
    os << (row.sense == Sense::less_equal ? " <= " : " >= ") << format_number(row.rhs) << '\n';
  }
  os << "Bounds\n";
  for (int v = 0; v < m.n(); ++v)
    os << ' ' << format_number(m.fv_lower) << " <= " << fv_name(v)
       << " <= " << format_number(m.fv_upper) << '\n';
  if (!m.pair_vars().empty()) {
    os << "Binary\n";
    for (const auto& p : m.pair_vars()) os << ' ' << pair_var_name(p) << '\n';
  }
  os << "End\n";
  return os.str();
}

std::string write_mps(const Model& m) {
  // column-major view of the constraint matrix
  std::vector<std::vector<std::pair<std::size_t, Rational>>> pair_cols(m.pair_vars().size());
  std::vector<std::vector<std::pair<std::size_t, Rational>>> fv_cols(static_cast<std::size_t>(m.n()));
  for (std::size_t r = 0; r < m.constraints.size(); ++r) {
    for (const auto& t : m.constraints[r].terms) {
      auto& col = t.var.kind == VarRef::Kind::pair ? pair_cols[t.var.index] : fv_cols[t.var.index];
      col.emplace_back(r, t.coef);
    }
  }

  std::ostringstream os;
  os << "NAME          PAIRCOL\n";
  os << "ROWS\n";
  os << mps_line("N", "obj", "", "") << '\n';
  for (const auto& row : m.constraints)
    os << mps_line(row.sense == Sense::less_equal ? "L" : "G", row.name, "", "") << '\n';

  os << "COLUMNS\n";
  if (!m.pair_vars().empty()) {
    os << "    MARKER                 'MARKER'                 'INTORG'\n";
    for (const auto& p : m.pair_vars()) {
      const std::string name = pair_var_name(p);
      for (const auto& [r, coef] : pair_cols[p.id])
        os << mps_line("", name, m.constraints[r].name, format_number(coef)) << '\n';
    }
    os << "    MARKER                 'MARKER'                 'INTEND'\n";
  }
  for (int v = 0; v < m.n(); ++v) {
    const std::string name = fv_name(v);
    os << mps_line("", name, "obj", "1") << '\n';
    for (const auto& [r, coef] : fv_cols[v])
      os << mps_line("", name, m.constraints[r].name, format_number(coef)) << '\n';
  }

  os << "RHS\n";
  for (const auto& row : m.constraints)
    if (row.rhs != 0) os << mps_line("", "RHS", row.name, format_number(row.rhs)) << '\n';

  os << "BOUNDS\n";
  for (const auto& p : m.pair_vars()) os << mps_line("UP", "BND", pair_var_name(p), "1") << '\n';
  for (int v = 0; v < m.n(); ++v) {
    os << mps_line("LO", "BND", fv_name(v), format_number(m.fv_lower)) << '\n';
    os << mps_line("UP", "BND", fv_name(v), format_number(m.fv_upper)) << '\n';
  }
  os << "ENDATA\n";
  return os.str();
}

SolutionFile parse_sol(std::string_view text) {
  SolutionFile sol;
  bool have_objective = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "solution line " + std::to_string(line_no) + ": ";

    if (line.front() == '#') {
      const auto key = line.find("Objective value");
      if (key == std::string::npos) continue;
      const auto eq = line.find('=', key);
      if (eq == std::string::npos) throw Error(where + "objective header without '='");
      const auto value = parse_double(trim(std::string_view(line).substr(eq + 1)));
      if (!value) throw Error(where + "unparseable objective value");
      sol.objective = *value;
      have_objective = true;
      continue;
    }

    std::istringstream fields(line);
    std::string name;
    std::string value_text;
    std::string extra;
    if (!(fields >> name >> value_text) || (fields >> extra))
      throw Error(where + "expected '<name> <value>'");
    const auto value = parse_double(value_text);
    if (!value) throw Error(where + "unparseable value '" + value_text + "'");
    if (!sol.values.emplace(name, *value).second)
      throw Error(where + "duplicate variable '" + name + "'");
  }
  if (!have_objective) throw Error("solution: missing '# Objective value =' header");
  if (sol.values.empty()) throw Error("solution: no variable values");
  return sol;
}

std::string write_sol(const Model& m, const PairAssignment& x,
                      std::optional<std::span<const Rational>> fv) {
  std::vector<Rational> tight;
  if (!fv) {
    tight = tight_fv(m.graph, m.index, x);
    fv = tight;
  }
  if (x.values.size() != m.index.size() || fv->size() != static_cast<std::size_t>(m.n()))
    throw Error("write_sol: dimension mismatch");
  // grouped so tight values on a partition sum without large denominators
  std::map<Rational, std::int64_t> count;
  for (const auto& f : *fv) ++count[f];
  Rational objective;
  for (const auto& [f, c] : count) objective += f * Rational(c);

  std::ostringstream os;
  os << "# Objective value = " << format_number(objective) << '\n';
  for (const auto& p : m.pair_vars())
    os << pair_var_name(p) << ' ' << static_cast<int>(x.values[p.id]) << '\n';
  for (int v = 0; v < m.n(); ++v) os << fv_name(v) << ' ' << format_number((*fv)[v]) << '\n';
  return os.str();
}

std::string_view problem_name(VerificationReport::Problem p) {
  using P = VerificationReport::Problem;
  switch (p) {
    case P::unknown_name: return "unknown_name";
    case P::missing_value: return "missing_value";
    case P::non_integral: return "non_integral";
    case P::infeasible: return "infeasible";
    case P::objective_mismatch: return "objective_mismatch";
  }
  return "?";
}

bool VerificationReport::has(Problem p) const {
  for (const auto& issue : issues)
    if (issue.problem == p) return true;
  return false;
}

VerificationReport verify_solution(const Model& m, const SolutionFile& s, double tol) {
  using P = VerificationReport::Problem;
  if (!(tol > 0)) throw Error("verify_solution: tolerance must be positive");
  VerificationReport rep;

  std::map<std::string, VarRef> columns;
  for (const auto& p : m.pair_vars()) columns.emplace(pair_var_name(p), VarRef::pair(p.id));
  for (int v = 0; v < m.n(); ++v) columns.emplace(fv_name(v), VarRef::fv(v));
  for (const auto& [name, value] : s.values)
    if (!columns.count(name)) rep.issues.push_back({P::unknown_name, name});

  // binaries: absent entries read as 0, the usual solver convention
  rep.x.values.assign(m.index.size(), 0);
  for (const auto& p : m.pair_vars()) {
    const auto it = s.values.find(pair_var_name(p));
    if (it == s.values.end()) continue;
    const double rounded = std::round(it->second);
    if (std::abs(it->second - rounded) > tol || rounded < 0 || rounded > 1) {
      rep.issues.push_back({P::non_integral, pair_var_name(p) + " = " + format_number(it->second)});
      continue;
    }
    rep.x.values[p.id] = static_cast<std::uint8_t>(rounded);
  }

  std::vector<double> f(static_cast<std::size_t>(m.n()), 0.0);
  bool have_all_f = true;
  for (int v = 0; v < m.n(); ++v) {
    const auto it = s.values.find(fv_name(v));
    if (it == s.values.end()) {
      rep.issues.push_back({P::missing_value, fv_name(v)});
      have_all_f = false;
      continue;
    }
    f[v] = it->second;
    if (f[v] < to_double(m.fv_lower) - tol || f[v] > to_double(m.fv_upper) + tol)
      rep.issues.push_back({P::infeasible, "bound " + fv_name(v)});
  }

  rep.feasibility = check_feasibility(m, rep.x);
  for (const auto& viol : rep.feasibility.violations)
    rep.issues.push_back({P::infeasible, std::string(kind_name(viol.kind)) + " row " + viol.row +
                                             " (slack " + to_string(viol.slack) + ")"});

  if (have_all_f) {
    for (const auto& row : m.constraints) {
      if (row.tag != RowTag::objective_tangent) continue;
      double lhs = 0.0;
      for (const auto& t : row.terms) {
        const double value = t.var.kind == VarRef::Kind::fv ? f[t.var.index]
                                                            : rep.x.values[t.var.index];
        lhs += to_double(t.coef) * value;
      }
      const double slack = lhs - to_double(row.rhs);
      if (slack < -tol)
        rep.issues.push_back({P::infeasible, "tangent row " + row.name + " (slack " +
                                                 format_number(slack) + ")"});
    }
  }

  if (rep.feasibility.feasible() && !rep.has(P::non_integral)) {
    rep.coloring = x_to_coloring(m.graph, rep.x);
    rep.colors = num_colors(*rep.coloring);
    rep.recomputed_objective = fractional_objective(m.graph, rep.x);
    const double expected = to_double(rep.recomputed_objective);
    if (std::abs(s.objective - expected) > tol)
      rep.issues.push_back({P::objective_mismatch, "file objective " + format_number(s.objective) +
                                                       " vs recomputed " + format_number(expected)});
    if (have_all_f) {
      double sum_f = 0.0;
      for (double v : f) sum_f += v;
      if (std::abs(sum_f - expected) > tol)
        rep.issues.push_back({P::objective_mismatch, "sum of f " + format_number(sum_f) +
                                                         " vs recomputed " + format_number(expected)});
    }
  }
  return rep;
}

}  // namespace pair014
