#pragma once

// Minimal LP / MPS readers for checking what the exporters wrote. They only
// understand the subset the exporters emit.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pair014::testing {

struct ParsedRow {
  char sense = '?';  // 'L' or 'G'
  double rhs = 0.0;
  std::map<std::string, double> coefs;

  friend bool operator==(const ParsedRow&, const ParsedRow&) = default;
};

struct ParsedModel {
  std::map<std::string, double> objective;
  std::vector<std::string> row_order;
  std::map<std::string, ParsedRow> rows;
  std::map<std::string, std::pair<double, double>> bounds;
  std::set<std::string> binaries;
};

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// "f_1 + 0.5 x_1_2 - x_2_3" -> coefficients
inline std::map<std::string, double> lp_terms(const std::vector<std::string>& toks) {
  std::map<std::string, double> out;
  double sign = 1.0;
  double coef = 1.0;
  bool have_coef = false;
  for (const auto& t : toks) {
    if (t == "+") {
      sign = 1.0;
    } else if (t == "-") {
      sign = -1.0;
    } else if (!have_coef && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '.')) {
      coef = std::stod(t);
      have_coef = true;
    } else {
      out[t] += sign * coef;
      sign = 1.0;
      coef = 1.0;
      have_coef = false;
    }
  }
  return out;
}

inline ParsedModel read_lp(const std::string& text) {
  ParsedModel m;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::string pending;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (line[0] != ' ') {
      section = line;
      continue;
    }
    if (section == "Minimize") {
      // first line carries the "obj:" label, continuation lines do not
      const bool labelled = t[0].back() == ':';
      std::vector<std::string> rest(t.begin() + (labelled ? 1 : 0), t.end());
      for (const auto& [k, v] : lp_terms(rest)) m.objective[k] += v;
    } else if (section == "Subject To") {
      pending += " " + line;
      if (line.find("<=") == std::string::npos && line.find(">=") == std::string::npos) continue;
      auto all = tokens(pending);
      pending.clear();
      std::string name = all[0];
      name.pop_back();  // ':'
      ParsedRow row;
      row.sense = all[all.size() - 2] == "<=" ? 'L' : 'G';
      row.rhs = std::stod(all.back());
      row.coefs = lp_terms(std::vector<std::string>(all.begin() + 1, all.end() - 2));
      m.row_order.push_back(name);
      m.rows[name] = row;
    } else if (section == "Bounds") {
      // lo <= name <= hi
      m.bounds[t[2]] = {std::stod(t[0]), std::stod(t[4])};
    } else if (section == "Binary") {
      m.binaries.insert(t[0]);
    }
  }
  for (const auto& b : m.binaries) m.bounds[b] = {0.0, 1.0};
  return m;
}

inline ParsedModel read_mps(const std::string& text) {
  ParsedModel m;
  std::istringstream in(text);
  std::string line;
  std::string section;
  bool integer = false;
  std::set<std::string> integer_cols;
  std::string objective_row;
  while (std::getline(in, line)) {
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (line[0] != ' ') {
      section = t[0];
      continue;
    }
    if (section == "ROWS") {
      if (t[0] == "N") {
        objective_row = t[1];
      } else {
        m.row_order.push_back(t[1]);
        m.rows[t[1]].sense = t[0][0];
      }
    } else if (section == "COLUMNS") {
      if (t.size() == 3 && t[1] == "'MARKER'") {
        if (t[2] == "'INTORG'") integer = true;
        if (t[2] == "'INTEND'") integer = false;
        continue;
      }
      if (integer) integer_cols.insert(t[0]);
      for (std::size_t k = 1; k + 1 < t.size(); k += 2) {
        const double v = std::stod(t[k + 1]);
        if (t[k] == objective_row) m.objective[t[0]] += v;
        else m.rows.at(t[k]).coefs[t[0]] += v;
      }
      if (!m.bounds.count(t[0])) m.bounds[t[0]] = {0.0, 1e300};
    } else if (section == "RHS") {
      for (std::size_t k = 1; k + 1 < t.size(); k += 2) m.rows.at(t[k]).rhs = std::stod(t[k + 1]);
    } else if (section == "BOUNDS") {
      auto& b = m.bounds[t[2]];
      if (t[0] == "UP") b.second = std::stod(t[3]);
      if (t[0] == "LO") b.first = std::stod(t[3]);
    }
  }
  for (const auto& c : integer_cols)
    if (m.bounds[c] == std::pair{0.0, 1.0}) m.binaries.insert(c);
  return m;
}

}  // namespace pair014::testing
