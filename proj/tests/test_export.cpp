#include <cmath>

#include "doctest.h"
#include "pair014/export.hpp"
#include "pair014/generate.hpp"
#include "pair014/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/model_reader.hpp"

using namespace pair014;

namespace {

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::size_t count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++count;
  return count;
}

SolutionFile solution_for(const Model& m, const Coloring& c) {
  return parse_sol(write_sol(m, coloring_to_x(m.graph, m.index, c)));
}

}  // namespace

TEST_SUITE("export") {
  TEST_CASE("format_number is shortest round trip") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(Rational(1, 6)) == "0.16666666666666666");
    CHECK(std::stod(format_number(Rational(1, 3))) == 1.0 / 3.0);
  }

  TEST_CASE("LP structure for K3 and the empty graph") {
    const std::string k3 = write_lp(build_model(named::complete(3)));
    const auto parsed = testing::read_lp(k3);
    CHECK(parsed.binaries.empty());
    CHECK(parsed.rows.size() == 9);
    CHECK(parsed.objective.size() == 3);
    CHECK(k3.find("Binary") == std::string::npos);
    CHECK(parsed.bounds.at("f_1") == std::pair{1.0 / 3.0, 1.0});

    const std::string e3 = write_lp(build_model(Graph(3)));
    const auto p = testing::read_lp(e3);
    CHECK(p.binaries == std::set<std::string>{"x_1_2", "x_1_3", "x_2_3"});
    CHECK(count_lines_starting(e3, " t_") == 3);
    CHECK(p.rows.at("t_0").coefs == std::map<std::string, double>{{"x_1_2", 1}, {"x_1_3", 1}, {"x_2_3", -1}});
    CHECK(p.rows.at("pw_1_1").coefs ==
          std::map<std::string, double>{{"f_1", 1}, {"x_1_2", 1.0 / 6}, {"x_1_3", 1.0 / 6}});
    CHECK(p.rows.at("pw_1_1").rhs == 2.0 / 3.0);
    CHECK(p.rows.at("pw_1_1").sense == 'G');
  }

  TEST_CASE("long rows wrap and still parse") {
    const Model m = build_model(Graph(20));
    const std::string lp = write_lp(m);
    const auto p = testing::read_lp(lp);
    CHECK(p.rows.at("pw_1_0").coefs.size() == 20);
    std::istringstream in(lp);
    std::string line;
    while (std::getline(in, line)) CHECK(line.size() < 255);
  }

  TEST_CASE("output is byte deterministic") {
    const Graph g = gen_gnp(12, Rational(1, 2), 6);
    ModelOptions opts;
    opts.use_cuts = true;
    CHECK(write_lp(build_model(g, opts)) == write_lp(build_model(g, opts)));
    CHECK(write_mps(build_model(g, opts)) == write_mps(build_model(g, opts)));
  }

  TEST_CASE("MPS markers wrap exactly the pair variables") {
    const Model m = build_model(gen_gnp(7, Rational(1, 2), 2));
    const std::string mps = write_mps(m);
    const auto start = mps.find("'INTORG'");
    const auto end = mps.find("'INTEND'");
    REQUIRE(start != std::string::npos);
    REQUIRE(end != std::string::npos);
    const std::string inside = mps.substr(start, end - start);
    const std::string after = mps.substr(end, mps.find("\nRHS\n") - end);
    for (const auto& p : m.pair_vars()) {
      CHECK(inside.find(" " + pair_var_name(p) + " ") != std::string::npos);
      CHECK(after.find(" " + pair_var_name(p) + " ") == std::string::npos);
    }
    CHECK(inside.find("f_") == std::string::npos);
    for (const char* section : {"NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA"})
      CHECK(mps.find(section) != std::string::npos);
    // no markers at all without binaries
    CHECK(write_mps(build_model(named::complete(3))).find("MARKER") == std::string::npos);
  }

  TEST_CASE("LP and MPS describe the same system") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 1 + static_cast<int>(rng.next() % 9);
      ModelOptions opts;
      opts.use_cuts = trial % 2 == 0;
      const Model m = build_model(gen_gnp(n, testing::random_p(rng), rng.next()), opts);
      const auto lp = testing::read_lp(write_lp(m));
      const auto mps = testing::read_mps(write_mps(m));
      CHECK(lp.row_order == mps.row_order);
      CHECK(lp.rows == mps.rows);
      CHECK(lp.objective == mps.objective);
      CHECK(lp.binaries == mps.binaries);
      CHECK(lp.bounds == mps.bounds);
      CHECK(lp.rows.size() == m.constraints.size());
    }
  }

  TEST_CASE("parse_sol") {
    const auto s = parse_sol("# Objective value = 3\nx_1_2 1\nf_1 0.5\n");
    CHECK(s.objective == 3.0);
    CHECK(s.values.size() == 2);
    CHECK(s.values.at("f_1") == 0.5);

    const auto c = parse_sol("# Solution for model pairwise\n# Objective value = 2.5\n\n# note\nf_1 1\n");
    CHECK(c.objective == 2.5);

    CHECK_THROWS_AS(parse_sol(""), Error);
    CHECK_THROWS_AS(parse_sol("x_1_2 1\n"), Error);
    CHECK_THROWS_AS(parse_sol("# Objective value = 1\n"), Error);
    CHECK_THROWS_AS(parse_sol("# Objective value = 1\nx_1_2\n"), Error);
    CHECK_THROWS_AS(parse_sol("# Objective value = 1\nx_1_2 one\n"), Error);
    CHECK_THROWS_AS(parse_sol("# Objective value = 1\nx 1\nx 0\n"), Error);
    CHECK_THROWS_AS(parse_sol("# Objective value = abc\nx 1\n"), Error);
  }

  TEST_CASE("write_sol then parse_sol reproduces the assignment") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = gen_gnp(8, testing::random_p(rng), rng.next());
      const Model m = build_model(g);
      const Coloring c = testing::random_proper_coloring(g, rng);
      const PairAssignment x = coloring_to_x(g, m.index, c);
      const auto s = parse_sol(write_sol(m, x));
      for (const auto& p : m.pair_vars()) CHECK(s.values.at(pair_var_name(p)) == x.values[p.id]);
      const auto f = tight_fv(g, m.index, x);
      for (int v = 0; v < g.n(); ++v) CHECK(s.values.at(fv_name(v)) == to_double(f[v]));
      CHECK(std::abs(s.objective - num_colors(c)) < 1e-12);
    }
  }

  TEST_CASE("verify_solution") {
    SUBCASE("oracle-optimal C5 colouring verifies with 3 colours") {
      const Model m = build_model(named::cycle(5));
      const auto rep = verify_solution(m, solution_for(m, oracle::chromatic_number(m.graph).witness));
      CHECK(rep.ok());
      CHECK(rep.colors == 3);
      CHECK(rep.recomputed_objective == Rational(3));
    }
    SUBCASE("triangle violation is rejected with the row named") {
      const Model m = build_model(Graph(3));
      const auto s = parse_sol("# Objective value = 2\nx_1_2 1\nx_1_3 0\nx_2_3 1\nf_1 0.5\nf_2 0.5\nf_3 0.5\n");
      const auto rep = verify_solution(m, s);
      CHECK_FALSE(rep.ok());
      CHECK(rep.has(VerificationReport::Problem::infeasible));
      bool named_row = false;
      for (const auto& i : rep.issues) named_row |= i.detail.find("t_") != std::string::npos;
      CHECK(named_row);
    }
    SUBCASE("objective off by 0.5") {
      const Model m = build_model(named::cycle(5));
      auto s = solution_for(m, oracle::chromatic_number(m.graph).witness);
      s.objective += 0.5;
      const auto rep = verify_solution(m, s);
      CHECK(rep.has(VerificationReport::Problem::objective_mismatch));
      CHECK_FALSE(rep.has(VerificationReport::Problem::infeasible));
    }
    SUBCASE("near-integral binaries round, far ones are rejected") {
      const Model m = build_model(named::path(3));
      auto s = parse_sol("# Objective value = 2\nx_1_3 0.9999999\nf_1 0.5\nf_2 1\nf_3 0.5\n");
      CHECK(verify_solution(m, s).ok());
      s.values["x_1_3"] = 0.6;
      CHECK(verify_solution(m, s).has(VerificationReport::Problem::non_integral));
      CHECK_THROWS_AS(verify_solution(m, s, 0.0), Error);
    }
    SUBCASE("unknown names and missing f are reported") {
      const Model m = build_model(named::path(3));
      const auto s = parse_sol("# Objective value = 2\nx_1_3 1\nx_9_9 1\nf_1 0.5\nf_3 0.5\n");
      const auto rep = verify_solution(m, s);
      CHECK(rep.has(VerificationReport::Problem::unknown_name));
      CHECK(rep.has(VerificationReport::Problem::missing_value));
    }
    SUBCASE("f below the tangent envelope is caught") {
      const Model m = build_model(named::path(3));
      const auto s = parse_sol("# Objective value = 2\nx_1_3 1\nf_1 0.4\nf_2 1\nf_3 0.6\n");
      CHECK(verify_solution(m, s).has(VerificationReport::Problem::infeasible));
    }
  }

  TEST_CASE("any proper colouring survives export and verification") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = gen_gnp(9, testing::random_p(rng), rng.next());
      ModelOptions opts;
      opts.use_cuts = trial % 2 == 0;
      const Model m = build_model(g, opts);
      const Coloring c = testing::random_proper_coloring(g, rng);
      const auto rep = verify_solution(m, solution_for(m, c));
      CHECK(rep.ok());
      CHECK(rep.colors == num_colors(c));
    }
  }
}
