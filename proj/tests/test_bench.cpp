#include "doctest.h"
#include "pair014/bench.hpp"
#include "pair014/generate.hpp"

using namespace pair014;
using namespace pair014::bench;

namespace {

InstanceResult fake(int n, Rational p, SolveStatus status, int lb, int ub, double t, double pre = 0) {
  SolveReport r;
  r.status = status;
  r.lower_bound = lb;
  r.upper_bound = ub;
  r.gap = relative_gap(lb, ub);
  r.wall_time = t;
  r.preprocess_time = pre;
  return {Job{"", p, 0, Graph(n)}, r};
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("percent2 rounds exact rationals") {
    CHECK(percent2(Rational(1, 72)) == "1.39");
    CHECK(percent2(Rational(0)) == "0.00");
    CHECK(percent2(Rational(1, 3)) == "33.33");
    CHECK(percent2(Rational(1, 8)) == "12.50");
    CHECK(percent2(Rational(1, 800)) == "0.13");  // 0.125 rounds half up
  }

  TEST_CASE("all solved: mean time and ---") {
    std::vector<InstanceResult> rs;
    for (double t : {1.0, 2.0, 3.0, 4.0, 5.0})
      rs.push_back(fake(30, Rational(9, 10), SolveStatus::optimal, 10, 10, t));
    const auto rows = aggregate(rs, false);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].solved == 5);
    CHECK(format_time(rows[0]) == "3.00");
    CHECK(format_gap(rows[0]) == "---");
  }

  TEST_CASE("mixed outcomes: stars and mean gap over unsolved") {
    std::vector<InstanceResult> rs;
    rs.push_back(fake(50, Rational(1, 2), SolveStatus::optimal, 9, 9, 1.0));
    rs.push_back(fake(50, Rational(1, 2), SolveStatus::time_limit, 9, 10, 7200));
    rs.push_back(fake(50, Rational(1, 2), SolveStatus::time_limit, 8, 10, 7200));
    const auto rows = aggregate(rs, false);
    REQUIRE(rows.size() == 1);
    CHECK(format_time(rows[0]) == "**");
    CHECK(rows[0].gap == Rational(3, 20));
    CHECK(format_gap(rows[0]) == "15.00");
  }

  TEST_CASE("cells split on (n, p) and cuts add bracketed preprocessing") {
    std::vector<InstanceResult> rs;
    rs.push_back(fake(10, Rational(1, 2), SolveStatus::optimal, 4, 4, 1.0, 0.5));
    rs.push_back(fake(10, Rational(9, 10), SolveStatus::optimal, 7, 7, 2.0, 0.25));
    rs.push_back(fake(10, Rational(9, 10), SolveStatus::optimal, 7, 7, 4.0, 0.75));
    const auto rows = aggregate(rs, true);
    REQUIRE(rows.size() == 2);
    CHECK(format_time(rows[1]) == "3.00 (0.50)");
  }

  TEST_CASE("empty input gives an empty table") {
    const auto rows = aggregate({}, false);
    CHECK(rows.empty());
    const std::string table = render_table(rows);
    CHECK(table.find('\n') == table.size() - 1);  // header only
    const std::string csv = render_csv(rows, {});
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
  }

  TEST_CASE("CSV carries the same numbers as the table") {
    SolveConfig cfg;
    const auto jobs = grid_jobs({8}, {Rational(1, 2), Rational(9, 10)}, 0, 3);
    CHECK(jobs.size() == 6);
    const auto results = run(jobs, cfg);
    const auto rows = aggregate(results, false);
    REQUIRE(rows.size() == 2);
    const std::string table = render_table(rows);
    const std::string csv = render_csv(rows, results);
    for (const auto& row : rows) {
      CHECK(table.find(format_time(row)) != std::string::npos);
      CHECK(csv.find("cell,," + std::to_string(row.n) + "," + format_p(row.p) + ",,," +
                     format_time(row)) != std::string::npos);
    }
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 + 6);
  }
}
