#include "doctest.h"
#include "pair014/cuts.hpp"
#include "pair014/generate.hpp"
#include "support/brute_force.hpp"

using namespace pair014;

TEST_SUITE("cuts") {
  TEST_CASE("max_independent_with on named graphs") {
    for (int v = 0; v < 6; ++v) {
      const auto k = max_independent_with(named::complete(6), v, 1000);
      CHECK(k.size == 1);
      CHECK(k.exact);
      const auto e = max_independent_with(Graph(6), v, 1000);
      CHECK(e.size == 6);
      CHECK(e.exact);
    }
    for (int v = 0; v < 5; ++v) {
      CHECK(testing::max_independent_with_brute(named::cycle(5), v) == 2);
      const auto c = max_independent_with(named::cycle(5), v, 1000);
      CHECK(c.size == 2);
      CHECK(c.exact);
    }
    // Petersen: independence number 4, vertex transitive
    CHECK(max_independent_with(named::petersen(), 7, 1000).size == 4);
    CHECK_THROWS_AS(max_independent_with(Graph(3), 3, 10), Error);
    CHECK_THROWS_AS(max_independent_with(Graph(3), 0, 0), Error);
  }

  TEST_CASE("exact search agrees with subset enumeration") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng.next() % 16);
      const Graph g = gen_gnp(n, testing::random_p(rng), rng.next());
      const CutReport rep = compute_cut_report(g);
      REQUIRE(rep.sizes.size() == static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        CHECK(rep.exact[v]);
        CHECK(rep.sizes[v] == testing::max_independent_with_brute(g, v));
      }
      CHECK(rep.preprocess_seconds >= 0.0);
    }
  }

  TEST_CASE("budget exhaustion returns a certified upper bound") {
    SplitMix64 rng(12);
    int inexact = 0;
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = gen_gnp(18, Rational(3, 10), rng.next());
      for (int v = 0; v < g.n(); v += 5) {
        const int truth = testing::max_independent_with_brute(g, v);
        for (std::int64_t budget : {1, 2, 5, 20}) {
          const auto r = max_independent_with(g, v, budget);
          CHECK(r.size >= truth);
          CHECK(r.size >= 1);
          if (r.exact) CHECK(r.size == truth);
          inexact += r.exact ? 0 : 1;
        }
      }
    }
    CHECK(inexact > 0);  // the small budgets really were binding somewhere
  }

  TEST_CASE("build_simple_cuts") {
    SUBCASE("complete graph rows are vacuous and dropped") {
      const Graph g = named::complete(5);
      CHECK(build_simple_cuts(g, compute_cut_report(g)).empty());
    }
    SUBCASE("empty graph on 4") {
      const Graph g(4);
      const auto rows = build_simple_cuts(g, compute_cut_report(g));
      REQUIRE(rows.size() == 4);
      const PairIndex idx(g);
      CHECK(rows[0].name == "cut_1");
      CHECK(rows[0].rhs == Rational(3));
      CHECK(rows[0].sense == Sense::less_equal);
      REQUIRE(rows[0].terms.size() == 3);
      CHECK(rows[0].terms[0].var == VarRef::pair(idx.id(0, 1)));
      CHECK(rows[0].terms[1].var == VarRef::pair(idx.id(0, 2)));
      CHECK(rows[0].terms[2].var == VarRef::pair(idx.id(0, 3)));
    }
    SUBCASE("size one fixes incident variables") {
      const Graph g(3);
      CutReport rep{{1, 3, 3}, {true, true, true}, 0.0};
      const auto rows = build_simple_cuts(g, rep);
      REQUIRE(rows.size() == 3);
      CHECK(rows[0].rhs == Rational(0));
    }
    CHECK_THROWS_AS(build_simple_cuts(Graph(3), CutReport{}), Error);
  }

  TEST_CASE("cuts hold at every proper colouring, also with inflated sizes") {
    SplitMix64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.next() % 11);
      const Graph g = gen_gnp(n, testing::random_p(rng), rng.next());
      CutReport rep = compute_cut_report(g);
      for (int inflate = 0; inflate < 2; ++inflate) {
        ModelOptions opts;
        opts.use_cuts = true;
        const Model m = build_model(g, opts, rep);
        for (int k = 0; k < 5; ++k) {
          const Coloring c = testing::random_proper_coloring(g, rng);
          CHECK(check_feasibility(m, coloring_to_x(g, m.index, c)).feasible());
        }
        for (auto& s : rep.sizes) s += 1 + static_cast<int>(rng.next() % 3);
      }
    }
  }
}
