#pragma once

// Experiment harness: solve a batch of instances and summarise them in the
// Time[s] / Gap[%] table layout, plus a CSV with one row per cell and one per
// instance.
//
// Cell conventions: Time[s] is the mean over the instances of the cell when
// all of them were solved; otherwise it shows one '*' per unsolved instance.
// Gap[%] is "---" when all were solved, else the mean relative gap of the
// unsolved ones. With cuts the mean preprocessing time follows in brackets.

#include <optional>
#include <string>
#include <vector>

#include "pair014/graph.hpp"
#include "pair014/solver.hpp"

namespace pair014::bench {

struct Job {
  std::string instance;      // file stem, or empty for generated graphs
  std::optional<Rational> p;  // generation probability, if generated
  std::uint64_t seed = 0;
  Graph graph;
};

struct InstanceResult {
  Job job;
  SolveReport report;
};

struct BenchRow {
  std::string instance;
  int n = 0;
  std::optional<Rational> p;
  std::string density_percent;  // empty when n < 2
  std::size_t solved = 0;
  std::size_t unsolved = 0;
  std::optional<double> time_s;      // mean over the cell, only when all solved
  double preprocess_s = 0.0;         // mean over the cell
  std::optional<Rational> gap;       // mean over unsolved instances
  bool with_cuts = false;
};

/// Jobs for `count` seeds starting at `first_seed` for each (n, p).
std::vector<Job> grid_jobs(const std::vector<int>& ns, const std::vector<Rational>& ps,
                           std::uint64_t first_seed, int count);

std::vector<InstanceResult> run(const std::vector<Job>& jobs, const SolveConfig& cfg);

/// Groups consecutive results by (instance, n, p) in first-seen order.
std::vector<BenchRow> aggregate(const std::vector<InstanceResult>& results, bool with_cuts);

std::string format_time(const BenchRow& row);
std::string format_gap(const BenchRow& row);
/// Exact percentage with two decimals, rounded half up.
std::string percent2(const Rational& r);
std::string format_p(const std::optional<Rational>& p);

std::string render_table(const std::vector<BenchRow>& rows);
std::string render_csv(const std::vector<BenchRow>& rows,
                       const std::vector<InstanceResult>& results);

}  // namespace pair014::bench
