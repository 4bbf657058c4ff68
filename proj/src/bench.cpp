#include "pair014/bench.hpp"

#include <iomanip>
#include <sstream>

#include "pair014/generate.hpp"

namespace pair014::bench {

std::vector<Job> grid_jobs(const std::vector<int>& ns, const std::vector<Rational>& ps,
                           std::uint64_t first_seed, int count) {
  std::vector<Job> jobs;
  for (int n : ns)
    for (const auto& p : ps)
      for (int k = 0; k < count; ++k) {
        const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(k);
        jobs.push_back({"", p, seed, gen_gnp(n, p, seed)});
      }
  return jobs;
}

std::vector<InstanceResult> run(const std::vector<Job>& jobs, const SolveConfig& cfg) {
  std::vector<InstanceResult> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) out.push_back({job, solve(job.graph, cfg)});
  return out;
}

std::vector<BenchRow> aggregate(const std::vector<InstanceResult>& results, bool with_cuts) {
  std::vector<BenchRow> rows;
  std::vector<double> time_sum;
  std::vector<Rational> gap_sum;
  for (const auto& r : results) {
    const Job& job = r.job;
    const bool same_cell = !rows.empty() && rows.back().instance == job.instance &&
                           rows.back().n == job.graph.n() && rows.back().p == job.p;
    if (!same_cell) {
      BenchRow row;
      row.instance = job.instance;
      row.n = job.graph.n();
      row.p = job.p;
      row.with_cuts = with_cuts;
      if (job.graph.n() >= 2 && !job.instance.empty()) row.density_percent = density_percent(job.graph);
      rows.push_back(row);
      time_sum.push_back(0.0);
      gap_sum.emplace_back(0);
    }
    BenchRow& row = rows.back();
    if (r.report.status == SolveStatus::optimal) {
      ++row.solved;
    } else {
      ++row.unsolved;
      gap_sum.back() += r.report.gap;
    }
    time_sum.back() += r.report.wall_time;
    row.preprocess_s += r.report.preprocess_time;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    const auto total = static_cast<double>(row.solved + row.unsolved);
    row.preprocess_s /= total;
    if (row.unsolved == 0) row.time_s = time_sum[i] / total;
    else row.gap = gap_sum[i] / static_cast<std::int64_t>(row.unsolved);
  }
  return rows;
}

namespace {

std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

}  // namespace

std::string percent2(const Rational& r) {
  // hundredths of a percent, half up
  const __int128 num = static_cast<__int128>(r.numerator()) * 20000 + r.denominator();
  const auto hundredths = static_cast<std::int64_t>(num / (2 * static_cast<__int128>(r.denominator())));
  std::ostringstream os;
  os << hundredths / 100 << '.' << std::setw(2) << std::setfill('0') << hundredths % 100;
  return os.str();
}

std::string format_p(const std::optional<Rational>& p) {
  if (!p) return "";
  std::ostringstream os;
  os << std::setprecision(6) << to_double(*p);
  return os.str();
}

std::string format_time(const BenchRow& row) {
  std::string out = row.time_s ? fixed2(*row.time_s) : std::string(row.unsolved, '*');
  if (row.with_cuts) out += " (" + fixed2(row.preprocess_s) + ")";
  return out;
}

std::string format_gap(const BenchRow& row) { return row.gap ? percent2(*row.gap) : "---"; }

std::string render_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "Instance" << std::right << std::setw(6) << "n"
     << std::setw(8) << "p" << std::setw(12) << "Density[%]" << std::setw(20) << "Time[s]"
     << std::setw(10) << "Gap[%]" << '\n';
  for (const auto& row : rows) {
    os << std::left << std::setw(16) << (row.instance.empty() ? "-" : row.instance) << std::right
       << std::setw(6) << row.n << std::setw(8) << (row.p ? format_p(row.p) : "-") << std::setw(12)
       << (row.density_percent.empty() ? "-" : row.density_percent) << std::setw(20)
       << format_time(row) << std::setw(10) << format_gap(row) << '\n';
  }
  return os.str();
}

std::string render_csv(const std::vector<BenchRow>& rows,
                       const std::vector<InstanceResult>& results) {
  std::ostringstream os;
  os << "kind,instance,n,p,seed,density_percent,time_s,preprocess_s,gap_percent,status,lower,upper,"
        "nodes,solved,unsolved\n";
  for (const auto& row : rows) {
    os << "cell," << row.instance << ',' << row.n << ',' << format_p(row.p) << ",,"
       << row.density_percent << ',' << (row.time_s ? fixed2(*row.time_s) : "") << ','
       << (row.with_cuts ? fixed2(row.preprocess_s) : "") << ','
       << (row.gap ? percent2(*row.gap) : "") << ','
       << (row.unsolved == 0 ? "optimal" : "unsolved") << ",,,," << row.solved << ','
       << row.unsolved << '\n';
  }
  for (const auto& r : results) {
    const auto& rep = r.report;
    const bool done = rep.status == SolveStatus::optimal;
    os << "instance," << r.job.instance << ',' << r.job.graph.n() << ',' << format_p(r.job.p) << ','
       << (r.job.instance.empty() ? std::to_string(r.job.seed) : "") << ','
       << (r.job.graph.n() >= 2 ? density_percent(r.job.graph) : "") << ','
       << fixed2(rep.wall_time) << ',' << fixed2(rep.preprocess_time) << ','
       << (done ? "" : percent2(rep.gap)) << ',' << status_name(rep.status) << ','
       << rep.lower_bound << ',' << rep.upper_bound << ',' << rep.nodes << ','
       << (done ? 1 : 0) << ',' << (done ? 0 : 1) << '\n';
  }
  return os.str();
}

}  // namespace pair014::bench
