// pair014: generate instances, build/export the pairwise colouring MILP,
// solve it with the internal branch and bound, verify external solutions,
// and run benchmark grids.
//
// Exit codes: 0 success / optimal, 2 stopped by a limit, 1 error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pair014/bench.hpp"
#include "pair014/cuts.hpp"
#include "pair014/dimacs.hpp"
#include "pair014/export.hpp"
#include "pair014/formulation.hpp"
#include "pair014/generate.hpp"
#include "pair014/solver.hpp"

namespace fs = std::filesystem;
using namespace pair014;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLimit = 2;

struct ModelFlags {
  bool cuts = false;
  bool truncate = false;
  std::int64_t cut_budget = 1'000'000;

  ModelOptions options() const {
    ModelOptions o;
    o.use_cuts = cuts;
    o.tangent_range = truncate ? TangentRange::truncated : TangentRange::full;
    o.cut_node_budget = cut_budget;
    return o;
  }
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_flag("--cuts", flags.cuts, "Add the per-vertex independent-set cuts");
  cmd->add_flag("--truncate", flags.truncate,
                "Stop tangent rows at i = |I_v| - 1 (requires --cuts)");
  cmd->add_option("--cut-budget", flags.cut_budget, "Node budget per vertex for |I_v|")
      ->check(CLI::PositiveNumber);
}

Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  Graph g = read_dimacs_file(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return g;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s;
  return os.str();
}

void print_stats(const Model& m) {
  const auto& s = m.stats;
  std::cout << "vertices        " << m.n() << '\n'
            << "edges           " << m.graph.edge_count() << '\n'
            << "pair variables  " << s.pair_vars << '\n'
            << "f variables     " << s.fv_vars << '\n'
            << "triangle rows   " << s.triangle_rows << '\n'
            << "tangent rows    " << s.tangent_rows << '\n'
            << "cut rows        " << s.cut_rows;
  if (m.options.use_cuts) std::cout << " [" << seconds(s.cut_preprocess_seconds) << " s]";
  std::cout << '\n';
  if (m.options.use_cuts) {
    const auto inexact = std::count(m.independent_set_exact.begin(),
                                    m.independent_set_exact.end(), false);
    if (inexact > 0) std::cout << "|I_v| bounds not proved exact: " << inexact << '\n';
  }
}

std::string manifest_path(const std::string& model_path) { return model_path + ".json"; }

int cmd_gen(int n, const std::string& p_text, std::uint64_t seed, int count, const fs::path& dir) {
  const Rational p = parse_probability(p_text);
  fs::create_directories(dir);
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    const Graph g = gen_gnp(n, p, s);
    const fs::path file = dir / ("gnp_n" + std::to_string(n) + "_p" + p_text + "_s" +
                                 std::to_string(s) + ".col");
    std::ostringstream text;
    text << "c G(n,p) n=" << n << " p=" << p_text << " seed=" << s << " rng=splitmix64\n"
         << write_dimacs(g);
    write_file(file, text.str());
    std::cout << file.string() << ' ' << g.n() << ' ' << g.edge_count() << ' '
              << (g.n() >= 2 ? density_percent(g) : std::string("-")) << '\n';
  }
  return kExitOk;
}

int cmd_build(const std::string& graph_path, const ModelFlags& flags, const std::string& out,
              const std::string& format) {
  const Graph g = load_graph(graph_path);
  const Model m = build_model(g, flags.options());
  print_stats(m);
  if (out.empty()) return kExitOk;

  write_file(out, format == "mps" ? write_mps(m) : write_lp(m));
  nlohmann::json manifest = {
      {"graph", fs::absolute(graph_path).string()},
      {"cuts", flags.cuts},
      {"tangent_range", flags.truncate ? "truncated" : "full"},
      {"cut_node_budget", flags.cut_budget},
      {"format", format},
  };
  if (flags.cuts) manifest["independent_set_sizes"] = m.independent_set_sizes;
  write_file(manifest_path(out), manifest.dump(2) + "\n");
  std::cout << "wrote " << out << " and " << manifest_path(out) << '\n';
  return kExitOk;
}

void print_report(const SolveReport& r) {
  std::cout << "status          " << status_name(r.status) << '\n'
            << "lower bound     " << r.lower_bound << '\n'
            << "upper bound     " << r.upper_bound << '\n'
            << "gap[%]          "
            << (r.status == SolveStatus::optimal ? std::string("---") : bench::percent2(r.gap))
            << '\n'
            << "time[s]         " << seconds(r.wall_time);
  if (r.preprocess_time > 0) std::cout << " (" << seconds(r.preprocess_time) << ")";
  std::cout << '\n' << "nodes           " << r.nodes << '\n' << "colouring      ";
  for (int c : r.incumbent.colors) std::cout << ' ' << c;
  std::cout << '\n';
}

int cmd_solve(const std::string& graph_path, const SolveConfig& cfg, const ModelFlags& flags,
              const std::string& sol_out) {
  const Graph g = load_graph(graph_path);
  const SolveReport r = solve(g, cfg);
  print_report(r);
  if (!sol_out.empty()) {
    const Model m = build_model(g, flags.options());
    write_file(sol_out, write_sol(m, coloring_to_x(g, m.index, r.incumbent)));
    std::cout << "wrote " << sol_out << '\n';
  }
  return r.status == SolveStatus::optimal ? kExitOk : kExitLimit;
}

int cmd_verify(std::string graph_path, ModelFlags flags, const std::string& manifest,
               const std::string& sol_path, double tol) {
  if (!manifest.empty()) {
    const auto j = nlohmann::json::parse(read_file(manifest));
    graph_path = j.at("graph").get<std::string>();
    flags.cuts = j.value("cuts", false);
    flags.truncate = j.value("tangent_range", std::string("full")) == "truncated";
    flags.cut_budget = j.value("cut_node_budget", flags.cut_budget);
  }
  if (graph_path.empty()) throw Error("verify: give a graph file or --manifest");
  const Model m = build_model(load_graph(graph_path), flags.options());
  const auto rep = verify_solution(m, parse_sol(read_file(sol_path)), tol);
  for (const auto& issue : rep.issues)
    std::cout << problem_name(issue.problem) << ": " << issue.detail << '\n';
  if (!rep.ok()) {
    std::cout << "REJECTED\n";
    return kExitError;
  }
  std::cout << "verified: " << rep.colors << " colours (objective "
            << to_string(rep.recomputed_objective) << ")\n";
  return kExitOk;
}

std::vector<Rational> parse_ps(const std::vector<std::string>& texts) {
  std::vector<Rational> ps;
  for (const auto& t : texts) ps.push_back(parse_probability(t));
  return ps;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<std::string>& ps, std::uint64_t seed,
              int count, const std::vector<std::string>& files, const SolveConfig& cfg,
              const std::string& csv_out) {
  std::vector<bench::Job> jobs;
  if (!ns.empty() && !ps.empty()) jobs = bench::grid_jobs(ns, parse_ps(ps), seed, count);
  for (const auto& f : files)
    jobs.push_back({fs::path(f).stem().string(), std::nullopt, 0, load_graph(f)});

  const auto results = bench::run(jobs, cfg);
  const auto rows = bench::aggregate(results, cfg.use_cuts);
  std::cout << bench::render_table(rows);
  const std::string csv = bench::render_csv(rows, results);
  if (!csv_out.empty()) write_file(csv_out, csv);
  else std::cout << '\n' << csv;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise MILP formulation for vertex colouring"};
  app.require_subcommand(1);

  // gen
  int gen_n = 0;
  std::string gen_p;
  std::uint64_t gen_seed = 0;
  int gen_count = 1;
  std::string gen_dir;
  auto* gen = app.add_subcommand("gen", "Write G(n,p) instances in DIMACS format");
  gen->add_option("n", gen_n, "Vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("p", gen_p, "Edge probability (decimal or fraction)")->required();
  gen->add_option("seed", gen_seed, "First seed")->required();
  gen->add_option("count", gen_count, "Number of instances")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("out_dir", gen_dir, "Output directory")->required();

  // build / export
  std::string model_graph;
  std::string model_out;
  std::string model_format = "lp";
  ModelFlags model_flags;
  auto* build = app.add_subcommand("build", "Build the model and print its statistics");
  auto* exporter = app.add_subcommand("export", "Build the model and write it as LP or MPS");
  for (auto* cmd : {build, exporter}) {
    cmd->add_option("graph", model_graph, "DIMACS graph file")->required()->check(CLI::ExistingFile);
    add_model_flags(cmd, model_flags);
    cmd->add_option("--format", model_format, "lp or mps")
        ->check(CLI::IsMember({"lp", "mps"}));
  }
  build->add_option("-o,--out", model_out, "Also write the model here");
  exporter->add_option("-o,--out", model_out, "Model file")->required();

  // solve
  std::string solve_graph;
  std::string solve_sol;
  std::string solve_rule = "common-non-neighbors";
  std::int64_t node_limit = 0;
  SolveConfig cfg;
  ModelFlags solve_flags;
  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--time-limit", cfg.time_limit, "Seconds per instance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-limit", node_limit, "Branch-and-bound node limit (0 = none)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--cuts", solve_flags.cuts, "Use |I_v| bounds on class sizes");
    cmd->add_option("--cut-budget", solve_flags.cut_budget, "Node budget per vertex for |I_v|")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rule", solve_rule, "Branching rule")
        ->check(CLI::IsMember({"common-non-neighbors", "lexicographic"}));
  };
  auto* solver_cmd = app.add_subcommand("solve", "Solve with the internal branch and bound");
  solver_cmd->add_option("graph", solve_graph, "DIMACS graph file")->required()->check(CLI::ExistingFile);
  solver_cmd->add_option("--sol", solve_sol, "Write the incumbent as a solution file");
  add_solver_flags(solver_cmd);

  // verify
  std::string verify_graph;
  std::string verify_manifest;
  std::string verify_sol;
  double verify_tol = 1e-6;
  ModelFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check a solver solution file against the model");
  verify->add_option("--manifest", verify_manifest, "Manifest written by export")
      ->check(CLI::ExistingFile);
  verify->add_option("--graph", verify_graph, "DIMACS graph file (instead of --manifest)")
      ->check(CLI::ExistingFile);
  verify->add_option("solution", verify_sol, "Solution file")->required()->check(CLI::ExistingFile);
  verify->add_option("--tol", verify_tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  add_model_flags(verify, verify_flags);

  // bench
  std::vector<int> bench_ns;
  std::vector<std::string> bench_ps;
  std::uint64_t bench_seed = 0;
  int bench_count = 5;
  std::vector<std::string> bench_files;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a grid of random instances and/or files");
  bench_cmd->add_option("--n", bench_ns, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--p", bench_ps, "Edge probabilities")->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "First seed per cell");
  bench_cmd->add_option("--count", bench_count, "Instances per cell")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--csv", bench_csv, "Write CSV here instead of stdout");
  bench_cmd->add_option("files", bench_files, "DIMACS instance files")->check(CLI::ExistingFile);
  add_solver_flags(bench_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.use_cuts = solve_flags.cuts;
    cfg.cut_node_budget = solve_flags.cut_budget;
    if (node_limit > 0) cfg.node_limit = node_limit;
    cfg.rule = *parse_rule(solve_rule);

    if (*gen) return cmd_gen(gen_n, gen_p, gen_seed, gen_count, gen_dir);
    if (*build) return cmd_build(model_graph, model_flags, model_out, model_format);
    if (*exporter) return cmd_build(model_graph, model_flags, model_out, model_format);
    if (*solver_cmd) return cmd_solve(solve_graph, cfg, solve_flags, solve_sol);
    if (*verify)
      return cmd_verify(verify_graph, verify_flags, verify_manifest, verify_sol, verify_tol);
    if (*bench_cmd)
      return cmd_bench(bench_ns, bench_ps, bench_seed, bench_count, bench_files, cfg, bench_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
