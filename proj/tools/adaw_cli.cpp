// Command-line harness: replicated runs, reference-front export and
// result aggregation.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "adaw/experiment.hpp"
#include "adaw/problems.hpp"

namespace {

int run_command(const adaw::ExperimentConfig& cfg) {
  const auto outcome = adaw::run_experiment_full(cfg);
  for (const auto& row : outcome.rows) {
    std::cout << row.problem << ' ' << row.algorithm << " run " << row.run << " seed " << row.seed
              << " igd " << adaw::format_scientific(row.igd) << " evals " << row.evaluations
              << '\n';
  }
  const auto s = adaw::aggregate(outcome.rows);
  std::cout << "mean " << adaw::format_scientific(s.mean) << " sd "
            << adaw::format_scientific(s.sd) << " median " << adaw::format_scientific(s.median)
            << " (median run " << outcome.median_run << ")\n";
  return 0;
}

int fronts_command(const std::string& problem_name, std::size_t n, const std::string& out_path) {
  const auto problem = adaw::make_problem(problem_name);
  const std::size_t size = n ? n : adaw::default_front_size(problem.num_objectives);
  const auto pts = adaw::sample_front(problem, size);
  const std::string header = "reference front " + problem.name;
  if (out_path.empty() || out_path == "-") {
    adaw::write_points(std::cout, pts, header);
  } else {
    std::ofstream out(out_path);
    if (!out) throw adaw::ConfigError("cannot open " + out_path);
    adaw::write_points(out, pts, header);
  }
  std::cerr << pts.size() << " points\n";
  return 0;
}

int aggregate_command(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw adaw::ConfigError("cannot open " + in_path);
  const auto rows = adaw::read_csv(in);
  if (rows.empty()) throw adaw::ConfigError("no rows in " + in_path);
  std::cout << "problem,algorithm,runs,mean,sd,median\n";
  for (const auto& [key, s] : adaw::aggregate_groups(rows)) {
    std::cout << key.first << ',' << key.second << ',' << s.count << ','
              << adaw::format_scientific(s.mean) << ',' << adaw::format_scientific(s.sd) << ','
              << adaw::format_scientific(s.median) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition-based multi-objective optimization with adaptive weights"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Replicated optimization runs scored by IGD");
  std::string config_path, problem, algo, out_dir, front_cache;
  std::size_t runs = 0, evals = 0, pop = 0, front_size = 0, jobs = 0;
  std::uint64_t seed = 0;
  bool no_timing = false;
  run->add_option("--config", config_path, "key=value file; flags override it");
  auto* o_problem = run->add_option("--problem", problem, "Benchmark problem name");
  auto* o_algo = run->add_option("--algo", algo, "moead or adaw");
  auto* o_runs = run->add_option("--runs", runs, "Independent runs (default 30)");
  auto* o_evals = run->add_option("--evals", evals, "Evaluation budget per run");
  auto* o_pop = run->add_option("--pop", pop, "Population size");
  auto* o_seed = run->add_option("--seed", seed, "Seed of run 0; run i uses seed + i");
  auto* o_out = run->add_option("--out", out_dir, "Output directory");
  auto* o_cache = run->add_option("--front-cache", front_cache, "Reference front cache directory");
  auto* o_front = run->add_option("--front-size", front_size, "Reference front size");
  auto* o_jobs = run->add_option("--jobs", jobs, "Runs executed in parallel");
  run->add_flag("--no-timing", no_timing, "Write wall_ms as 0 so output is byte-stable");

  auto* fronts = app.add_subcommand("fronts", "Export a reference Pareto-front sample");
  std::string fronts_problem, fronts_out;
  std::size_t fronts_n = 0;
  fronts->add_option("--problem", fronts_problem, "Benchmark problem name")->required();
  fronts->add_option("--n", fronts_n, "Number of points (default by objective count)");
  fronts->add_option("--out", fronts_out, "Output file ('-' for stdout)");

  auto* agg = app.add_subcommand("aggregate", "Mean, SD and median IGD of a results CSV");
  std::string agg_in;
  agg->add_option("--in", agg_in, "Results CSV")->required();

  auto* list = app.add_subcommand("problems", "List benchmark problem names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) {
      adaw::ExperimentConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw adaw::ConfigError("cannot open " + config_path);
        adaw::apply_config_text(cfg, in);
      }
      if (o_problem->count()) cfg.problem = problem;
      if (o_algo->count()) cfg.algorithm = adaw::parse_algorithm(algo);
      if (o_runs->count()) cfg.runs = runs;
      if (o_evals->count()) cfg.evaluations = evals;
      if (o_pop->count()) cfg.population = pop;
      if (o_seed->count()) cfg.seed_base = seed;
      if (o_out->count()) cfg.output_dir = out_dir;
      if (o_cache->count()) cfg.front_cache = front_cache;
      if (o_front->count()) cfg.front_size = front_size;
      if (o_jobs->count()) cfg.jobs = jobs;
      if (no_timing) cfg.record_time = false;
      if (cfg.problem.empty()) throw adaw::ConfigError("--problem is required");
      return run_command(cfg);
    }
    if (*fronts) return fronts_command(fronts_problem, fronts_n, fronts_out);
    if (*agg) return aggregate_command(agg_in);
    if (*list) {
      for (const auto& name : adaw::problem_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const adaw::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
