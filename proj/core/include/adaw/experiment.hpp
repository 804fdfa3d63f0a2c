#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adaw/objective.hpp"
#include "adaw/optimizer.hpp"
#include "adaw/problems.hpp"

namespace adaw {

enum class Algorithm { kMoead, kAdaw };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

/// Population sizes 100/105/220 and budgets 25000/30000/100000 evaluations
/// for two, three and many objectives.
std::size_t default_population(std::size_t num_objectives);
std::size_t default_evaluations(std::size_t num_objectives);

struct ExperimentConfig {
  std::string problem;
  Algorithm algorithm = Algorithm::kAdaw;
  std::size_t runs = 30;
  std::size_t evaluations = 0;  ///< 0 selects the default for the problem
  std::size_t population = 0;   ///< 0 selects the default for the problem
  std::uint64_t seed_base = 1;
  std::filesystem::path output_dir;   ///< empty: nothing written
  std::filesystem::path front_cache;  ///< empty: <output_dir>/fronts
  std::size_t front_size = 0;         ///< 0 selects default_front_size
  std::size_t jobs = 1;
  bool record_time = true;  ///< false writes wall_ms as 0 for byte-stable output

  void validate() const;
};

/// Applies `key=value` lines (blank lines and `#` comments ignored). Keys
/// mirror the CLI flags: problem, algo, runs, evals, pop, seed, out,
/// front_cache, front_size, jobs, timing. Throws ConfigError on unknown keys
/// or malformed values.
void apply_config_text(ExperimentConfig& cfg, std::istream& in);

struct ResultRow {
  std::string problem;
  std::string algorithm;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double igd = 0.0;
  std::size_t evaluations = 0;
  double wall_ms = 0.0;
};

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  ///< population standard deviation
  double median = 0.0;
};

Summary summarize(std::span<const double> values);
Summary aggregate(std::span<const ResultRow> rows);

/// Groups rows by (problem, algorithm) and summarizes each group.
std::map<std::pair<std::string, std::string>, Summary> aggregate_groups(
    std::span<const ResultRow> rows);

struct ExperimentOutcome {
  std::vector<ResultRow> rows;
  std::size_t median_run = 0;  ///< run index holding the median IGD
  std::vector<ObjectiveVector> median_solutions;
};

/// Executes cfg.runs independent runs seeded seed_base + i, scores each
/// final population by IGD against the (cached) reference front, and when
/// an output directory is set writes <stem>.csv and <stem>_median.txt
/// there, <stem> being "<problem>_<algo>" with unsafe characters replaced.
ExperimentOutcome run_experiment_full(const ExperimentConfig& cfg);
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

std::string file_stem(std::string_view problem, Algorithm algorithm);

/// Scientific notation with six significant digits.
std::string format_scientific(double v);

/// Header `problem,algorithm,run,seed,igd,evals,wall_ms`, one row per line.
void write_csv(std::ostream& out, std::span<const ResultRow> rows);
std::vector<ResultRow> read_csv(std::istream& in);

/// Whitespace-separated objective values, one point per line, after a
/// `#`-prefixed header line (omitted when `header` is empty).
void write_points(std::ostream& out, std::span<const ObjectiveVector> points,
                  std::string_view header = {});
std::vector<ObjectiveVector> read_points(std::istream& in);

/// Reference front for `problem`, generated once and stored under
/// `cache_dir`; later calls read the stored file. An empty `cache_dir`
/// disables caching.
std::vector<ObjectiveVector> cached_front(const Problem& problem, std::size_t n,
                                          const std::filesystem::path& cache_dir);

}  // namespace adaw
