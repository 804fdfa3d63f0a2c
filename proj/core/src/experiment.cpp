#include "adaw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "adaw/metrics.hpp"

namespace adaw {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean for " + std::string(key) + ": '" + std::string(text) + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "DTLZ5(2,10)" becomes "DTLZ5_2_10".
std::string safe_name(std::string_view problem) {
  std::string stem;
  for (char c : problem) {
    const bool safe = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
    stem += safe ? c : '_';
  }
  while (!stem.empty() && stem.back() == '_') stem.pop_back();
  return stem;
}

struct RunOutput {
  ResultRow row;
  std::vector<ObjectiveVector> objectives;
};

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "moead") return Algorithm::kMoead;
  if (name == "adaw") return Algorithm::kAdaw;
  throw ConfigError("unknown algorithm: " + std::string(name) + " (expected moead or adaw)");
}

std::string_view algorithm_name(Algorithm algorithm) {
  return algorithm == Algorithm::kMoead ? "moead" : "adaw";
}

std::size_t default_population(std::size_t num_objectives) {
  if (num_objectives <= 2) return 100;
  if (num_objectives == 3) return 105;
  return 220;
}

std::size_t default_evaluations(std::size_t num_objectives) {
  if (num_objectives <= 2) return 25000;
  if (num_objectives == 3) return 30000;
  return 100000;
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  if (population != 0 && evaluations != 0 && evaluations < population) {
    throw ConfigError("evaluation budget must be at least the population size");
  }
}

void apply_config_text(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key == "problem") {
      cfg.problem = value;
    } else if (key == "algo" || key == "algorithm") {
      cfg.algorithm = parse_algorithm(value);
    } else if (key == "runs") {
      cfg.runs = parse_number<std::size_t>(key, value);
    } else if (key == "evals") {
      cfg.evaluations = parse_number<std::size_t>(key, value);
    } else if (key == "pop") {
      cfg.population = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      cfg.seed_base = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
      cfg.output_dir = value;
    } else if (key == "front_cache") {
      cfg.front_cache = value;
    } else if (key == "front_size") {
      cfg.front_size = parse_number<std::size_t>(key, value);
    } else if (key == "jobs") {
      cfg.jobs = parse_number<std::size_t>(key, value);
    } else if (key == "timing") {
      cfg.record_time = parse_bool(key, value);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / n);
  s.median = median(std::vector<double>(values.begin(), values.end()));
  return s;
}

Summary aggregate(std::span<const ResultRow> rows) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& r : rows) values.push_back(r.igd);
  return summarize(values);
}

std::map<std::pair<std::string, std::string>, Summary> aggregate_groups(
    std::span<const ResultRow> rows) {
  std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
  for (const auto& r : rows) groups[{r.problem, r.algorithm}].push_back(r.igd);
  std::map<std::pair<std::string, std::string>, Summary> out;
  for (const auto& [key, values] : groups) out[key] = summarize(values);
  return out;
}

std::string file_stem(std::string_view problem, Algorithm algorithm) {
  return safe_name(problem) + "_" + std::string(algorithm_name(algorithm));
}

std::string format_scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << "problem,algorithm,run,seed,igd,evals,wall_ms\n";
  for (const auto& r : rows) {
    out << csv_field(r.problem) << ',' << csv_field(r.algorithm) << ',' << r.run << ',' << r.seed
        << ',' << format_scientific(r.igd) << ',' << r.evaluations << ','
        << format_scientific(r.wall_ms) << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (trim(line) != "problem,algorithm,run,seed,igd,evals,wall_ms") {
    throw ConfigError("unexpected CSV header: " + line);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 7 fields");
    ResultRow r;
    r.problem = f[0];
    r.algorithm = f[1];
    r.run = parse_number<std::size_t>("run", f[2]);
    r.seed = parse_number<std::uint64_t>("seed", f[3]);
    r.igd = parse_number<double>("igd", f[4]);
    r.evaluations = parse_number<std::size_t>("evals", f[5]);
    r.wall_ms = parse_number<double>("wall_ms", f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_points(std::ostream& out, std::span<const ObjectiveVector> points,
                  std::string_view header) {
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << format_exact(p[i]);
    }
    out << '\n';
  }
}

std::vector<ObjectiveVector> read_points(std::istream& in) {
  std::vector<ObjectiveVector> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream fields(text);
    ObjectiveVector p;
    std::string token;
    while (fields >> token) p.push_back(parse_number<double>("point", token));
    if (!out.empty() && p.size() != out.front().size()) {
      throw ConfigError("ragged point file");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ObjectiveVector> cached_front(const Problem& problem, std::size_t n,
                                          const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return sample_front(problem, n);
  const auto path =
      cache_dir / (safe_name(problem.name) + "_front_" + std::to_string(n) + ".txt");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    auto pts = read_points(in);
    if (!pts.empty()) return pts;
  }
  auto pts = sample_front(problem, n);
  std::filesystem::create_directories(cache_dir);
  {
    std::ofstream out(path);
    write_points(out, pts, "reference front " + problem.name);
  }
  return pts;
}

ExperimentOutcome run_experiment_full(const ExperimentConfig& cfg) {
  cfg.validate();
  const Problem problem = make_problem(cfg.problem);
  const std::size_t m = problem.num_objectives;
  const std::size_t population = cfg.population ? cfg.population : default_population(m);
  const std::size_t evaluations = cfg.evaluations ? cfg.evaluations : default_evaluations(m);
  if (evaluations < population) throw ConfigError("evaluation budget below population size");
  const std::size_t front_size = cfg.front_size ? cfg.front_size : default_front_size(m);

  std::filesystem::path cache = cfg.front_cache;
  if (cache.empty() && !cfg.output_dir.empty()) cache = cfg.output_dir / "fronts";
  const auto front = cached_front(problem, front_size, cache);

  // Fail on bad parameters before spawning workers.
  AlgorithmParams base = AlgorithmParams::defaults(problem, population, evaluations,
                                                   cfg.algorithm == Algorithm::kAdaw, cfg.seed_base);
  base.validate();
  if (!lattice_divisions(m, population)) {
    throw ConfigError("population size " + std::to_string(population) +
                      " matches no simplex lattice for " + std::to_string(m) + " objectives");
  }

  std::vector<RunOutput> outputs(cfg.runs);
  auto execute = [&](std::size_t i) {
    AlgorithmParams params = base;
    params.seed = cfg.seed_base + i;
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = run(problem, params);
    const auto stop = std::chrono::steady_clock::now();
    RunOutput& o = outputs[i];
    for (const auto& s : result.final_population) o.objectives.push_back(s.f);
    o.row.problem = problem.name;
    o.row.algorithm = std::string(algorithm_name(cfg.algorithm));
    o.row.run = i;
    o.row.seed = params.seed;
    o.row.igd = igd(front, o.objectives);
    o.row.evaluations = result.evaluations;
    o.row.wall_ms = cfg.record_time
                        ? std::chrono::duration<double, std::milli>(stop - start).count()
                        : 0.0;
  };

  const std::size_t workers = std::min(cfg.jobs, cfg.runs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < cfg.runs; ++i) execute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.runs; i = next++) execute(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  ExperimentOutcome outcome;
  for (auto& o : outputs) outcome.rows.push_back(o.row);

  // Median run: the lower middle of the IGD ranking, ties to the lower index.
  std::vector<std::size_t> order(cfg.runs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return outcome.rows[a].igd < outcome.rows[b].igd;
  });
  outcome.median_run = order[(cfg.runs - 1) / 2];
  outcome.median_solutions = std::move(outputs[outcome.median_run].objectives);

  if (!cfg.output_dir.empty()) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::string stem = file_stem(problem.name, cfg.algorithm);
    {
      std::ofstream csv(cfg.output_dir / (stem + ".csv"));
      write_csv(csv, outcome.rows);
    }
    const auto& mr = outcome.rows[outcome.median_run];
    std::ofstream dump(cfg.output_dir / (stem + "_median.txt"));
    write_points(dump, outcome.median_solutions,
                 "problem=" + problem.name + " algorithm=" + mr.algorithm +
                     " run=" + std::to_string(mr.run) + " seed=" + std::to_string(mr.seed) +
                     " igd=" + format_scientific(mr.igd));
  }
  return outcome;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  return run_experiment_full(cfg).rows;
}

}  // namespace adaw
