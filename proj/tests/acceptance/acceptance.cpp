// Acceptance checks A1-A10: one PASS/FAIL line per criterion.
//
//   adaw_acceptance [--fronts DIR] [--only A1,A7,...]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adaw/archive.hpp"
#include "adaw/experiment.hpp"
#include "adaw/metrics.hpp"
#include "adaw/optimizer.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kRuns = 10;

struct Outcome {
  double median = 0.0;
  double seconds = 0.0;
};

fs::path g_fronts = "fronts";
std::map<std::pair<std::string, adaw::Algorithm>, Outcome> g_cache;

Outcome median_igd(const std::string& problem, adaw::Algorithm algo) {
  const auto key = std::make_pair(problem, algo);
  if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  adaw::ExperimentConfig cfg;
  cfg.problem = problem;
  cfg.algorithm = algo;
  cfg.runs = kRuns;
  cfg.seed_base = 1;
  cfg.front_cache = g_fronts;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = adaw::run_experiment(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  Outcome out{adaw::aggregate(rows).median, std::chrono::duration<double>(t1 - t0).count()};
  g_cache[key] = out;
  return out;
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict igd_at_most(const std::string& problem, adaw::Algorithm algo, double bound,
                    double time_limit = 0.0) {
  const auto o = median_igd(problem, algo);
  bool pass = o.median <= bound;
  std::string detail = problem + " " + std::string(adaw::algorithm_name(algo)) +
                       fmt(" median IGD %.4e (bound %.3e), %.1f s", o.median, bound, o.seconds);
  if (time_limit > 0.0) {
    pass = pass && o.seconds < time_limit;
    detail += fmt(" (limit %.0f s)", time_limit);
  }
  return {pass, detail};
}

Verdict ordering() {
  bool pass = true;
  std::string detail;
  for (const char* p : {"IDTLZ2", "DTLZ7", "DTLZ5", "SCH1", "SCH2"}) {
    const double a = median_igd(p, adaw::Algorithm::kAdaw).median;
    const double m = median_igd(p, adaw::Algorithm::kMoead).median;
    pass = pass && a < m;
    detail += std::string(p) + fmt(" %.3e<%.3e ", a, m);
  }
  return {pass, detail};
}

// A9 ------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool loop_invariants(std::string& why) {
  for (const char* name : {"DTLZ7", "SCH2", "IDTLZ2", "ZDT3"}) {
    const auto problem = adaw::make_problem(name);
    const std::size_t N = adaw::default_population(problem.num_objectives);
    auto params = adaw::AlgorithmParams::defaults(problem, N, 100 * N, true, 3);
    adaw::Optimizer opt(problem, params);
    bool monotone = true;
    opt.set_replacement_hook([&](std::size_t, double old_g, double new_g) {
      if (new_g > old_g) monotone = false;
    });
    while (!opt.finished()) {
      const std::size_t rounds = opt.adaptations().size();
      opt.step();
      if (!monotone) return why = std::string(name) + ": scalarizing value increased", false;
      if (opt.population().size() != N) return why = std::string(name) + ": |P| != N", false;
      if (opt.adaptations().size() > rounds) {
        for (const auto& sp : opt.population())
          if (!adaw::on_simplex(sp.weight))
            return why = std::string(name) + ": weight off simplex", false;
      }
      if (!oracle::mutually_nondominated(opt.archive().objectives()))
        return why = std::string(name) + ": archive dominated member", false;
    }
    if (opt.adaptations().empty()) return why = std::string(name) + ": no adaptation ran", false;
  }
  return true;
}

bool archive_fuzz(std::string& why) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    adaw::Archive a(30);
    for (int t = 0; t < 500; ++t) {
      adaw::ObjectiveVector f{u(rng), u(rng), u(rng)};
      a.insert({{}, f, 0});
      if (!oracle::mutually_nondominated(a.objectives())) return why = "after insert", false;
      if (a.over_capacity()) {
        a.maintain(3);
        if (!oracle::mutually_nondominated(a.objectives()) || a.over_capacity())
          return why = "after maintain", false;
      }
    }
  }
  return true;
}

bool oracle_match(std::string& why) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const std::size_t m = 2 + t % 4;
    auto ref = oracle::random_points(rng, 1 + t % 50, m);
    auto s = oracle::random_points(rng, 1 + (t * 7) % 50, m);
    if (adaw::igd(ref, s) != oracle::igd(ref, s)) return why = "igd mismatch", false;
    auto pts = oracle::random_points(rng, 2 + t % 49, m);
    const double r = oracle::niche_radius(pts, m);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (adaw::crowding_degree(i, pts, r) != oracle::crowding(i, pts, r))
        return why = "crowding mismatch", false;
  }
  return true;
}

bool determinism(std::string& why) {
  const auto base = fs::temp_directory_path() / "adaw_acceptance_determinism";
  fs::remove_all(base);
  for (const char* sub : {"a", "b"}) {
    adaw::ExperimentConfig cfg;
    cfg.problem = "DTLZ7";
    cfg.runs = 3;
    cfg.evaluations = 10000;
    cfg.record_time = false;
    cfg.output_dir = base / sub;
    cfg.front_cache = g_fronts;
    adaw::run_experiment(cfg);
  }
  for (const char* file : {"DTLZ7_adaw.csv", "DTLZ7_adaw_median.txt"}) {
    const auto a = slurp(base / "a" / file);
    if (a.empty() || a != slurp(base / "b" / file)) return why = std::string(file) + " differs", false;
  }
  return true;
}

Verdict property_suite() {
  const std::vector<std::pair<const char*, std::function<bool(std::string&)>>> checks{
      {"loop invariants", loop_invariants},
      {"archive fuzz", archive_fuzz},
      {"brute-force oracles", oracle_match},
      {"determinism", determinism},
  };
  std::string detail;
  bool pass = true;
  for (const auto& [name, check] : checks) {
    std::string why;
    const bool ok = check(why);
    pass = pass && ok;
    detail += std::string(name) + (ok ? " ok; " : " FAILED (" + why + "); ");
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--fronts") {
      g_fronts = argv[i + 1];
    } else if (flag == "--only") {
      std::stringstream ss(argv[i + 1]);
      for (std::string id; std::getline(ss, id, ',');) only.insert(id);
    }
  }

  using A = adaw::Algorithm;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"A1", [] { return igd_at_most("DTLZ2", A::kAdaw, 1.03e-1, 30.0); }},
      {"A2", [] { return igd_at_most("ZDT3", A::kAdaw, 9.7e-3); }},
      {"A3", [] { return igd_at_most("IDTLZ2", A::kAdaw, 1.01e-1); }},
      {"A4", [] { return igd_at_most("DTLZ7", A::kAdaw, 1.06e-1); }},
      {"A5", [] { return igd_at_most("DTLZ5", A::kAdaw, 8.0e-3); }},
      {"A6", [] { return igd_at_most("SCH1", A::kAdaw, 3.5e-2); }},
      {"A7", [] { return igd_at_most("DTLZ2", A::kMoead, 1.03e-1); }},
      {"A8", ordering},
      {"A9", property_suite},
      {"A10", [] { return igd_at_most("IDTLZ1-10", A::kAdaw, 2.1e-1, 300.0); }},
  };

  int failures = 0;
  for (const auto& [id, check] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s %s: %s\n", id.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
