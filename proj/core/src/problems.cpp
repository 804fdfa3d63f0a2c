#include "adaw/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "adaw/weights.hpp"

namespace adaw {
namespace {

constexpr double kPi = std::numbers::pi;

enum class Dtlz { k1, k2, k5, k7 };

// Variable counts per family follow the originating suites: k = 5 for the
// DTLZ1 family, 10 for DTLZ2/DTLZ5 and 20 for DTLZ7.
std::size_t dtlz_k(Dtlz kind) {
  switch (kind) {
    case Dtlz::k1: return 5;
    case Dtlz::k7: return 20;
    default: return 10;
  }
}

Bounds unit_box(std::size_t d) { return {std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)}; }

ObjectiveVector dtlz1(std::span<const double> x, std::size_t m) {
  const std::size_t k = x.size() - m + 1;
  double g = 0.0;
  for (std::size_t i = m - 1; i < x.size(); ++i) {
    const double t = x[i] - 0.5;
    g += t * t - std::cos(20.0 * kPi * t);
  }
  g = 100.0 * (static_cast<double>(k) + g);
  ObjectiveVector f(m, 0.5 * (1.0 + g));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 + i < m; ++j) f[i] *= x[j];
    if (i > 0) f[i] *= 1.0 - x[m - 1 - i];
  }
  return f;
}

// Shared by DTLZ2 and DTLZ5(I, M); `free_angles` is I - 1, the number of
// leading position variables mapped straight to angles.
ObjectiveVector spherical(std::span<const double> x, std::size_t m, std::size_t free_angles) {
  double g = 0.0;
  for (std::size_t i = m - 1; i < x.size(); ++i) g += (x[i] - 0.5) * (x[i] - 0.5);
  std::vector<double> theta(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    theta[j] = j < free_angles ? x[j] * kPi / 2.0
                               : kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[j]);
  }
  ObjectiveVector f(m, 1.0 + g);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 + i < m; ++j) f[i] *= std::cos(theta[j]);
    if (i > 0) f[i] *= std::sin(theta[m - 1 - i]);
  }
  return f;
}

ObjectiveVector dtlz7(std::span<const double> x, std::size_t m) {
  const std::size_t k = x.size() - m + 1;
  double g = 0.0;
  for (std::size_t i = m - 1; i < x.size(); ++i) g += x[i];
  g = 1.0 + 9.0 / static_cast<double>(k) * g;
  ObjectiveVector f(m);
  double h = static_cast<double>(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    f[i] = x[i];
    h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[i]));
  }
  f[m - 1] = (1.0 + g) * h;
  return f;
}

ObjectiveVector evaluate_dtlz(Dtlz kind, std::span<const double> x, std::size_t m) {
  switch (kind) {
    case Dtlz::k1: return dtlz1(x, m);
    case Dtlz::k2: return spherical(x, m, m - 1);
    case Dtlz::k5: return spherical(x, m, 1);
    case Dtlz::k7: return dtlz7(x, m);
  }
  return {};
}

// Points spread over the unit simplex: the densest lattice with at most n
// points for m <= 3, uniform random (flat Dirichlet) samples otherwise.
std::vector<ObjectiveVector> simplex_points(std::size_t m, std::size_t n) {
  if (m <= 3) {
    std::size_t h = 1;
    while (lattice_size(m, h + 1) <= n) ++h;
    return simplex_lattice(m, h);
  }
  std::mt19937_64 rng(20180101);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
  for (auto& p : out) {
    double sum = 0.0;
    for (auto& v : p) {
      v = -std::log(1.0 - unif(rng));
      sum += v;
    }
    for (auto& v : p) v /= sum;
  }
  return out;
}

std::vector<ObjectiveVector> sphere_points(std::size_t m, std::size_t n) {
  auto pts = simplex_points(m, n);
  for (auto& p : pts) {
    double norm = 0.0;
    for (double v : p) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : p) v /= norm;
  }
  return pts;
}

// Random simplex points are uniform over the simplex; pushing them onto the
// sphere by radial projection is not, so many-objective sphere fronts draw
// from the positive orthant of a normal distribution instead.
std::vector<ObjectiveVector> sphere_front(std::size_t m, std::size_t n) {
  if (m <= 3) return sphere_points(m, n);
  std::mt19937_64 rng(20180102);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
  for (auto& p : out) {
    double norm = 0.0;
    for (auto& v : p) {
      v = std::abs(normal(rng));
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (auto& v : p) v /= norm;
  }
  return out;
}

std::vector<ObjectiveVector> filtered(std::vector<ObjectiveVector> pts) {
  const auto keep = nondominated_indices(pts);
  std::vector<ObjectiveVector> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) out.push_back(std::move(pts[i]));
  return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

// Front of DTLZ5(I = 2, M): a one-dimensional arc with all trailing angles
// fixed at pi/4.
std::vector<ObjectiveVector> degenerate_arc(std::size_t m, std::size_t n) {
  std::vector<ObjectiveVector> out;
  out.reserve(n);
  for (double t : linspace(0.0, 1.0, n)) {
    std::vector<double> x(m - 1, 0.5);
    x[0] = t;
    out.push_back(spherical(x, m, 1));
  }
  return out;
}

std::vector<ObjectiveVector> dtlz7_front(std::size_t m, std::size_t n) {
  // Position variables live on the two intervals where the last objective is
  // nondominated; a regular grid on [0,1]^(m-1) is mapped onto them.
  constexpr std::array<double, 4> interval{0.0, 0.251412, 0.631627, 0.859401};
  const double split = (interval[1] - interval[0]) /
                       (interval[3] - interval[2] + interval[1] - interval[0]);
  const std::size_t dims = m - 1;
  const auto per_dim = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(dims)) + 1e-9));
  const auto axis = linspace(0.0, 1.0, std::max<std::size_t>(per_dim, 2));
  std::vector<ObjectiveVector> out;
  std::vector<std::size_t> idx(dims, 0);
  while (true) {
    ObjectiveVector f(m);
    double h = static_cast<double>(m);
    for (std::size_t j = 0; j < dims; ++j) {
      double v = axis[idx[j]];
      v = v <= split ? v * (interval[1] - interval[0]) / split + interval[0]
                     : (v - split) * (interval[3] - interval[2]) / (1.0 - split) + interval[2];
      f[j] = v;
      h -= v / 2.0 * (1.0 + std::sin(3.0 * kPi * v));
    }
    f[m - 1] = 2.0 * h;
    out.push_back(std::move(f));
    std::size_t j = 0;
    while (j < dims && ++idx[j] == axis.size()) idx[j++] = 0;
    if (j == dims) break;
  }
  return filtered(std::move(out));
}

ObjectiveVector vnt2(std::span<const double> x) {
  const double a = x[0], b = x[1];
  return {(a - 2.0) * (a - 2.0) / 2.0 + (b + 1.0) * (b + 1.0) / 13.0 + 3.0,
          (a + b - 3.0) * (a + b - 3.0) / 36.0 + (-a + b + 2.0) * (-a + b + 2.0) / 8.0 - 17.0,
          (a + 2.0 * b - 1.0) * (a + 2.0 * b - 1.0) / 175.0 +
              (2.0 * b - a) * (2.0 * b - a) / 17.0 - 13.0};
}

// Each VNT2 objective is a strictly convex quadratic, so its Pareto set is
// exactly the set of weighted-sum minimizers. Every objective is written as
// x^T Q x / 2 + c^T x + const and the weighted 2x2 system is solved directly.
std::vector<ObjectiveVector> vnt2_front(std::size_t n) {
  struct Quad {
    double q11, q12, q22, c1, c2;
  };
  constexpr std::array<Quad, 3> quads{{
      {1.0, 0.0, 2.0 / 13.0, -2.0, 2.0 / 13.0},
      {2.0 / 36.0 + 2.0 / 8.0, 2.0 / 36.0 - 2.0 / 8.0, 2.0 / 36.0 + 2.0 / 8.0,
       -6.0 / 36.0 - 4.0 / 8.0, -6.0 / 36.0 + 4.0 / 8.0},
      {2.0 / 175.0 + 2.0 / 17.0, 4.0 / 175.0 - 4.0 / 17.0, 8.0 / 175.0 + 8.0 / 17.0,
       -2.0 / 175.0, -4.0 / 175.0},
  }};
  std::vector<ObjectiveVector> out;
  for (const auto& w : simplex_points(3, n)) {
    Quad s{0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) {
      s.q11 += w[i] * quads[i].q11;
      s.q12 += w[i] * quads[i].q12;
      s.q22 += w[i] * quads[i].q22;
      s.c1 += w[i] * quads[i].c1;
      s.c2 += w[i] * quads[i].c2;
    }
    const double det = s.q11 * s.q22 - s.q12 * s.q12;
    const std::array<double, 2> x{(-s.c1 * s.q22 + s.c2 * s.q12) / det,
                                  (-s.c2 * s.q11 + s.c1 * s.q12) / det};
    out.push_back(vnt2(x));
  }
  return filtered(std::move(out));
}

Problem dtlz_problem(std::string name, Dtlz kind, std::size_t m) {
  Problem p;
  p.name = std::move(name);
  p.num_objectives = m;
  p.bounds = unit_box(m + dtlz_k(kind) - 1);
  p.evaluate = [kind, m](std::span<const double> x) { return evaluate_dtlz(kind, x, m); };
  switch (kind) {
    case Dtlz::k1:
      p.front = [m](std::size_t n) {
        auto pts = simplex_points(m, n);
        for (auto& f : pts) for (auto& v : f) v *= 0.5;
        return pts;
      };
      break;
    case Dtlz::k2: p.front = [m](std::size_t n) { return sphere_front(m, n); }; break;
    case Dtlz::k5: p.front = [m](std::size_t n) { return degenerate_arc(m, n); }; break;
    case Dtlz::k7: p.front = [m](std::size_t n) { return dtlz7_front(m, n); }; break;
  }
  return p;
}

// Convex DTLZ2: f_i^4 for the first m-1 objectives, f_m^2 for the last.
Problem convex_dtlz2(std::size_t m) {
  Problem p = dtlz_problem("CDTLZ2", Dtlz::k2, m);
  auto convexify = [m](ObjectiveVector f) {
    for (std::size_t i = 0; i + 1 < m; ++i) f[i] = std::pow(f[i], 4.0);
    f[m - 1] = f[m - 1] * f[m - 1];
    return f;
  };
  p.evaluate = [m, convexify](std::span<const double> x) {
    return convexify(evaluate_dtlz(Dtlz::k2, x, m));
  };
  p.front = [m, convexify](std::size_t n) {
    auto pts = sphere_front(m, n);
    for (auto& f : pts) f = convexify(std::move(f));
    return pts;
  };
  return p;
}

// Inverted DTLZ1/DTLZ2: each objective reflected through the scale of the
// distance function, (1 + g) / 2 - f_i and (1 + g) - f_i respectively, which
// equals 0.5 - f_i (1 - f_i) on the front while keeping g a penalty.
Problem inverted(std::string name, Dtlz kind, std::size_t m) {
  Problem p = dtlz_problem(std::move(name), kind, m);
  const double scale = kind == Dtlz::k1 ? 0.5 : 1.0;
  p.evaluate = [kind, m, scale](std::span<const double> x) {
    ObjectiveVector f = evaluate_dtlz(kind, x, m);
    double g = 0.0;
    if (kind == Dtlz::k1) {
      for (std::size_t i = m - 1; i < x.size(); ++i) {
        const double t = x[i] - 0.5;
        g += t * t - std::cos(20.0 * kPi * t);
      }
      g = 100.0 * (static_cast<double>(x.size() - m + 1) + g);
    } else {
      for (std::size_t i = m - 1; i < x.size(); ++i) g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    for (auto& v : f) v = scale * (1.0 + g) - v;
    return f;
  };
  auto base = p.front;
  p.front = [base, scale](std::size_t n) {
    auto pts = base(n);
    for (auto& f : pts) for (auto& v : f) v = scale - v;
    return pts;
  };
  return p;
}

// Scaled DTLZ: objective i (0-based) multiplied by 10^i.
Problem scaled(std::string name, Dtlz kind, std::size_t m) {
  Problem p = dtlz_problem(std::move(name), kind, m);
  auto scale = [](ObjectiveVector f) {
    double factor = 1.0;
    for (auto& v : f) {
      v *= factor;
      factor *= 10.0;
    }
    return f;
  };
  auto eval = p.evaluate;
  auto front = p.front;
  p.evaluate = [eval, scale](std::span<const double> x) { return scale(eval(x)); };
  p.front = [front, scale](std::size_t n) {
    auto pts = front(n);
    for (auto& f : pts) f = scale(std::move(f));
    return pts;
  };
  return p;
}

Problem sch1() {
  Problem p;
  p.name = "SCH1";
  p.num_objectives = 2;
  p.bounds = {{-1000.0}, {1000.0}};
  p.evaluate = [](std::span<const double> x) {
    return ObjectiveVector{x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
  };
  p.front = [](std::size_t n) {
    std::vector<ObjectiveVector> out;
    for (double t : linspace(0.0, 2.0, n)) out.push_back({t * t, (t - 2.0) * (t - 2.0)});
    return out;
  };
  return p;
}

ObjectiveVector sch2_eval(double x) {
  double f1;
  if (x <= 1.0) {
    f1 = -x;
  } else if (x <= 3.0) {
    f1 = x - 2.0;
  } else if (x <= 4.0) {
    f1 = 4.0 - x;
  } else {
    f1 = x - 4.0;
  }
  return {f1, (x - 5.0) * (x - 5.0)};
}

Problem sch2() {
  Problem p;
  p.name = "SCH2";
  p.num_objectives = 2;
  p.bounds = {{-5.0}, {10.0}};
  p.evaluate = [](std::span<const double> x) { return sch2_eval(x[0]); };
  p.front = [](std::size_t n) {
    std::vector<ObjectiveVector> out;
    const std::size_t half = std::max<std::size_t>(n / 2, 2);
    for (double t : linspace(1.0, 2.0, half)) out.push_back(sch2_eval(t));
    for (double t : linspace(4.0, 5.0, n - half < 2 ? 2 : n - half)) out.push_back(sch2_eval(t));
    return filtered(std::move(out));
  };
  return p;
}

Problem fon() {
  Problem p;
  p.name = "FON";
  p.num_objectives = 2;
  p.bounds = {std::vector<double>(3, -4.0), std::vector<double>(3, 4.0)};
  const double c = 1.0 / std::sqrt(3.0);
  p.evaluate = [c](std::span<const double> x) {
    double s1 = 0.0, s2 = 0.0;
    for (double v : x) {
      s1 += (v - c) * (v - c);
      s2 += (v + c) * (v + c);
    }
    return ObjectiveVector{1.0 - std::exp(-s1), 1.0 - std::exp(-s2)};
  };
  p.front = [c, eval = p.evaluate](std::size_t n) {
    std::vector<ObjectiveVector> out;
    for (double t : linspace(-c, c, n)) {
      const std::array<double, 3> x{t, t, t};
      out.push_back(eval(x));
    }
    return out;
  };
  return p;
}

Problem zdt3() {
  Problem p;
  p.name = "ZDT3";
  p.num_objectives = 2;
  p.bounds = unit_box(30);
  p.evaluate = [](std::span<const double> x) {
    double g = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) g += x[i];
    g = 1.0 + 9.0 * g / static_cast<double>(x.size() - 1);
    const double ratio = x[0] / g;
    const double h = 1.0 - std::sqrt(ratio) - ratio * std::sin(10.0 * kPi * x[0]);
    return ObjectiveVector{x[0], g * h};
  };
  p.front = [](std::size_t n) {
    std::vector<ObjectiveVector> out;
    for (double t : linspace(0.0, 1.0, n)) {
      out.push_back({t, 1.0 - std::sqrt(t) - t * std::sin(10.0 * kPi * t)});
    }
    return filtered(std::move(out));
  };
  return p;
}

Problem vnt2_problem() {
  Problem p;
  p.name = "VNT2";
  p.num_objectives = 3;
  p.bounds = {std::vector<double>(2, -4.0), std::vector<double>(2, 4.0)};
  p.evaluate = [](std::span<const double> x) { return vnt2(x); };
  p.front = vnt2_front;
  return p;
}

}  // namespace

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] && x[i] <= upper[i])) return false;
  }
  return true;
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{
      "DTLZ1", "DTLZ2",  "CDTLZ2", "IDTLZ1", "IDTLZ2",   "SCH1",      "FON",
      "ZDT3",  "DTLZ7",  "DTLZ5",  "VNT2",   "SDTLZ1",   "SDTLZ2",    "SCH2",
      "DTLZ2-10", "IDTLZ1-10", "DTLZ5(2,10)"};
  return names;
}

Problem make_problem(std::string_view name) {
  if (name == "DTLZ1") return dtlz_problem("DTLZ1", Dtlz::k1, 3);
  if (name == "DTLZ2") return dtlz_problem("DTLZ2", Dtlz::k2, 3);
  if (name == "CDTLZ2") return convex_dtlz2(3);
  if (name == "IDTLZ1") return inverted("IDTLZ1", Dtlz::k1, 3);
  if (name == "IDTLZ2") return inverted("IDTLZ2", Dtlz::k2, 3);
  if (name == "SCH1") return sch1();
  if (name == "FON") return fon();
  if (name == "ZDT3") return zdt3();
  if (name == "DTLZ7") return dtlz_problem("DTLZ7", Dtlz::k7, 3);
  if (name == "DTLZ5") return dtlz_problem("DTLZ5", Dtlz::k5, 3);
  if (name == "VNT2") return vnt2_problem();
  if (name == "SDTLZ1") return scaled("SDTLZ1", Dtlz::k1, 3);
  if (name == "SDTLZ2") return scaled("SDTLZ2", Dtlz::k2, 3);
  if (name == "SCH2") return sch2();
  if (name == "DTLZ2-10") return dtlz_problem("DTLZ2-10", Dtlz::k2, 10);
  if (name == "IDTLZ1-10") return inverted("IDTLZ1-10", Dtlz::k1, 10);
  if (name == "DTLZ5(2,10)") return dtlz_problem("DTLZ5(2,10)", Dtlz::k5, 10);
  throw ConfigError("unknown problem: " + std::string(name));
}

std::vector<ObjectiveVector> sample_front(const Problem& problem, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_front: need at least two points");
  return problem.front(n);
}

std::size_t default_front_size(std::size_t num_objectives) {
  if (num_objectives <= 2) return 1000;
  if (num_objectives == 3) return 5000;
  return 10000;
}

}  // namespace adaw
