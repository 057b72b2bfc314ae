#include "moead/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moead/update.hpp"

namespace moead {

namespace {

BenchmarkProblem make_sphere_rastrigin(int n_v) {
  if (n_v < 1) throw std::invalid_argument("sphere-rastrigin: n_v must be >= 1");
  BenchmarkProblem p;
  p.def.name = "sphere-rastrigin";
  p.def.n_v = n_v;
  p.def.n_f = 2;
  p.def.xmin.assign(static_cast<std::size_t>(n_v), -1.0);
  p.def.xmax.assign(static_cast<std::size_t>(n_v), 1.0);
  p.def.objective_fn = [n_v](const Mat& x) {
    Mat y(x.size(), Vec(2));
    for (std::size_t i = 0; i < x.size(); ++i) {
      double sphere = 0.0;
      double rastrigin = 0.0;
      for (int j = 0; j < n_v; ++j) {
        const double shift = 0.1 * (j + 1);
        const double sp = x[i][static_cast<std::size_t>(j)] + shift;
        const double rp = x[i][static_cast<std::size_t>(j)] - shift;
        sphere += sp * sp;
        rastrigin += rp * rp - 10.0 * std::cos(2.0 * std::numbers::pi * rp) + 10.0;
      }
      y[i][0] = sphere;
      y[i][1] = rastrigin;
    }
    return y;
  };
  return p;
}

BenchmarkProblem make_zdt1(int n_v) {
  if (n_v < 2) throw std::invalid_argument("zdt1: n_v must be >= 2");
  BenchmarkProblem p;
  p.def.name = "zdt1";
  p.def.n_v = n_v;
  p.def.n_f = 2;
  p.def.xmin.assign(static_cast<std::size_t>(n_v), 0.0);
  p.def.xmax.assign(static_cast<std::size_t>(n_v), 1.0);
  p.def.objective_fn = [n_v](const Mat& x) {
    Mat y(x.size(), Vec(2));
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double f1 = x[i][0];
      double tail = 0.0;
      for (int j = 1; j < n_v; ++j) tail += x[i][static_cast<std::size_t>(j)];
      const double g = 1.0 + 9.0 * tail / (n_v - 1);
      y[i][0] = f1;
      y[i][1] = g * (1.0 - std::sqrt(f1 / g));
    }
    return y;
  };
  p.front_fn = [](int n_points) {
    Mat front(static_cast<std::size_t>(n_points), Vec(2));
    for (int k = 0; k < n_points; ++k) {
      const double f1 = n_points == 1 ? 0.0 : static_cast<double>(k) / (n_points - 1);
      front[static_cast<std::size_t>(k)][0] = f1;
      front[static_cast<std::size_t>(k)][1] = 1.0 - std::sqrt(f1);
    }
    return front;
  };
  return p;
}

BenchmarkProblem make_dtlz2(int n_v, int n_f) {
  if (n_f < 2) throw std::invalid_argument("dtlz2: n_f must be >= 2");
  if (n_v < n_f) throw std::invalid_argument("dtlz2: requires n_f <= n_v");
  BenchmarkProblem p;
  p.def.name = "dtlz2";
  p.def.n_v = n_v;
  p.def.n_f = n_f;
  p.def.xmin.assign(static_cast<std::size_t>(n_v), 0.0);
  p.def.xmax.assign(static_cast<std::size_t>(n_v), 1.0);
  p.def.objective_fn = [n_v, n_f](const Mat& x) {
    const double half_pi = std::numbers::pi / 2.0;
    Mat y(x.size(), Vec(static_cast<std::size_t>(n_f)));
    for (std::size_t i = 0; i < x.size(); ++i) {
      double g = 0.0;
      for (int j = n_f - 1; j < n_v; ++j) {
        const double d = x[i][static_cast<std::size_t>(j)] - 0.5;
        g += d * d;
      }
      for (int m = 0; m < n_f; ++m) {
        double f = 1.0 + g;
        for (int j = 0; j < n_f - 1 - m; ++j)
          f *= std::cos(x[i][static_cast<std::size_t>(j)] * half_pi);
        if (m > 0) f *= std::sin(x[i][static_cast<std::size_t>(n_f - 1 - m)] * half_pi);
        y[i][static_cast<std::size_t>(m)] = f;
      }
    }
    return y;
  };
  p.front_fn = [n_f](int n_points) {
    // Stratified grid over the spherical angles, then trimmed to n_points.
    const double half_pi = std::numbers::pi / 2.0;
    const int per_axis = std::max(
        2, static_cast<int>(std::ceil(std::pow(static_cast<double>(n_points),
                                               1.0 / (n_f - 1)))));
    Mat front;
    IVec idx(static_cast<std::size_t>(n_f - 1), 0);
    while (true) {
      Vec angles(static_cast<std::size_t>(n_f - 1));
      for (int a = 0; a < n_f - 1; ++a)
        angles[static_cast<std::size_t>(a)] =
            half_pi * idx[static_cast<std::size_t>(a)] / (per_axis - 1);
      Vec f(static_cast<std::size_t>(n_f));
      for (int m = 0; m < n_f; ++m) {
        double v = 1.0;
        for (int a = 0; a < n_f - 1 - m; ++a) v *= std::cos(angles[static_cast<std::size_t>(a)]);
        if (m > 0) v *= std::sin(angles[static_cast<std::size_t>(n_f - 1 - m)]);
        f[static_cast<std::size_t>(m)] = v;
      }
      front.push_back(std::move(f));
      int a = n_f - 2;
      while (a >= 0 && idx[static_cast<std::size_t>(a)] == per_axis - 1) {
        idx[static_cast<std::size_t>(a)] = 0;
        --a;
      }
      if (a < 0) break;
      ++idx[static_cast<std::size_t>(a)];
    }
    if (static_cast<int>(front.size()) > n_points)
      front.resize(static_cast<std::size_t>(n_points));
    return front;
  };
  return p;
}

}  // namespace

BenchmarkProblem make_problem(const std::string& name, int n_v, int n_f) {
  if (name == "sphere-rastrigin") return make_sphere_rastrigin(n_v);
  if (name == "zdt1") return make_zdt1(n_v);
  if (name == "dtlz2") return make_dtlz2(n_v, n_f > 0 ? n_f : 3);
  throw std::invalid_argument("unknown benchmark problem: " + name);
}

EvalResult evaluate_batch(const ProblemDefinition& p, const Mat& x_unit,
                          std::uint64_t& eval_count) {
  EvalResult r;
  if (x_unit.empty()) return r;

  const Mat x_orig = decode_population(x_unit, p.xmin, p.xmax);
  r.y = p.objective_fn(x_orig);
  if (r.y.size() != x_unit.size())
    throw std::runtime_error("objective_fn returned the wrong number of rows");
  for (std::size_t i = 0; i < r.y.size(); ++i) {
    if (static_cast<int>(r.y[i].size()) != p.n_f)
      throw std::runtime_error("objective_fn returned the wrong number of objectives");
    if (!all_finite(r.y[i]))
      throw std::runtime_error("non-finite objective value for point " + std::to_string(i));
  }
  eval_count += x_unit.size();

  r.violations.assign(x_unit.size(), 0.0);
  if (p.constraint_fn) {
    const auto records = compute_violations(p.constraint_fn(x_orig), p.eq_tolerance);
    for (std::size_t i = 0; i < records.size() && i < r.violations.size(); ++i)
      r.violations[i] = records[i].total;
  }
  return r;
}

}  // namespace moead
