#include "moead/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

constexpr std::int64_t kMaxWeightRows = 2'000'000;
constexpr std::int64_t kMaxUdCandidates = 2'000'000;

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    if (r > kMaxWeightRows * i) return kMaxWeightRows + 1;  // saturate early
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

void validate_weights(const WeightMatrix& w) {
  for (const Vec& row : w.lambda) {
    double sum = 0.0;
    for (double x : row) {
      if (x < 0.0) throw std::runtime_error("weight matrix has a negative entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::runtime_error("weight matrix row does not sum to 1");
  }
}

WeightMatrix decompose_sld(int h, int n_f) {
  if (h < 1) throw std::invalid_argument("sld: h must be >= 1");
  if (n_f < 2) throw std::invalid_argument("sld: n_f must be >= 2");
  const std::int64_t n = binomial(h + n_f - 1, n_f - 1);
  if (n > kMaxWeightRows)
    throw std::invalid_argument(
        "sld: subproblem count exceeds the supported maximum; use the "
        "multiple-layer design (msld) with smaller per-layer h values");

  WeightMatrix w;
  w.provenance = "sld(h=" + std::to_string(h) + ")";
  w.lambda.reserve(static_cast<std::size_t>(n));

  // Ascending lexicographic enumeration of compositions of h into n_f parts.
  IVec c(static_cast<std::size_t>(n_f), 0);
  std::function<void(int, int)> emit = [&](int pos, int remaining) {
    if (pos == n_f - 1) {
      c[static_cast<std::size_t>(pos)] = remaining;
      Vec row(c.size());
      for (std::size_t j = 0; j < c.size(); ++j)
        row[j] = static_cast<double>(c[j]) / h;
      w.lambda.push_back(std::move(row));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(pos)] = v;
      emit(pos + 1, remaining - v);
    }
  };
  emit(0, h);
  return w;
}

WeightMatrix decompose_msld(const std::vector<int>& h, const Vec& tau, int n_f) {
  if (h.empty() || h.size() != tau.size())
    throw std::invalid_argument("msld: h and tau must be non-empty and of equal length");
  for (double t : tau)
    if (!(t > 0.0 && t <= 1.0))
      throw std::invalid_argument("msld: tau values must lie in (0, 1]");
  for (std::size_t a = 0; a < tau.size(); ++a)
    for (std::size_t b = a + 1; b < tau.size(); ++b)
      if (tau[a] == tau[b])
        throw std::invalid_argument("msld: tau values must be pairwise distinct");

  WeightMatrix w;
  w.provenance = "msld(layers=" + std::to_string(h.size()) + ")";
  for (std::size_t k = 0; k < h.size(); ++k) {
    WeightMatrix layer = decompose_sld(h[k], n_f);
    const double shift = (1.0 - tau[k]) / n_f;
    for (Vec& row : layer.lambda) {
      for (double& x : row) x = tau[k] * x + shift;
      w.lambda.push_back(std::move(row));
    }
  }
  return w;
}

std::vector<int> coprime_set(int n) {
  std::vector<int> out;
  for (int h = 1; h < n; ++h)
    if (std::gcd(h, n) == 1) out.push_back(h);
  return out;
}

IMat glp_matrix(int n, const std::vector<int>& h) {
  IMat u(static_cast<std::size_t>(n), IVec(h.size()));
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < h.size(); ++j) {
      const std::int64_t prod = static_cast<std::int64_t>(i + 1) * h[j];
      u[static_cast<std::size_t>(i)][j] = static_cast<int>((prod - 1) % n) + 1;
    }
  return u;
}

double cd2_discrepancy(const Mat& u) {
  if (u.empty()) throw std::invalid_argument("cd2: empty matrix");
  const std::size_t n = u.size();
  const std::size_t s = u.front().size();

  double first = std::pow(13.0 / 12.0, static_cast<double>(s));

  double second = 0.0;
  for (const Vec& row : u) {
    double prod = 1.0;
    for (double x : row) {
      const double a = std::abs(x - 0.5);
      prod *= 1.0 + (a - a * a) / 2.0;
    }
    second += prod;
  }
  second *= 2.0 / static_cast<double>(n);

  double third = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double prod = 1.0;
      for (std::size_t j = 0; j < s; ++j) {
        const double ai = std::abs(u[i][j] - 0.5);
        const double ak = std::abs(u[k][j] - 0.5);
        prod *= 1.0 + (ai + ak) / 2.0 - std::abs(u[i][j] - u[k][j]) / 2.0;
      }
      third += prod;
    }
  third /= static_cast<double>(n) * static_cast<double>(n);

  return first - second + third;
}

namespace {

Mat scale_glp(const IMat& u, int n) {
  Mat out(u.size(), Vec(u.front().size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.front().size(); ++j)
      out[i][j] = (u[i][j] - 0.5) / n;
  return out;
}

}  // namespace

WeightMatrix decompose_uniform(int n, int n_f) {
  if (n < 2) throw std::invalid_argument("uniform: N must be >= 2");
  if (n_f < 2) throw std::invalid_argument("uniform: n_f must be >= 2");
  const std::vector<int> pool = coprime_set(n);
  const int m = n_f - 1;
  if (static_cast<int>(pool.size()) < m)
    throw std::invalid_argument(
        "uniform: N is too small for the requested number of objectives");

  std::int64_t count = 1;
  for (int j = 0; j < m; ++j) count *= static_cast<std::int64_t>(pool.size()) - j;
  if (count > kMaxUdCandidates)
    throw std::invalid_argument(
        "uniform: candidate enumeration is too large; lower N or use sld");

  // Ordered tuples of distinct pool elements, ascending lexicographic order
  // over pool indices. First candidate with the minimal discrepancy wins.
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::vector<int> best;
  double best_cd2 = 0.0;
  bool have_best = false;

  std::vector<int> tuple(static_cast<std::size_t>(m));
  std::function<void(int)> visit = [&](int pos) {
    if (pos == m) {
      const IMat u = glp_matrix(n, tuple);
      const double d = cd2_discrepancy(scale_glp(u, n));
      if (!have_best || d < best_cd2) {
        have_best = true;
        best_cd2 = d;
        best = tuple;
      }
      return;
    }
    for (std::size_t p = 0; p < pool.size(); ++p) {
      bool used = false;
      for (int q = 0; q < pos; ++q)
        if (tuple[static_cast<std::size_t>(q)] == pool[p]) used = true;
      if (used) continue;
      tuple[static_cast<std::size_t>(pos)] = pool[p];
      visit(pos + 1);
    }
  };
  visit(0);

  const Mat ubar = scale_glp(glp_matrix(n, best), n);

  WeightMatrix w;
  w.provenance = "uniform(N=" + std::to_string(n) + ")";
  w.lambda.assign(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n_f)));
  for (int i = 0; i < n; ++i) {
    Vec& row = w.lambda[static_cast<std::size_t>(i)];
    double prod = 1.0;
    for (int j = 0; j < n_f - 1; ++j) {
      const double root =
          std::pow(ubar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   1.0 / (n_f - (j + 1)));
      row[static_cast<std::size_t>(j)] = (1.0 - root) * prod;
      prod *= root;
    }
    row[static_cast<std::size_t>(n_f - 1)] = prod;
  }
  validate_weights(w);
  return w;
}

}  // namespace moead
