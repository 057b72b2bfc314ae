#include "moead/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moead {

bool dominates(const Vec& a, const Vec& b) {
  bool strictly_better = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::size_t> nondominated_indices(const Mat& y) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < y.size(); ++i) {
    bool drop = false;
    for (std::size_t k = 0; k < y.size() && !drop; ++k) {
      if (k == i) continue;
      if (dominates(y[k], y[i])) drop = true;
      // Duplicates are kept once: the first occurrence survives.
      if (k < i && y[k] == y[i]) drop = true;
    }
    if (!drop) keep.push_back(i);
  }
  return keep;
}

Mat nondominated_filter(const Mat& y) {
  Mat out;
  for (std::size_t i : nondominated_indices(y)) out.push_back(y[i]);
  return out;
}

double igd(const Mat& front, const Mat& reference) {
  if (front.empty() || reference.empty())
    throw std::invalid_argument("igd: front and reference must be nonempty");
  double sum = 0.0;
  for (const Vec& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& f : front) best = std::min(best, squared_distance(f, r));
    sum += std::sqrt(best);
  }
  return sum / static_cast<double>(reference.size());
}

namespace {

double hv_2d(Mat points, const Vec& ref) {
  std::sort(points.begin(), points.end());
  double volume = 0.0;
  double prev_y = ref[1];
  for (const Vec& p : points) {
    volume += (ref[0] - p[0]) * (prev_y - p[1]);
    prev_y = p[1];
  }
  return volume;
}

// Exact hypervolume by slicing along the last objective. `points` must be
// mutually nondominated within the first d coordinates.
double hv_recursive(const Mat& points, const Vec& ref, std::size_t d) {
  if (points.empty()) return 0.0;
  if (d == 1) {
    double lo = ref[0];
    for (const Vec& p : points) lo = std::min(lo, p[0]);
    return ref[0] - lo;
  }
  if (d == 2) return hv_2d(points, ref);

  Mat sorted = points;
  std::sort(sorted.begin(), sorted.end(), [d](const Vec& a, const Vec& b) {
    return a[d - 1] < b[d - 1];
  });

  double volume = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double z_lo = sorted[k][d - 1];
    const double z_hi = k + 1 < sorted.size() ? sorted[k + 1][d - 1] : ref[d - 1];
    if (z_hi <= z_lo) continue;
    Mat slab;
    slab.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      slab.push_back(Vec(sorted[i].begin(), sorted[i].end() - 1));
    slab = nondominated_filter(slab);
    volume += (z_hi - z_lo) * hv_recursive(slab, ref, d - 1);
  }
  return volume;
}

}  // namespace

HypervolumeResult hypervolume(const Mat& front, std::optional<Vec> ref_point,
                              std::uint64_t mc_seed, std::size_t mc_samples) {
  HypervolumeResult r;
  if (front.empty()) {
    if (ref_point) r.ref_point = *ref_point;
    return r;
  }
  const std::size_t n_f = front.front().size();

  if (ref_point) {
    r.ref_point = *ref_point;
    if (r.ref_point.size() != n_f)
      throw std::invalid_argument("hypervolume: reference point width mismatch");
  } else {
    r.ref_point.assign(n_f, -std::numeric_limits<double>::infinity());
    for (const Vec& p : front)
      for (std::size_t j = 0; j < n_f; ++j) r.ref_point[j] = std::max(r.ref_point[j], p[j]);
  }
  for (const Vec& p : front)
    for (std::size_t j = 0; j < n_f; ++j)
      if (p[j] > r.ref_point[j])
        throw std::invalid_argument(
            "hypervolume: reference point does not bound the front");

  const Mat clean = nondominated_filter(front);

  if (n_f <= 4) {
    r.value = hv_recursive(clean, r.ref_point, n_f);
    return r;
  }

  // Monte Carlo estimate over the bounding box [front minimum, ref].
  Vec lo(n_f, std::numeric_limits<double>::infinity());
  for (const Vec& p : clean)
    for (std::size_t j = 0; j < n_f; ++j) lo[j] = std::min(lo[j], p[j]);
  double box = 1.0;
  for (std::size_t j = 0; j < n_f; ++j) box *= r.ref_point[j] - lo[j];
  r.monte_carlo = true;
  if (box <= 0.0) return r;

  Rng rng(mc_seed);
  Vec sample(n_f);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < mc_samples; ++s) {
    for (std::size_t j = 0; j < n_f; ++j) sample[j] = rng.uniform(lo[j], r.ref_point[j]);
    for (const Vec& p : clean) {
      bool below = true;
      for (std::size_t j = 0; j < n_f && below; ++j) below = p[j] <= sample[j];
      if (below) {
        ++hits;
        break;
      }
    }
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(mc_samples);
  r.value = box * frac;
  r.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(mc_samples));
  return r;
}

Mat summary_front(const RunResult& result) {
  Mat feasible;
  for (std::size_t i = 0; i < result.Y.size(); ++i)
    if (result.V[i] == 0.0) feasible.push_back(result.Y[i]);
  return nondominated_filter(feasible);
}

RunSummary summarize(const RunResult& result, std::optional<Vec> hv_ref_point) {
  RunSummary s;
  s.evaluations = result.evaluations;
  s.iterations = result.iterations;
  s.population_size = result.population_size;
  s.stop_reason = result.stop_reason;
  s.z_hat = result.z_hat;
  s.z_tilde = result.z_tilde;

  for (double v : result.V)
    if (v == 0.0) ++s.feasible;
  const Mat front = summary_front(result);
  s.nondominated = static_cast<int>(front.size());
  if (result.population_size > 0) {
    s.feasible_pct = 100.0 * s.feasible / result.population_size;
    s.nondominated_pct = 100.0 * s.nondominated / result.population_size;
  }
  s.hv = hypervolume(front, std::move(hv_ref_point), result.seed);
  return s;
}

}  // namespace moead
