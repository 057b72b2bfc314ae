#include "moead/neighborhood.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

IMat nearest_by_rows(const Mat& rows, int T) {
  const int n = static_cast<int>(rows.size());
  if (T < 1 || T > n)
    throw std::invalid_argument("neighborhood: T must satisfy 1 <= T <= N");

  IMat b(static_cast<std::size_t>(n));
  std::vector<std::pair<double, int>> dist(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      dist[static_cast<std::size_t>(j)] = {
          squared_distance(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]), j};
    std::stable_sort(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
      return a.first < b.first || (a.first == b.first && a.second < b.second);
    });
    IVec& row = b[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(T));
    for (int k = 0; k < T; ++k) row[static_cast<std::size_t>(k)] = dist[static_cast<std::size_t>(k)].second;
  }
  return b;
}

}  // namespace

IMat assign_neighborhood_by_lambda(const Mat& lambda, int T) {
  return nearest_by_rows(lambda, T);
}

IMat assign_neighborhood_by_x(const Mat& x, int T) { return nearest_by_rows(x, T); }

Mat sampling_probabilities(const IMat& B, double delta_p, int N, int T) {
  if (delta_p < 0.0 || delta_p > 1.0)
    throw std::invalid_argument("sampling_probabilities: delta_p must lie in [0, 1]");
  if (delta_p < 1.0 && T >= N)
    throw std::invalid_argument(
        "sampling_probabilities: delta_p < 1 requires T < N");

  const double inside = delta_p / T;
  const double outside = T < N ? (1.0 - delta_p) / (N - T) : 0.0;
  Mat p(static_cast<std::size_t>(N), Vec(static_cast<std::size_t>(N), outside));
  for (int i = 0; i < N; ++i)
    for (int j : B[static_cast<std::size_t>(i)])
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inside;
  return p;
}

NeighborhoodSampler::NeighborhoodSampler(const IMat& B, double delta_p, int N)
    : B_(B), delta_p_(delta_p), N_(N), T_(B.empty() ? 0 : static_cast<int>(B.front().size())) {
  outside_.resize(B.size());
  std::vector<bool> inside(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < B.size(); ++i) {
    std::fill(inside.begin(), inside.end(), false);
    for (int j : B[i]) inside[static_cast<std::size_t>(j)] = true;
    IVec& out = outside_[i];
    out.reserve(static_cast<std::size_t>(N - T_));
    for (int j = 0; j < N; ++j)
      if (!inside[static_cast<std::size_t>(j)]) out.push_back(j);
  }
}

IVec NeighborhoodSampler::sample_distinct(int i, int k, Rng& rng) const {
  IVec in_rem = B_[static_cast<std::size_t>(i)];
  IVec out_rem = outside_[static_cast<std::size_t>(i)];
  const double w_in = delta_p_ / T_;
  const double w_out = N_ > T_ ? (1.0 - delta_p_) / (N_ - T_) : 0.0;

  IVec picked;
  picked.reserve(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) {
    const double mass_in = w_in * static_cast<double>(in_rem.size());
    const double mass_out = w_out * static_cast<double>(out_rem.size());
    const double total = mass_in + mass_out;
    if (total <= 0.0)
      throw std::runtime_error(
          "neighborhood sampling: pool exhausted; increase T or lower delta_p");
    const double u = rng.uniform() * total;
    if (u < mass_in) {
      auto pos = static_cast<std::size_t>(u / w_in);
      if (pos >= in_rem.size()) pos = in_rem.size() - 1;
      picked.push_back(in_rem[pos]);
      in_rem.erase(in_rem.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      auto pos = static_cast<std::size_t>((u - mass_in) / w_out);
      if (pos >= out_rem.size()) pos = out_rem.size() - 1;
      picked.push_back(out_rem[pos]);
      out_rem.erase(out_rem.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
  return picked;
}

}  // namespace moead
