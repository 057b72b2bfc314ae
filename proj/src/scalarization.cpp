#include "moead/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moead {

namespace {

void check_shapes(const Mat& y, const Mat& lambda) {
  if (y.size() != lambda.size())
    throw std::invalid_argument("scalarization: Y and lambda row counts differ");
  if (!y.empty() && y.front().size() != lambda.front().size())
    throw std::invalid_argument("scalarization: Y and lambda widths differ");
}

}  // namespace

double ws_value(const Vec& y, const Vec& lambda, const Vec& z) {
  double s = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) s += lambda[j] * (y[j] - z[j]);
  return s;
}

double wt_value(const Vec& y, const Vec& lambda, const Vec& z) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < y.size(); ++j)
    m = std::max(m, lambda[j] * (y[j] - z[j]));
  return m;
}

double awt_value(const Vec& y, const Vec& lambda, const Vec& z, double eps) {
  double denom = 0.0;
  for (double l : lambda) denom += 1.0 / (l + eps);
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double rho = (1.0 / (lambda[j] + eps)) / denom;
    m = std::max(m, rho * (y[j] - z[j]));
  }
  return m;
}

double pbi_value(const Vec& y, const Vec& lambda, const Vec& z, double theta) {
  const double ln = norm2(lambda);
  if (ln == 0.0) throw std::invalid_argument("pbi: zero-norm weight vector");
  double dot = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) dot += (y[j] - z[j]) * lambda[j];
  const double d1 = std::abs(dot) / ln;
  double d2sq = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double r = y[j] - (z[j] + d1 * lambda[j] / ln);
    d2sq += r * r;
  }
  return d1 + theta * std::sqrt(d2sq);
}

double ipbi_value(const Vec& y, const Vec& lambda, const Vec& nadir, double theta) {
  const double ln = norm2(lambda);
  if (ln == 0.0) throw std::invalid_argument("ipbi: zero-norm weight vector");
  double dot = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) dot += (nadir[j] - y[j]) * lambda[j];
  const double d1 = std::abs(dot) / ln;
  double d2sq = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double r = (nadir[j] - y[j]) - d1 * lambda[j] / ln;
    d2sq += r * r;
  }
  return theta * std::sqrt(d2sq) - d1;
}

Vec scalarize_ws(const Mat& y, const Mat& lambda, const Vec& z) {
  check_shapes(y, lambda);
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = ws_value(y[i], lambda[i], z);
  return out;
}

Vec scalarize_wt(const Mat& y, const Mat& lambda, const Vec& z) {
  check_shapes(y, lambda);
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = wt_value(y[i], lambda[i], z);
  return out;
}

Vec scalarize_awt(const Mat& y, const Mat& lambda, const Vec& z, double eps) {
  check_shapes(y, lambda);
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = awt_value(y[i], lambda[i], z, eps);
  return out;
}

Vec scalarize_pbi(const Mat& y, const Mat& lambda, const Vec& z, double theta) {
  check_shapes(y, lambda);
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = pbi_value(y[i], lambda[i], z, theta);
  return out;
}

Vec scalarize_ipbi(const Mat& y, const Mat& lambda, const Vec& nadir, double theta) {
  check_shapes(y, lambda);
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    out[i] = ipbi_value(y[i], lambda[i], nadir, theta);
  return out;
}

void update_reference_points(const Mat& y_iteration, Vec& z_hat, Vec& z_tilde) {
  if (y_iteration.empty())
    throw std::invalid_argument("update_reference_points: empty objective set");
  const std::size_t n_f = y_iteration.front().size();
  for (const Vec& row : y_iteration)
    if (!all_finite(row))
      throw std::invalid_argument("update_reference_points: non-finite objective value");

  if (z_hat.empty()) z_hat.assign(n_f, std::numeric_limits<double>::infinity());
  z_tilde.assign(n_f, -std::numeric_limits<double>::infinity());
  for (const Vec& row : y_iteration)
    for (std::size_t j = 0; j < n_f; ++j) {
      z_hat[j] = std::min(z_hat[j], row[j]);
      z_tilde[j] = std::max(z_tilde[j], row[j]);
    }
}

Mat scale_objectives(const Mat& y, const Vec& z_hat, const Vec& z_tilde) {
  Mat out(y.size(), Vec(y.empty() ? 0 : y.front().size()));
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y[i].size(); ++j) {
      const double range = z_tilde[j] - z_hat[j];
      out[i][j] = range < 1e-16 ? 0.0 : (y[i][j] - z_hat[j]) / range;
    }
  return out;
}

}  // namespace moead
