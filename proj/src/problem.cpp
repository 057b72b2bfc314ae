#include "moead/problem.hpp"

#include <stdexcept>

namespace moead {

void ProblemDefinition::validate() const {
  if (n_v < 1) throw std::invalid_argument("problem: n_v must be >= 1");
  if (n_f < 2) throw std::invalid_argument("problem: n_f must be >= 2");
  if (static_cast<int>(xmin.size()) != n_v || static_cast<int>(xmax.size()) != n_v)
    throw std::invalid_argument("problem: bounds must have length n_v");
  for (int j = 0; j < n_v; ++j)
    if (!(xmin[static_cast<std::size_t>(j)] < xmax[static_cast<std::size_t>(j)]))
      throw std::invalid_argument("problem: xmin must be < xmax componentwise");
  if (!objective_fn) throw std::invalid_argument("problem: objective_fn missing");
  if (eq_tolerance < 0.0)
    throw std::invalid_argument("problem: eq_tolerance must be nonnegative");
}

Mat decode_population(const Mat& x_unit, const Vec& xmin, const Vec& xmax) {
  Mat out(x_unit.size(), Vec(xmin.size()));
  for (std::size_t i = 0; i < x_unit.size(); ++i)
    for (std::size_t j = 0; j < xmin.size(); ++j)
      out[i][j] = xmin[j] + x_unit[i][j] * (xmax[j] - xmin[j]);
  return out;
}

Mat encode_population(const Mat& x_orig, const Vec& xmin, const Vec& xmax) {
  Mat out(x_orig.size(), Vec(xmin.size()));
  for (std::size_t i = 0; i < x_orig.size(); ++i)
    for (std::size_t j = 0; j < xmin.size(); ++j)
      out[i][j] = (x_orig[i][j] - xmin[j]) / (xmax[j] - xmin[j]);
  return out;
}

}  // namespace moead
