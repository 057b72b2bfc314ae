#ifndef MOEAD_PROBLEM_HPP_
#define MOEAD_PROBLEM_HPP_

#include <functional>
#include <string>

#include "moead/core.hpp"

namespace moead {

/// Per-row inequality (g <= 0) and equality (h = 0) constraint values.
/// Either matrix may be empty when the problem has no constraints of that
/// kind; when present, both have one row per evaluated point.
struct ConstraintValues {
  Mat g;
  Mat h;
};

/// A multiobjective minimization problem over a box in the original decision
/// space. The optimizer works internally on the unit hypercube and decodes to
/// [xmin, xmax] only at evaluation time.
struct ProblemDefinition {
  std::string name;
  int n_v = 0;
  int n_f = 0;
  Vec xmin;
  Vec xmax;

  /// Batch evaluator: N x n_v matrix (original space) -> N x n_f objectives.
  std::function<Mat(const Mat&)> objective_fn;

  /// Optional batch constraint evaluator (original space).
  std::function<ConstraintValues(const Mat&)> constraint_fn;

  /// Tolerance applied to equality constraints in the violation measure.
  double eq_tolerance = 1e-4;

  bool has_constraints() const { return static_cast<bool>(constraint_fn); }

  /// Throws std::invalid_argument on inconsistent dimensions or bounds.
  void validate() const;
};

/// Maps unit-hypercube rows to the original box: x = xmin + u * (xmax - xmin).
Mat decode_population(const Mat& x_unit, const Vec& xmin, const Vec& xmax);

/// Inverse of decode_population.
Mat encode_population(const Mat& x_orig, const Vec& xmin, const Vec& xmax);

}  // namespace moead

#endif  // MOEAD_PROBLEM_HPP_
