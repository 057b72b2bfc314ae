#ifndef MOEAD_PROBLEMS_HPP_
#define MOEAD_PROBLEMS_HPP_

#include <functional>
#include <optional>
#include <string>

#include "moead/problem.hpp"

namespace moead {

/// A problem definition bundled with an optional analytic Pareto-front
/// sampler, used as the reference set for distance-based indicators.
struct BenchmarkProblem {
  ProblemDefinition def;
  std::function<Mat(int)> front_fn;  // n_points -> n_points x n_f matrix
};

/// Built-in benchmark problems:
///   "sphere-rastrigin"  shifted sphere + shifted rastrigin, bounds [-1,1]^n_v
///   "zdt1"              two objectives, bounds [0,1]^n_v, n_v >= 2
///   "dtlz2"             n_f objectives (n_f <= n_v), bounds [0,1]^n_v
/// n_f is ignored for the two-objective problems.
BenchmarkProblem make_problem(const std::string& name, int n_v, int n_f = 0);

/// Result of one batch evaluation: objectives plus total constraint
/// violations (zero for unconstrained problems).
struct EvalResult {
  Mat y;
  Vec violations;
};

/// Decodes the unit-space rows, invokes the batch evaluators and charges
/// eval_count with one evaluation per row. Throws std::runtime_error on
/// shape mismatches or non-finite objective values.
EvalResult evaluate_batch(const ProblemDefinition& p, const Mat& x_unit,
                          std::uint64_t& eval_count);

}  // namespace moead

#endif  // MOEAD_PROBLEMS_HPP_
