#ifndef MOEAD_METRICS_HPP_
#define MOEAD_METRICS_HPP_

#include <optional>
#include <string>

#include "moead/engine.hpp"

namespace moead {

/// Objective vectors with a feasibility mask.
struct FrontSet {
  Mat points;
  std::vector<bool> feasible;
};

/// True when a is no worse than b in every objective and strictly better in
/// at least one.
bool dominates(const Vec& a, const Vec& b);

/// Keeps exactly the non-dominated rows; exact duplicate rows are kept once.
Mat nondominated_filter(const Mat& y);

/// Indices into y of the rows kept by nondominated_filter, in input order.
std::vector<std::size_t> nondominated_indices(const Mat& y);

/// Inverted generational distance: mean over reference points of the minimum
/// Euclidean distance to the front. Both sets must be nonempty.
double igd(const Mat& front, const Mat& reference);

struct HypervolumeResult {
  double value = 0.0;
  double std_error = 0.0;  // nonzero only for the Monte Carlo estimate
  bool monte_carlo = false;
  Vec ref_point;
};

/// Dominated hypervolume of a front against a reference point. When no
/// reference point is given, the componentwise maximum of the front is used
/// (extreme points then contribute zero volume). Exact sweep for 2
/// objectives, exact recursive slicing for 3-4, Monte Carlo estimate with
/// reported standard error for 5 and more. The estimate is deterministic for
/// a fixed mc_seed.
HypervolumeResult hypervolume(const Mat& front, std::optional<Vec> ref_point = std::nullopt,
                              std::uint64_t mc_seed = 1,
                              std::size_t mc_samples = 1'000'000);

/// Run summary matching the text report: evaluation and iteration totals,
/// population size, feasible and nondominated counts, reference estimates,
/// and the hypervolume of the feasible nondominated front.
struct RunSummary {
  std::uint64_t evaluations = 0;
  long long iterations = 0;
  int population_size = 0;
  int feasible = 0;
  double feasible_pct = 0.0;
  int nondominated = 0;
  double nondominated_pct = 0.0;
  Vec z_hat;
  Vec z_tilde;
  HypervolumeResult hv;
  std::string stop_reason;
};

/// The front used for the summary's hypervolume: nondominated filter applied
/// to the feasible points of the final population.
Mat summary_front(const RunResult& result);

RunSummary summarize(const RunResult& result,
                     std::optional<Vec> hv_ref_point = std::nullopt);

}  // namespace moead

#endif  // MOEAD_METRICS_HPP_
