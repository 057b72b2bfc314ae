#ifndef MOEAD_UPDATE_HPP_
#define MOEAD_UPDATE_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "moead/problem.hpp"

namespace moead {

/// Total constraint violation of one point, with the per-constraint excess
/// parts: v = sum max(g_i, 0) + sum max(|h_j| - eps, 0). A point is feasible
/// within tolerance iff v = 0.
struct ViolationRecord {
  double total = 0.0;
  Vec g_excess;
  Vec h_excess;
};

std::vector<ViolationRecord> compute_violations(const ConstraintValues& c, double eq_tol);

/// Convenience form matching the evaluator interface; returns all-zero
/// records when constraint_fn is empty.
std::vector<ViolationRecord> compute_violations(
    const Mat& x_orig, const std::function<ConstraintValues(const Mat&)>& constraint_fn,
    double eq_tol);

/// f_pen = f_agg + beta_v * v, elementwise.
Vec penalized_aggregation(const Vec& agg, const Vec& v, double beta_v);

enum class VbrVariant { kTs, kSr, kVt };

struct VbrParams {
  VbrVariant variant = VbrVariant::kTs;
  double pf = 0.5;  // stochastic-ranking acceptance probability (sr only)
};

/// Violation-based ranking of one candidate set. Members are (aggregation,
/// violation) pairs in comparison order: incumbent first, then candidates by
/// ascending index. Feasible members, and infeasible ones passing the
/// variant's criterion, are ranked first by aggregation value; the rest
/// follow ranked by violation. Returns 1-based ranks aligned with members.
/// t_active enters the violation-threshold denominator (T + 1)^2 for the vt
/// variant. One uniform is drawn per infeasible member for sr, in member
/// order.
IVec vbr_rank(const std::vector<std::pair<double, double>>& members, const VbrParams& params,
              int t_active, Rng& rng);

/// Maps the (aggregation, violation) pairs of one candidate set to the keys
/// actually compared by the update strategies; lower is better.
class ConstraintPolicy {
 public:
  virtual ~ConstraintPolicy() = default;
  virtual Vec keys(const std::vector<std::pair<double, double>>& members, int t_active,
                   Rng& rng) const = 0;
  virtual bool wants_archive() const { return false; }
};

class NoConstraintPolicy final : public ConstraintPolicy {
 public:
  Vec keys(const std::vector<std::pair<double, double>>& members, int, Rng&) const override;
};

class PenaltyPolicy final : public ConstraintPolicy {
 public:
  explicit PenaltyPolicy(double beta_v);
  Vec keys(const std::vector<std::pair<double, double>>& members, int, Rng&) const override;

 private:
  double beta_v_;
};

class VbrPolicy final : public ConstraintPolicy {
 public:
  explicit VbrPolicy(VbrParams params) : params_(params) {}
  Vec keys(const std::vector<std::pair<double, double>>& members, int t_active,
           Rng& rng) const override;
  bool wants_archive() const override { return true; }

 private:
  VbrParams params_;
};

/// Everything an update strategy needs for one iteration. Candidate c was
/// produced for subproblem c and may replace incumbents of the subproblems in
/// its replacement set (its neighborhood row for the standard and restricted
/// strategies).
struct UpdateContext {
  int N = 0;
  const IMat* B = nullptr;
  const Mat* weights = nullptr;
  std::function<double(int c, int j)> candidate_agg;  // f_agg(x'_c | lambda_j)
  std::function<double(int j)> incumbent_agg;         // f_agg(x_j | lambda_j)
  const Vec* candidate_violation = nullptr;
  const Vec* incumbent_violation = nullptr;
  const ConstraintPolicy* policy = nullptr;
  Rng* rng = nullptr;
};

/// Selects the next incumbents. Entry j of the result is the candidate index
/// that replaces incumbent j, or -1 to keep the incumbent. Ties always favor
/// the incumbent, then the lowest candidate index.
class UpdateStrategy {
 public:
  virtual ~UpdateStrategy() = default;
  virtual IVec select(const UpdateContext& ctx) const = 0;
  /// Neighborhood cardinality used by the violation-threshold criterion.
  virtual int replacement_size(int T) const { return T; }
};

class StandardUpdate final : public UpdateStrategy {
 public:
  IVec select(const UpdateContext& ctx) const override;
};

class RestrictedUpdate final : public UpdateStrategy {
 public:
  explicit RestrictedUpdate(int n_r);
  IVec select(const UpdateContext& ctx) const override;

 private:
  int n_r_;
};

class BestSubproblemUpdate final : public UpdateStrategy {
 public:
  BestSubproblemUpdate(int n_r, int t_r);
  IVec select(const UpdateContext& ctx) const override;
  int replacement_size(int) const override { return t_r_; }

 private:
  int n_r_;
  int t_r_;
};

/// Per-subproblem store of the best feasible solution seen, kept because
/// violation-based ranking may drop feasible incumbents.
struct ArchiveEntry {
  Vec x;  // unit space
  Vec y;
  double agg = 0.0;
};

class Archive {
 public:
  explicit Archive(int n) : entries_(static_cast<std::size_t>(n)) {}

  void consider(int subproblem, const Vec& x, const Vec& y, double agg, double violation);

  const std::optional<ArchiveEntry>& entry(int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }
  int size() const { return static_cast<int>(entries_.size()); }

 private:
  std::vector<std::optional<ArchiveEntry>> entries_;
};

}  // namespace moead

#endif  // MOEAD_UPDATE_HPP_
