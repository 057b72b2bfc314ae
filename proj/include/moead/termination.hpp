#ifndef MOEAD_TERMINATION_HPP_
#define MOEAD_TERMINATION_HPP_

#include <memory>
#include <string>
#include <vector>

#include "moead/core.hpp"

namespace moead {

/// Counters a stop criterion may look at. Checked once per iteration (and
/// once before the first), so the evaluation budget may overshoot by up to
/// one iteration's cost.
struct RunProgress {
  long long iterations = 0;
  std::uint64_t evaluations = 0;
  double process_seconds = 0.0;  // CPU time of this process since run start
};

struct StopStatus {
  bool stop = false;
  std::string reason;
};

class StopCriterion {
 public:
  virtual ~StopCriterion() = default;
  virtual StopStatus check(const RunProgress& p) const = 0;
  virtual std::string name() const = 0;
};

class MaxIterations final : public StopCriterion {
 public:
  explicit MaxIterations(long long limit);
  StopStatus check(const RunProgress& p) const override;
  std::string name() const override { return "max_iter"; }

 private:
  long long limit_;
};

class MaxEvaluations final : public StopCriterion {
 public:
  explicit MaxEvaluations(std::uint64_t limit);
  StopStatus check(const RunProgress& p) const override;
  std::string name() const override { return "max_eval"; }

 private:
  std::uint64_t limit_;
};

/// Process time, not wall clock.
class MaxProcessTime final : public StopCriterion {
 public:
  explicit MaxProcessTime(double seconds);
  StopStatus check(const RunProgress& p) const override;
  std::string name() const override { return "max_time"; }

 private:
  double seconds_;
};

/// Criteria combine with OR; the first one met names the stop reason.
StopStatus check_stop(const std::vector<std::unique_ptr<StopCriterion>>& criteria,
                      const RunProgress& p);

}  // namespace moead

#endif  // MOEAD_TERMINATION_HPP_
