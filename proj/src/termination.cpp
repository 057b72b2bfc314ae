#include "moead/termination.hpp"

#include <stdexcept>

namespace moead {

MaxIterations::MaxIterations(long long limit) : limit_(limit) {
  if (limit < 0) throw std::invalid_argument("max_iter: limit must be nonnegative");
}

StopStatus MaxIterations::check(const RunProgress& p) const {
  if (p.iterations >= limit_) return {true, name()};
  return {};
}

MaxEvaluations::MaxEvaluations(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("max_eval: limit must be positive");
}

StopStatus MaxEvaluations::check(const RunProgress& p) const {
  if (p.evaluations >= limit_) return {true, name()};
  return {};
}

MaxProcessTime::MaxProcessTime(double seconds) : seconds_(seconds) {
  if (seconds < 0.0) throw std::invalid_argument("max_time: limit must be nonnegative");
}

StopStatus MaxProcessTime::check(const RunProgress& p) const {
  if (p.process_seconds >= seconds_) return {true, name()};
  return {};
}

StopStatus check_stop(const std::vector<std::unique_ptr<StopCriterion>>& criteria,
                      const RunProgress& p) {
  for (const auto& c : criteria) {
    const StopStatus s = c->check(p);
    if (s.stop) return s;
  }
  return {};
}

}  // namespace moead
