#ifndef MOEAD_NEIGHBORHOOD_HPP_
#define MOEAD_NEIGHBORHOOD_HPP_

#include <string>

#include "moead/core.hpp"

namespace moead {

/// Neighbor table and sampling-probability matrix for the subproblems.
/// Row i of B lists the T subproblems closest to subproblem i (always
/// including i itself), ordered by ascending distance with ties broken by
/// ascending index. Row i of P is the two-valued sampling distribution used
/// when variation operators pick mates for subproblem i.
struct NeighborhoodTable {
  IMat B;
  Mat P;
  std::string type;  // "lambda" or "x"
  int T = 0;
  double delta_p = 1.0;
};

/// T nearest subproblems per row of the weight matrix (Euclidean distance).
IMat assign_neighborhood_by_lambda(const Mat& lambda, int T);

/// T nearest subproblems per row of the incumbent population. Recomputed
/// every iteration since incumbents move.
IMat assign_neighborhood_by_x(const Mat& x, int T);

/// Two-case sampling probabilities: delta_p/T inside the neighborhood,
/// (1 - delta_p)/(N - T) outside. Requires T < N whenever delta_p < 1.
Mat sampling_probabilities(const IMat& B, double delta_p, int N, int T);

/// Strategy interface used by the engine: by-lambda tables are built once
/// per run, by-x tables every iteration.
class NeighborhoodStrategy {
 public:
  virtual ~NeighborhoodStrategy() = default;
  virtual IMat build(const Mat& lambda, const Mat& x, int T) const = 0;
  virtual bool per_iteration() const = 0;
};

class LambdaNeighborhood final : public NeighborhoodStrategy {
 public:
  IMat build(const Mat& lambda, const Mat&, int T) const override {
    return assign_neighborhood_by_lambda(lambda, T);
  }
  bool per_iteration() const override { return false; }
};

class XNeighborhood final : public NeighborhoodStrategy {
 public:
  IMat build(const Mat&, const Mat& x, int T) const override {
    return assign_neighborhood_by_x(x, T);
  }
  bool per_iteration() const override { return true; }
};

/// Draws from the two-class distribution without replacement. Renormalizes
/// the remaining mass after each pick, so one invocation never returns the
/// same index twice. One uniform draw is consumed per selected index.
class NeighborhoodSampler {
 public:
  NeighborhoodSampler(const IMat& B, double delta_p, int N);

  /// k distinct indices for subproblem i. Throws std::runtime_error when the
  /// reachable pool is smaller than k (e.g. delta_p = 1 and k > T).
  IVec sample_distinct(int i, int k, Rng& rng) const;

  int population() const { return N_; }
  int neighborhood_size() const { return T_; }

 private:
  const IMat& B_;
  IMat outside_;  // per subproblem, ascending indices not in B[i]
  double delta_p_;
  int N_;
  int T_;
};

}  // namespace moead

#endif  // MOEAD_NEIGHBORHOOD_HPP_
