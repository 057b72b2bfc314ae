#ifndef MOEAD_VARIATION_HPP_
#define MOEAD_VARIATION_HPP_

#include <functional>
#include <memory>
#include <optional>

#include "moead/neighborhood.hpp"

namespace moead {

/// Inputs shared by every operator in one pass of the variation stack.
/// All matrices are in the unit hypercube. `aggregate` scalarizes an
/// objective vector for a given subproblem under the current reference
/// estimates; `evaluate` decodes and evaluates a single row, charging the
/// run's evaluation budget (used only by local search).
struct VariationContext {
  const Mat* incumbents = nullptr;
  const Mat* incumbent_obj = nullptr;
  const IMat* neighbors = nullptr;
  const NeighborhoodSampler* sampler = nullptr;
  int iteration = 0;
  std::function<double(const Vec& y, int subproblem)> aggregate;
  std::function<Vec(const Vec& x_unit)> evaluate;
  Rng* rng = nullptr;
};

// Operator kernels. Each reads the full input matrix as a snapshot and
// returns the transformed matrix; rows flagged in `skip` pass through
// untouched and consume no draws. Per-row draws are consumed in ascending
// row order.

struct SbxParams {
  double eta = 20.0;
  double pc = 1.0;
};

/// Simulated binary recombination. Per row: one gate draw (applied when
/// u < pc), two mate picks, then one beta draw per coordinate.
Mat sbx(const Mat& xp, const NeighborhoodSampler& sampler, const SbxParams& par, Rng& rng,
        const std::vector<bool>* skip = nullptr);

struct PolyMutParams {
  double eta = 20.0;
  double pm = 0.05;
};

/// Polynomial mutation. Per coordinate: one Bernoulli gate draw (fires when
/// u < pm) and, when it fires, one beta draw.
Mat polynomial_mutation(const Mat& xp, const PolyMutParams& par, Rng& rng,
                        const std::vector<bool>* skip = nullptr);

enum class DiffMutBasis { kRand, kMean, kWgi };

struct DiffMutParams {
  DiffMutBasis basis = DiffMutBasis::kRand;
  /// Constant difference scale; when absent, phi ~ U(0,1] is drawn per row.
  std::optional<double> phi;
};

/// Differential mutation x~ = basis + phi * (x_a - x_b). Mates (and the rand
/// basis) are mutually exclusive picks; mean/wgi bases combine the
/// neighborhood rows, ordered for wgi by increasing pool_agg(point,
/// subproblem) value. Per row the draw order is: a, b, basis pick (rand
/// only), phi (sampled mode only).
Mat differential_mutation(const Mat& xp, const NeighborhoodSampler& sampler, const IMat& B,
                          const std::function<double(int point, int subproblem)>& pool_agg,
                          const DiffMutParams& par, Rng& rng,
                          const std::vector<bool>* skip = nullptr);

/// Binomial recombination against the unmodified incumbent matrix. Per row:
/// one draw per coordinate (donor kept when u <= rho), then one coordinate
/// pick for the guarantee step, which forces a donor coordinate whenever the
/// mixed row came out identical to the incumbent.
Mat binomial_recombination(const Mat& xp, const Mat& incumbents, double rho, Rng& rng,
                           const std::vector<bool>* skip = nullptr);

/// Truncation repair: elementwise clamp to [0, 1].
Mat truncate(Mat xp, const std::vector<bool>* skip = nullptr);

struct GaussMutParams {
  double mean = 0.0;
  double sd = 0.1;
  double p = 0.1;
};

/// Additive Gaussian noise masked by a Bernoulli(p) gate per coordinate.
Mat gaussian_mutation(const Mat& xp, const GaussMutParams& par, Rng& rng,
                      const std::vector<bool>* skip = nullptr);

/// Normalized log-rank weights w'_k = ln(T + 0.5) - ln(k), k = 1..T.
Vec wgi_weights(int T);

/// Three-point quadratic approximation over a candidate pool with known
/// aggregation values. Sorts the pool by (value, pool order), takes the three
/// best distinct rows and returns the per-coordinate quadratic vertex, falling
/// back to the best row's coordinate wherever the curvature term is below
/// eps. With fewer than three distinct rows the best row is returned.
Vec local_search_tpqa(const Mat& pool, const Vec& pool_agg, double eps);

/// One method invoked when local-search gating fires for a subproblem.
class LocalSearchMethod {
 public:
  virtual ~LocalSearchMethod() = default;
  virtual Vec improve(const VariationContext& ctx, const Mat& current, int subproblem) const = 0;
};

class TpqaLocalSearch final : public LocalSearchMethod {
 public:
  explicit TpqaLocalSearch(double eps = 1e-6);
  Vec improve(const VariationContext& ctx, const Mat& current, int subproblem) const override;

 private:
  double eps_;
};

class DvlsLocalSearch final : public LocalSearchMethod {
 public:
  Vec improve(const VariationContext& ctx, const Mat& current, int subproblem) const override;
};

/// One entry of the variation stack.
class VariationOperator {
 public:
  virtual ~VariationOperator() = default;
  virtual bool local_search() const { return false; }
  virtual Mat apply(const VariationContext& ctx, const Mat& current,
                    const std::vector<bool>& ls_rows) const = 0;
};

/// Gating for the local-search stack entry: either fire for every subproblem
/// once every tau iterations (skipping iteration 0), or fire per subproblem
/// with probability gamma, drawing one uniform per subproblem per iteration.
struct LocalSearchGate {
  std::optional<int> tau;
  std::optional<double> gamma;
};

class LocalSearchOperator final : public VariationOperator {
 public:
  LocalSearchOperator(LocalSearchGate gate, std::unique_ptr<LocalSearchMethod> method);
  bool local_search() const override { return true; }
  void fire(const VariationContext& ctx, std::vector<bool>& mask) const;
  Mat apply(const VariationContext& ctx, const Mat& current,
            const std::vector<bool>& ls_rows) const override;

 private:
  LocalSearchGate gate_;
  std::unique_ptr<LocalSearchMethod> method_;
};

/// Applies the operators in declared order. Rows gated for local search are
/// bypassed by every other operator and transformed only by the local-search
/// entry; the gate mask is decided (and any gating draws consumed) before the
/// first operator runs.
class VariationStack {
 public:
  explicit VariationStack(std::vector<std::unique_ptr<VariationOperator>> ops);
  Mat apply(const VariationContext& ctx, Mat x_prime) const;
  bool has_local_search() const { return ls_index_ >= 0; }

 private:
  std::vector<std::unique_ptr<VariationOperator>> ops_;
  int ls_index_ = -1;
};

}  // namespace moead

#endif  // MOEAD_VARIATION_HPP_
