#include "moead/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moead {

namespace {

inline bool skipped(const std::vector<bool>* skip, std::size_t i) {
  return skip != nullptr && (*skip)[i];
}

inline double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

Mat sbx(const Mat& xp, const NeighborhoodSampler& sampler, const SbxParams& par, Rng& rng,
        const std::vector<bool>* skip) {
  if (par.eta <= 0.0) throw std::invalid_argument("sbx: eta must be positive");
  if (par.pc < 0.0 || par.pc > 1.0) throw std::invalid_argument("sbx: pc must lie in [0, 1]");

  const double exponent = 1.0 / (par.eta + 1.0);
  Mat out = xp;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;
    if (!(rng.uniform() < par.pc)) continue;
    const IVec mates = sampler.sample_distinct(static_cast<int>(i), 2, rng);
    const Vec& a = xp[static_cast<std::size_t>(mates[0])];
    const Vec& b = xp[static_cast<std::size_t>(mates[1])];
    Vec& child = out[i];
    for (std::size_t j = 0; j < child.size(); ++j) {
      const double u = rng.uniform();
      const double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                                   : std::pow(2.0 * (1.0 - u), exponent);
      child[j] = ((1.0 + beta) * a[j] + (1.0 - beta) * b[j]) / 2.0;
    }
  }
  return out;
}

Mat polynomial_mutation(const Mat& xp, const PolyMutParams& par, Rng& rng,
                        const std::vector<bool>* skip) {
  if (par.eta <= 0.0) throw std::invalid_argument("polymut: eta must be positive");
  if (par.pm < 0.0 || par.pm > 1.0)
    throw std::invalid_argument("polymut: pm must lie in [0, 1]");

  const double eta_prime = par.eta + 1.0;
  Mat out = xp;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      if (!(rng.uniform() < par.pm)) continue;
      const double u = rng.uniform();
      // The beta formula assumes coordinates in [0, 1]; earlier stack entries
      // may have pushed values outside, so the distance terms use the clamped
      // coordinate.
      const double x = clamp01(out[i][j]);
      double beta;
      if (u <= 0.5)
        beta = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - x, eta_prime),
                        1.0 / eta_prime) -
               1.0;
      else
        beta = 1.0 - std::pow(2.0 * (1.0 - u) + (2.0 * u - 1.0) * std::pow(x, eta_prime),
                              1.0 / eta_prime);
      out[i][j] += beta;
    }
  }
  return out;
}

Vec wgi_weights(int T) {
  Vec w(static_cast<std::size_t>(T));
  double sum = 0.0;
  for (int k = 1; k <= T; ++k) {
    w[static_cast<std::size_t>(k - 1)] = std::log(T + 0.5) - std::log(static_cast<double>(k));
    sum += w[static_cast<std::size_t>(k - 1)];
  }
  for (double& x : w) x /= sum;
  return w;
}

Mat differential_mutation(const Mat& xp, const NeighborhoodSampler& sampler, const IMat& B,
                          const std::function<double(int point, int subproblem)>& pool_agg,
                          const DiffMutParams& par, Rng& rng,
                          const std::vector<bool>* skip) {
  if (par.basis == DiffMutBasis::kRand && sampler.population() < 3)
    throw std::invalid_argument("diffmut: rand basis requires N >= 3");
  if (par.basis == DiffMutBasis::kWgi && !pool_agg)
    throw std::invalid_argument("diffmut: wgi basis requires aggregation values");

  const std::size_t n_v = ncols(xp);
  Mat out = xp;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;

    Vec basis;
    IVec picks;
    if (par.basis == DiffMutBasis::kRand) {
      picks = sampler.sample_distinct(static_cast<int>(i), 3, rng);
      basis = xp[static_cast<std::size_t>(picks[2])];
    } else {
      picks = sampler.sample_distinct(static_cast<int>(i), 2, rng);
      const IVec& nbrs = B[i];
      basis.assign(n_v, 0.0);
      if (par.basis == DiffMutBasis::kMean) {
        for (int k : nbrs)
          for (std::size_t j = 0; j < n_v; ++j) basis[j] += xp[static_cast<std::size_t>(k)][j];
        for (double& x : basis) x /= static_cast<double>(nbrs.size());
      } else {  // weighted global intermediate
        IVec order = nbrs;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
          const double ua = pool_agg(a, static_cast<int>(i));
          const double ub = pool_agg(b, static_cast<int>(i));
          return ua < ub || (ua == ub && a < b);
        });
        const Vec w = wgi_weights(static_cast<int>(order.size()));
        for (std::size_t k = 0; k < order.size(); ++k)
          for (std::size_t j = 0; j < n_v; ++j)
            basis[j] += w[k] * xp[static_cast<std::size_t>(order[k])][j];
      }
    }

    const double phi = par.phi ? *par.phi : rng.uniform_pos();
    const Vec& a = xp[static_cast<std::size_t>(picks[0])];
    const Vec& b = xp[static_cast<std::size_t>(picks[1])];
    Vec& row = out[i];
    for (std::size_t j = 0; j < n_v; ++j) row[j] = basis[j] + phi * (a[j] - b[j]);
  }
  return out;
}

Mat binomial_recombination(const Mat& xp, const Mat& incumbents, double rho, Rng& rng,
                           const std::vector<bool>* skip) {
  if (rho < 0.0 || rho > 1.0)
    throw std::invalid_argument("binrec: rho must lie in [0, 1]");
  if (xp.size() != incumbents.size())
    throw std::invalid_argument("binrec: incumbent matrix size mismatch");

  Mat out = xp;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;
    const Vec& donor = xp[i];
    const Vec& inc = incumbents[i];
    Vec& row = out[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = rng.uniform() <= rho ? donor[j] : inc[j];
    const int k = rng.uniform_int(static_cast<int>(row.size()));
    if (row == inc) row[static_cast<std::size_t>(k)] = donor[static_cast<std::size_t>(k)];
  }
  return out;
}

Mat truncate(Mat xp, const std::vector<bool>* skip) {
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;
    for (double& x : xp[i]) x = clamp01(x);
  }
  return xp;
}

Mat gaussian_mutation(const Mat& xp, const GaussMutParams& par, Rng& rng,
                      const std::vector<bool>* skip) {
  if (par.sd < 0.0) throw std::invalid_argument("gaussmut: sd must be nonnegative");
  if (par.p < 0.0 || par.p > 1.0)
    throw std::invalid_argument("gaussmut: p must lie in [0, 1]");

  Mat out = xp;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    if (skipped(skip, i)) continue;
    for (double& x : out[i])
      if (rng.uniform() < par.p) x += rng.normal(par.mean, par.sd);
  }
  return out;
}

Vec local_search_tpqa(const Mat& pool, const Vec& pool_agg, double eps) {
  if (pool.empty()) throw std::invalid_argument("tpqa: empty candidate pool");

  // Distinct rows in pool order, each with its aggregation value.
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool dup = false;
    for (std::size_t d : distinct)
      if (pool[d] == pool[i]) dup = true;
    if (!dup) distinct.push_back(i);
  }
  std::stable_sort(distinct.begin(), distinct.end(),
                   [&](std::size_t a, std::size_t b) { return pool_agg[a] < pool_agg[b]; });

  if (distinct.size() < 3) return pool[distinct.front()];

  const Vec& x1 = pool[distinct[0]];
  const Vec& x2 = pool[distinct[1]];
  const Vec& x3 = pool[distinct[2]];
  const double f1 = pool_agg[distinct[0]];
  const double f2 = pool_agg[distinct[1]];
  const double f3 = pool_agg[distinct[2]];

  Vec out(x1.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double q = (x2[j] - x3[j]) * f1 + (x3[j] - x1[j]) * f2 + (x1[j] - x2[j]) * f3;
    if (q < eps) {
      out[j] = x1[j];
    } else {
      out[j] = ((x2[j] * x2[j] - x3[j] * x3[j]) * f1 + (x3[j] * x3[j] - x1[j] * x1[j]) * f2 +
                (x1[j] * x1[j] - x2[j] * x2[j]) * f3) /
               (2.0 * q);
    }
  }
  return out;
}

TpqaLocalSearch::TpqaLocalSearch(double eps) : eps_(eps) {
  if (eps <= 0.0) throw std::invalid_argument("tpqa: epsilon must be positive");
}

Vec TpqaLocalSearch::improve(const VariationContext& ctx, const Mat&, int subproblem) const {
  // Candidate pool: the incumbent solutions of the neighborhood, whose
  // objectives are already known; the step therefore costs no evaluations.
  const IVec& nbrs = (*ctx.neighbors)[static_cast<std::size_t>(subproblem)];
  Mat pool;
  Vec agg;
  pool.reserve(nbrs.size());
  agg.reserve(nbrs.size());
  for (int k : nbrs) {
    pool.push_back((*ctx.incumbents)[static_cast<std::size_t>(k)]);
    agg.push_back(ctx.aggregate((*ctx.incumbent_obj)[static_cast<std::size_t>(k)], subproblem));
  }
  Vec row = local_search_tpqa(pool, agg, eps_);
  for (double& x : row) x = clamp01(x);
  return row;
}

Vec DvlsLocalSearch::improve(const VariationContext& ctx, const Mat& current,
                             int subproblem) const {
  const IVec& nbrs = (*ctx.neighbors)[static_cast<std::size_t>(subproblem)];
  IVec others;
  others.reserve(nbrs.size());
  for (int k : nbrs)
    if (k != subproblem) others.push_back(k);
  const Vec& incumbent = (*ctx.incumbents)[static_cast<std::size_t>(subproblem)];
  if (others.size() < 2) return incumbent;

  const int first = ctx.rng->uniform_int(static_cast<int>(others.size()));
  int second = ctx.rng->uniform_int(static_cast<int>(others.size()) - 1);
  if (second >= first) ++second;
  const Vec& a = current[static_cast<std::size_t>(others[static_cast<std::size_t>(first)])];
  const Vec& b = current[static_cast<std::size_t>(others[static_cast<std::size_t>(second)])];
  const double phi = ctx.rng->normal(0.5, 0.1);

  Vec plus(incumbent.size());
  Vec minus(incumbent.size());
  for (std::size_t j = 0; j < incumbent.size(); ++j) {
    const double d = phi * (a[j] - b[j]);
    plus[j] = clamp01(incumbent[j] + d);
    minus[j] = clamp01(incumbent[j] - d);
  }

  const Vec y_plus = ctx.evaluate(plus);
  const Vec y_minus = ctx.evaluate(minus);
  const double u0 =
      ctx.aggregate((*ctx.incumbent_obj)[static_cast<std::size_t>(subproblem)], subproblem);
  const double u_plus = ctx.aggregate(y_plus, subproblem);
  const double u_minus = ctx.aggregate(y_minus, subproblem);

  if (u_plus < u0 && u_plus <= u_minus) return plus;
  if (u_minus < u0 && u_minus < u_plus) return minus;
  return incumbent;
}

LocalSearchOperator::LocalSearchOperator(LocalSearchGate gate,
                                         std::unique_ptr<LocalSearchMethod> method)
    : gate_(gate), method_(std::move(method)) {
  if (gate_.tau.has_value() == gate_.gamma.has_value())
    throw std::invalid_argument("local search: configure exactly one of tau_ls, gamma_ls");
  if (gate_.tau && *gate_.tau < 1)
    throw std::invalid_argument("local search: tau_ls must be >= 1");
  if (gate_.gamma && (*gate_.gamma < 0.0 || *gate_.gamma > 1.0))
    throw std::invalid_argument("local search: gamma_ls must lie in [0, 1]");
}

void LocalSearchOperator::fire(const VariationContext& ctx, std::vector<bool>& mask) const {
  if (gate_.tau) {
    const bool on = ctx.iteration > 0 && ctx.iteration % *gate_.tau == 0;
    std::fill(mask.begin(), mask.end(), on);
    return;
  }
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = ctx.rng->uniform() < *gate_.gamma;
}

Mat LocalSearchOperator::apply(const VariationContext& ctx, const Mat& current,
                               const std::vector<bool>& ls_rows) const {
  Mat out = current;
  for (std::size_t i = 0; i < current.size(); ++i)
    if (ls_rows[i]) out[i] = method_->improve(ctx, current, static_cast<int>(i));
  return out;
}

VariationStack::VariationStack(std::vector<std::unique_ptr<VariationOperator>> ops)
    : ops_(std::move(ops)) {
  for (std::size_t k = 0; k < ops_.size(); ++k)
    if (ops_[k]->local_search()) {
      if (ls_index_ >= 0)
        throw std::invalid_argument("variation stack: at most one local-search entry");
      ls_index_ = static_cast<int>(k);
    }
}

Mat VariationStack::apply(const VariationContext& ctx, Mat x_prime) const {
  std::vector<bool> ls_rows(x_prime.size(), false);
  if (ls_index_ >= 0)
    static_cast<const LocalSearchOperator*>(ops_[static_cast<std::size_t>(ls_index_)].get())
        ->fire(ctx, ls_rows);
  for (const auto& op : ops_) x_prime = op->apply(ctx, x_prime, ls_rows);
  return x_prime;
}

}  // namespace moead
