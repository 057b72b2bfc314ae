#include "moead/update.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moead {

std::vector<ViolationRecord> compute_violations(const ConstraintValues& c, double eq_tol) {
  const std::size_t n = std::max(c.g.size(), c.h.size());
  std::vector<ViolationRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    ViolationRecord& r = out[i];
    if (!c.g.empty()) {
      r.g_excess.reserve(c.g[i].size());
      for (double g : c.g[i]) {
        if (!std::isfinite(g))
          throw std::runtime_error("constraints: non-finite inequality value");
        r.g_excess.push_back(std::max(g, 0.0));
        r.total += r.g_excess.back();
      }
    }
    if (!c.h.empty()) {
      r.h_excess.reserve(c.h[i].size());
      for (double h : c.h[i]) {
        if (!std::isfinite(h))
          throw std::runtime_error("constraints: non-finite equality value");
        r.h_excess.push_back(std::max(std::abs(h) - eq_tol, 0.0));
        r.total += r.h_excess.back();
      }
    }
  }
  return out;
}

std::vector<ViolationRecord> compute_violations(
    const Mat& x_orig, const std::function<ConstraintValues(const Mat&)>& constraint_fn,
    double eq_tol) {
  if (!constraint_fn) return std::vector<ViolationRecord>(x_orig.size());
  return compute_violations(constraint_fn(x_orig), eq_tol);
}

Vec penalized_aggregation(const Vec& agg, const Vec& v, double beta_v) {
  if (agg.size() != v.size())
    throw std::invalid_argument("penalized_aggregation: size mismatch");
  Vec out(agg.size());
  for (std::size_t i = 0; i < agg.size(); ++i) out[i] = agg[i] + beta_v * v[i];
  return out;
}

IVec vbr_rank(const std::vector<std::pair<double, double>>& members, const VbrParams& params,
              int t_active, Rng& rng) {
  const std::size_t n = members.size();

  double eps_v = 0.0;
  if (params.variant == VbrVariant::kVt) {
    int feasible = 0;
    double vsum = 0.0;
    for (const auto& m : members) {
      if (m.second == 0.0) ++feasible;
      vsum += m.second;
    }
    const double card = static_cast<double>(t_active) + 1.0;
    eps_v = static_cast<double>(feasible) / (card * card) * vsum;
  }

  std::vector<std::size_t> by_agg;  // ranked by aggregation value
  std::vector<std::size_t> by_violation;
  for (std::size_t i = 0; i < n; ++i) {
    const bool feasible = members[i].second == 0.0;
    bool use_agg = feasible;
    if (!feasible) {
      switch (params.variant) {
        case VbrVariant::kTs:
          break;
        case VbrVariant::kSr:
          use_agg = rng.uniform() <= params.pf;
          break;
        case VbrVariant::kVt:
          use_agg = members[i].second <= eps_v;
          break;
      }
    }
    (use_agg ? by_agg : by_violation).push_back(i);
  }

  std::stable_sort(by_agg.begin(), by_agg.end(), [&](std::size_t a, std::size_t b) {
    return members[a].first < members[b].first;
  });
  std::stable_sort(by_violation.begin(), by_violation.end(),
                   [&](std::size_t a, std::size_t b) {
                     return members[a].second < members[b].second;
                   });

  IVec ranks(n);
  int rank = 1;
  for (std::size_t i : by_agg) ranks[i] = rank++;
  for (std::size_t i : by_violation) ranks[i] = rank++;
  return ranks;
}

Vec NoConstraintPolicy::keys(const std::vector<std::pair<double, double>>& members, int,
                             Rng&) const {
  Vec out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) out[i] = members[i].first;
  return out;
}

PenaltyPolicy::PenaltyPolicy(double beta_v) : beta_v_(beta_v) {
  if (beta_v <= 0.0) throw std::invalid_argument("penalty: beta_v must be positive");
}

Vec PenaltyPolicy::keys(const std::vector<std::pair<double, double>>& members, int,
                        Rng&) const {
  Vec out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    out[i] = members[i].first + beta_v_ * members[i].second;
  return out;
}

Vec VbrPolicy::keys(const std::vector<std::pair<double, double>>& members, int t_active,
                    Rng& rng) const {
  const IVec ranks = vbr_rank(members, params_, t_active, rng);
  Vec out(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) out[i] = static_cast<double>(ranks[i]);
  return out;
}

namespace {

// Candidate lists per subproblem: lists[j] holds, in ascending order, the
// candidates whose replacement set contains j.
IMat invert_replacement_sets(const IMat& sets, int N) {
  IMat lists(static_cast<std::size_t>(N));
  for (int c = 0; c < N; ++c)
    for (int j : sets[static_cast<std::size_t>(c)])
      lists[static_cast<std::size_t>(j)].push_back(c);
  for (IVec& l : lists) std::sort(l.begin(), l.end());
  return lists;
}

// Greedy capped assignment shared by all strategies. Keys are computed per
// subproblem in ascending order (fixing the draw order of stochastic
// policies); replacement slots are granted in order of decreasing
// improvement, ties broken by subproblem then candidate index. A cap of N
// never binds, which makes the standard strategy a special case.
IVec capped_select(const UpdateContext& ctx, const IMat& repl_sets, int cap, int t_active) {
  const int N = ctx.N;
  const IMat lists = invert_replacement_sets(repl_sets, N);

  struct Pair {
    double improvement;
    int subproblem;
    int candidate;
  };
  std::vector<Pair> pairs;
  for (int j = 0; j < N; ++j) {
    const IVec& cands = lists[static_cast<std::size_t>(j)];
    std::vector<std::pair<double, double>> members;
    members.reserve(cands.size() + 1);
    members.emplace_back(ctx.incumbent_agg(j),
                         (*ctx.incumbent_violation)[static_cast<std::size_t>(j)]);
    for (int c : cands)
      members.emplace_back(ctx.candidate_agg(c, j),
                           (*ctx.candidate_violation)[static_cast<std::size_t>(c)]);
    const Vec keys = ctx.policy->keys(members, t_active, *ctx.rng);
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (keys[k + 1] < keys[0])
        pairs.push_back({keys[0] - keys[k + 1], j, cands[k]});
  }

  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.improvement != b.improvement) return a.improvement > b.improvement;
    if (a.subproblem != b.subproblem) return a.subproblem < b.subproblem;
    return a.candidate < b.candidate;
  });

  IVec chosen(static_cast<std::size_t>(N), -1);
  IVec remaining(static_cast<std::size_t>(N), cap);
  for (const Pair& p : pairs) {
    if (chosen[static_cast<std::size_t>(p.subproblem)] != -1) continue;
    if (remaining[static_cast<std::size_t>(p.candidate)] <= 0) continue;
    chosen[static_cast<std::size_t>(p.subproblem)] = p.candidate;
    --remaining[static_cast<std::size_t>(p.candidate)];
  }
  return chosen;
}

int neighborhood_width(const UpdateContext& ctx) {
  return ctx.B->empty() ? 0 : static_cast<int>(ctx.B->front().size());
}

}  // namespace

IVec StandardUpdate::select(const UpdateContext& ctx) const {
  return capped_select(ctx, *ctx.B, ctx.N, neighborhood_width(ctx));
}

RestrictedUpdate::RestrictedUpdate(int n_r) : n_r_(n_r) {
  if (n_r < 1) throw std::invalid_argument("restricted update: n_r must be >= 1");
}

IVec RestrictedUpdate::select(const UpdateContext& ctx) const {
  return capped_select(ctx, *ctx.B, n_r_, neighborhood_width(ctx));
}

BestSubproblemUpdate::BestSubproblemUpdate(int n_r, int t_r) : n_r_(n_r), t_r_(t_r) {
  if (n_r < 1) throw std::invalid_argument("best update: n_r must be >= 1");
  if (t_r < 1) throw std::invalid_argument("best update: T_r must be >= 1");
}

IVec BestSubproblemUpdate::select(const UpdateContext& ctx) const {
  const int N = ctx.N;
  const Mat& w = *ctx.weights;

  // Step 1: the subproblem each candidate serves best (raw aggregation).
  IVec k_best(static_cast<std::size_t>(N), 0);
  for (int c = 0; c < N; ++c) {
    double best = ctx.candidate_agg(c, 0);
    int best_j = 0;
    for (int j = 1; j < N; ++j) {
      const double a = ctx.candidate_agg(c, j);
      if (a < best) {
        best = a;
        best_j = j;
      }
    }
    k_best[static_cast<std::size_t>(c)] = best_j;
  }

  // Step 2: replacement neighborhoods of the T_r nearest subproblems,
  // memoized per target subproblem.
  std::vector<IVec> nearest_cache(static_cast<std::size_t>(N));
  auto nearest = [&](int k) -> const IVec& {
    IVec& slot = nearest_cache[static_cast<std::size_t>(k)];
    if (slot.empty()) {
      std::vector<std::pair<double, int>> d(static_cast<std::size_t>(N));
      for (int j = 0; j < N; ++j)
        d[static_cast<std::size_t>(j)] = {
            squared_distance(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(j)]), j};
      std::stable_sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
      });
      slot.resize(static_cast<std::size_t>(t_r_));
      for (int t = 0; t < t_r_; ++t)
        slot[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(t)].second;
    }
    return slot;
  };

  IMat repl(static_cast<std::size_t>(N));
  for (int c = 0; c < N; ++c) repl[static_cast<std::size_t>(c)] = nearest(k_best[static_cast<std::size_t>(c)]);

  // Step 3: restricted replacement over the new sets.
  return capped_select(ctx, repl, n_r_, t_r_);
}

void Archive::consider(int subproblem, const Vec& x, const Vec& y, double agg,
                       double violation) {
  if (violation != 0.0) return;
  auto& slot = entries_[static_cast<std::size_t>(subproblem)];
  if (!slot || agg < slot->agg) slot = ArchiveEntry{x, y, agg};
}

}  // namespace moead
