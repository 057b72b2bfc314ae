#include "moead/engine.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <limits>
#include <stdexcept>

namespace moead {

std::vector<std::string> preset_names() { return {"moead-de", "original"}; }

AlgorithmConfig preset(const std::string& name) {
  AlgorithmConfig c;
  if (name == "original") {
    c.decomposition = {{"name", "sld"}, {"h", 99}};
    c.scalarization = {{"name", "wt"}};
    c.scaling = "none";
    c.neighborhood = {{"name", "lambda"}, {"T", 20}, {"delta_p", 1.0}};
    c.variation = {json{{"name", "sbx"}, {"eta", 20.0}, {"pc", 1.0}},
                   json{{"name", "polymut"}, {"eta", 20.0}},
                   json{{"name", "truncate"}}};
    c.update = {{"name", "standard"}};
    c.constraint = {{"name", "none"}};
    c.stop = {json{{"name", "max_iter"}, {"iterations", 200}}};
    return c;
  }
  if (name == "moead-de") {
    c.decomposition = {{"name", "sld"}, {"h", 99}};
    c.scalarization = {{"name", "wt"}};
    c.scaling = "none";
    c.neighborhood = {{"name", "lambda"}, {"T", 20}, {"delta_p", 0.9}};
    c.variation = {json{{"name", "diffmut"}, {"basis", "rand"}},
                   json{{"name", "binrec"}, {"rho", 0.9}},
                   json{{"name", "polymut"}, {"eta", 20.0}},
                   json{{"name", "truncate"}}};
    c.update = {{"name", "restricted"}, {"nr", 2}};
    c.constraint = {{"name", "none"}};
    c.stop = {json{{"name", "max_iter"}, {"iterations", 200}}};
    return c;
  }
  std::string names;
  for (const std::string& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown preset '" + name + "'; available presets: " + names);
}

Mat initialize_population(int n_v, int N, Rng& rng) {
  if (N < 1) throw std::invalid_argument("initialize_population: N must be >= 1");
  if (n_v < 1) throw std::invalid_argument("initialize_population: n_v must be >= 1");
  Mat x(static_cast<std::size_t>(N), Vec(static_cast<std::size_t>(n_v)));
  for (auto& row : x)
    for (double& v : row) v = rng.uniform();
  return x;
}

namespace {

Vec column_max(const Mat& a, const Mat& b) {
  const std::size_t n_f = a.empty() ? ncols(b) : ncols(a);
  Vec out(n_f, -std::numeric_limits<double>::infinity());
  for (const Mat* m : {&a, &b})
    for (const Vec& row : *m)
      for (std::size_t j = 0; j < n_f; ++j) out[j] = std::max(out[j], row[j]);
  return out;
}

}  // namespace

RunResult run_moead(const ProblemDefinition& problem, const AlgorithmConfig& config,
                    const ComponentRegistry& registry) {
  problem.validate();
  const int n_f = problem.n_f;

  // Component resolution and configuration checks.
  WeightMatrix wm = registry.make_weights(config.decomposition, n_f);
  validate_weights(wm);
  const int N = wm.size();

  if (config.scaling != "none" && config.scaling != "simple")
    throw std::invalid_argument("scaling must be 'none' or 'simple'");
  const bool simple_scaling = config.scaling == "simple";

  const auto scalarization = registry.make_scalarization(config.scalarization);
  const auto nbhd_strategy = registry.make_neighborhood(config.neighborhood);
  const int T = require_int(config.neighborhood, "T");
  const double delta_p = param_number(config.neighborhood, "delta_p", 1.0);
  if (T < 1 || T > N)
    throw std::invalid_argument("neighborhood: T must satisfy 1 <= T <= N");
  if (delta_p < 0.0 || delta_p > 1.0)
    throw std::invalid_argument("neighborhood: delta_p must lie in [0, 1]");
  if (delta_p < 1.0 && T >= N)
    throw std::invalid_argument("neighborhood: delta_p < 1 requires T < N");

  std::vector<std::unique_ptr<VariationOperator>> ops;
  ops.reserve(config.variation.size());
  for (const json& spec : config.variation) ops.push_back(registry.make_variation(spec));
  const VariationStack stack(std::move(ops));

  const auto update = registry.make_update(config.update);
  for (const char* key : {"nr", "Tr"})
    if (config.update.contains(key)) {
      const int v = require_int(config.update, key);
      if (v < 1 || v > N)
        throw std::invalid_argument(std::string("update: ") + key +
                                    " must satisfy 1 <= value <= N");
    }

  const auto policy = registry.make_constraint(config.constraint);

  if (config.stop.empty())
    throw std::invalid_argument("at least one stop criterion must be configured");
  std::vector<std::unique_ptr<StopCriterion>> criteria;
  for (const json& spec : config.stop) criteria.push_back(registry.make_stop(spec));

  // State.
  RunState st;
  st.rng = Rng(config.seed);
  st.X = initialize_population(problem.n_v, N, st.rng);

  Vec z_history(static_cast<std::size_t>(n_f), std::numeric_limits<double>::infinity());
  const auto fold_minimum = [&](const Mat& y) {
    for (const Vec& row : y)
      for (int j = 0; j < n_f; ++j)
        z_history[static_cast<std::size_t>(j)] =
            std::min(z_history[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]);
  };

  {
    EvalResult init = evaluate_batch(problem, st.X, st.eval_count);
    st.Y = std::move(init.y);
    st.V = std::move(init.violations);
  }
  fold_minimum(st.Y);
  st.z_hat = z_history;
  st.z_tilde = column_max(st.Y, {});

  // Aggregation under the current reference estimates. With simple scaling
  // the scalarization sees objectives rescaled to [0,1] and unit reference
  // points.
  const Vec zeros(static_cast<std::size_t>(n_f), 0.0);
  const Vec ones(static_cast<std::size_t>(n_f), 1.0);
  const auto aggregate = [&](const Vec& y, int j) -> double {
    const Vec& lambda = wm.lambda[static_cast<std::size_t>(j)];
    if (!simple_scaling)
      return scalarization->value(y, lambda, ReferencePoints{st.z_hat, st.z_tilde});
    Vec scaled(static_cast<std::size_t>(n_f));
    for (int k = 0; k < n_f; ++k) {
      const std::size_t ks = static_cast<std::size_t>(k);
      const double range = st.z_tilde[ks] - st.z_hat[ks];
      scaled[ks] = range < 1e-16 ? 0.0 : (y[ks] - st.z_hat[ks]) / range;
    }
    return scalarization->value(scaled, lambda, ReferencePoints{zeros, ones});
  };

  if (policy->wants_archive()) st.archive.emplace(N);
  const auto archive_pass = [&]() {
    if (!st.archive) return;
    for (int j = 0; j < N; ++j) {
      const std::size_t js = static_cast<std::size_t>(j);
      st.archive->consider(j, st.X[js], st.Y[js], aggregate(st.Y[js], j), st.V[js]);
    }
  };
  archive_pass();

  // Neighborhoods: by-lambda tables are fixed for the whole run, by-x tables
  // refresh every iteration.
  IMat B;
  std::optional<NeighborhoodSampler> sampler;
  const auto build_neighborhood = [&]() {
    B = nbhd_strategy->build(wm.lambda, st.X, T);
    sampler.emplace(B, delta_p, N);
  };

  const auto evaluate_single = [&](const Vec& x_unit) -> Vec {
    Mat one(1, x_unit);
    EvalResult r = evaluate_batch(problem, one, st.eval_count);
    fold_minimum(r.y);
    return std::move(r.y.front());
  };

  RunResult result;
  result.seed = config.seed;
  result.population_size = N;

  const std::clock_t clock_start = std::clock();
  const auto progress = [&]() {
    return RunProgress{st.t, st.eval_count,
                       static_cast<double>(std::clock() - clock_start) / CLOCKS_PER_SEC};
  };

  StopStatus stop;
  while (!(stop = check_stop(criteria, progress())).stop) {
    if (st.t == 0 || nbhd_strategy->per_iteration()) build_neighborhood();

    // Candidate generation.
    VariationContext ctx;
    ctx.incumbents = &st.X;
    ctx.incumbent_obj = &st.Y;
    ctx.neighbors = &B;
    ctx.sampler = &*sampler;
    ctx.iteration = static_cast<int>(st.t);
    ctx.aggregate = aggregate;
    ctx.evaluate = evaluate_single;
    ctx.rng = &st.rng;
    Mat candidates = stack.apply(ctx, st.X);

    EvalResult cand;
    try {
      cand = evaluate_batch(problem, candidates, st.eval_count);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(std::string(e.what()) + " (iteration " +
                               std::to_string(st.t) + ")");
    }
    fold_minimum(cand.y);

    // Reference estimates for this iteration's scalarizations.
    st.z_hat = z_history;
    st.z_tilde = column_max(st.Y, cand.y);

    Vec incumbent_agg(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j)
      incumbent_agg[static_cast<std::size_t>(j)] =
          aggregate(st.Y[static_cast<std::size_t>(j)], j);

    Mat agg_cache(static_cast<std::size_t>(N),
                  Vec(static_cast<std::size_t>(N), std::numeric_limits<double>::quiet_NaN()));
    const auto candidate_agg = [&](int c, int j) -> double {
      double& slot = agg_cache[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      if (std::isnan(slot)) slot = aggregate(cand.y[static_cast<std::size_t>(c)], j);
      return slot;
    };

    UpdateContext uctx;
    uctx.N = N;
    uctx.B = &B;
    uctx.weights = &wm.lambda;
    uctx.candidate_agg = candidate_agg;
    uctx.incumbent_agg = [&](int j) { return incumbent_agg[static_cast<std::size_t>(j)]; };
    uctx.candidate_violation = &cand.violations;
    uctx.incumbent_violation = &st.V;
    uctx.policy = policy.get();
    uctx.rng = &st.rng;
    const IVec chosen = update->select(uctx);

    for (int j = 0; j < N; ++j) {
      const int c = chosen[static_cast<std::size_t>(j)];
      if (c < 0) continue;
      const std::size_t js = static_cast<std::size_t>(j);
      const std::size_t cs = static_cast<std::size_t>(c);
      st.X[js] = candidates[cs];
      st.Y[js] = cand.y[cs];
      st.V[js] = cand.violations[cs];
    }
    archive_pass();

    IterationRecord rec;
    rec.iteration = st.t;
    rec.evaluations = st.eval_count;
    rec.z_hat = st.z_hat;
    rec.z_tilde = st.z_tilde;
    double agg_sum = 0.0;
    for (int j = 0; j < N; ++j) agg_sum += aggregate(st.Y[static_cast<std::size_t>(j)], j);
    rec.mean_aggregation = agg_sum / N;
    result.trace.push_back(std::move(rec));

    ++st.t;
  }

  result.X = decode_population(st.X, problem.xmin, problem.xmax);
  result.Y = st.Y;
  result.V = st.V;
  result.weights = wm.lambda;
  result.z_hat = st.z_hat;
  result.z_tilde = st.z_tilde;
  result.evaluations = st.eval_count;
  result.iterations = st.t;
  result.stop_reason = stop.reason;
  if (st.archive) {
    ArchiveOutput out;
    for (int j = 0; j < N; ++j) {
      const auto& entry = st.archive->entry(j);
      if (!entry) continue;
      out.subproblems.push_back(j);
      out.X.push_back(decode_population({entry->x}, problem.xmin, problem.xmax).front());
      out.Y.push_back(entry->y);
      out.aggregation.push_back(entry->agg);
    }
    result.archive = std::move(out);
  }
  return result;
}

}  // namespace moead
