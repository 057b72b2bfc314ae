#ifndef MOEAD_ENGINE_HPP_
#define MOEAD_ENGINE_HPP_

#include <optional>
#include <string>

#include "moead/registry.hpp"

namespace moead {

/// One component selection plus parameter bag per algorithmic role. Every
/// json entry carries at least a "name" field resolved through the registry.
struct AlgorithmConfig {
  json decomposition = {{"name", "sld"}, {"h", 99}};
  json scalarization = {{"name", "wt"}};
  std::string scaling = "none";  // "none" | "simple"
  json neighborhood = {{"name", "lambda"}, {"T", 20}, {"delta_p", 1.0}};
  std::vector<json> variation;
  json update = {{"name", "standard"}};
  json constraint = {{"name", "none"}};
  std::vector<json> stop;
  std::uint64_t seed = 42;
};

/// Named baseline configurations. "original" is the classic SBX + polynomial
/// mutation variant with exclusive neighborhood sampling; "moead-de" the
/// differential-evolution variant with restricted replacement. Values the
/// sources leave unstated follow their canonical settings (see README).
AlgorithmConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// Engine state across one run; population matrices live in the unit
/// hypercube until the final decode.
struct RunState {
  long long t = 0;
  Mat X;
  Mat Y;
  Vec V;
  Vec z_hat;
  Vec z_tilde;
  std::uint64_t eval_count = 0;
  Rng rng;
  std::optional<Archive> archive;
};

struct IterationRecord {
  long long iteration = 0;
  std::uint64_t evaluations = 0;
  Vec z_hat;
  Vec z_tilde;
  double mean_aggregation = 0.0;
};

/// Archive contents decoded to the original decision space; parallel arrays
/// over the subproblems that hold a feasible entry.
struct ArchiveOutput {
  IVec subproblems;
  Mat X;
  Mat Y;
  Vec aggregation;
};

struct RunResult {
  Mat X;  // original decision space
  Mat Y;
  Vec V;
  Mat weights;
  std::vector<IterationRecord> trace;
  Vec z_hat;
  Vec z_tilde;
  std::uint64_t evaluations = 0;
  long long iterations = 0;
  int population_size = 0;
  std::string stop_reason;
  std::uint64_t seed = 0;
  std::optional<ArchiveOutput> archive;
};

/// I.i.d. uniform population in [0,1]^{N x n_v}; entries drawn in row-major
/// order.
Mat initialize_population(int n_v, int N, Rng& rng);

/// Runs the full optimization loop: per iteration, neighborhoods are defined
/// or updated, the incumbent set is copied and transformed by the variation
/// stack, incumbents and candidates are evaluated under the configured
/// scalarization and constraint policy, the update strategy selects the next
/// population, and the stop criteria are checked. Evaluation accounting is
/// N at initialization plus N per iteration (plus local-search extras).
RunResult run_moead(const ProblemDefinition& problem, const AlgorithmConfig& config,
                    const ComponentRegistry& registry = default_registry());

}  // namespace moead

#endif  // MOEAD_ENGINE_HPP_
