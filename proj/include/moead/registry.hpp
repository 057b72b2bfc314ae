#ifndef MOEAD_REGISTRY_HPP_
#define MOEAD_REGISTRY_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moead/decomposition.hpp"
#include "moead/neighborhood.hpp"
#include "moead/problems.hpp"
#include "moead/scalarization.hpp"
#include "moead/termination.hpp"
#include "moead/update.hpp"
#include "moead/variation.hpp"

namespace moead {

using json = nlohmann::json;

class ComponentRegistry;

// Factory signatures per component role. Every factory receives the
// component's parameter object ({"name": ..., <parameters>}); variation
// factories additionally see the registry so composite operators (the
// local-search entry) can resolve their inner method.
using DecompositionFactory = std::function<WeightMatrix(int n_f, const json&)>;
using ScalarizationFactory = std::function<std::unique_ptr<Scalarization>(const json&)>;
using NeighborhoodFactory = std::function<std::unique_ptr<NeighborhoodStrategy>(const json&)>;
using VariationFactory =
    std::function<std::unique_ptr<VariationOperator>(const json&, const ComponentRegistry&)>;
using LocalSearchFactory = std::function<std::unique_ptr<LocalSearchMethod>(const json&)>;
using UpdateFactory = std::function<std::unique_ptr<UpdateStrategy>(const json&)>;
using ConstraintFactory = std::function<std::unique_ptr<ConstraintPolicy>(const json&)>;
using StopFactory = std::function<std::unique_ptr<StopCriterion>(const json&)>;
using ProblemFactory = std::function<BenchmarkProblem(const json&)>;

using ComponentFactory =
    std::variant<DecompositionFactory, ScalarizationFactory, NeighborhoodFactory,
                 VariationFactory, LocalSearchFactory, UpdateFactory, ConstraintFactory,
                 StopFactory, ProblemFactory>;

/// Name-based component lookup, one namespace per role. Roles:
/// decomposition, scalarization, neighborhood, variation, localsearch,
/// update, constraint, stop, problem.
class ComponentRegistry {
 public:
  static const std::vector<std::string>& roles();

  /// Registers a factory under (role, name). The factory variant must match
  /// the role; duplicate names within a role and unknown roles are rejected
  /// with std::invalid_argument.
  void register_component(const std::string& role, const std::string& name,
                          ComponentFactory factory);

  std::vector<std::string> list(const std::string& role) const;  // sorted
  bool contains(const std::string& role, const std::string& name) const;

  // Resolution; each throws std::invalid_argument when spec["name"] (or the
  // spec itself) does not resolve.
  WeightMatrix make_weights(const json& spec, int n_f) const;
  std::unique_ptr<Scalarization> make_scalarization(const json& spec) const;
  std::unique_ptr<NeighborhoodStrategy> make_neighborhood(const json& spec) const;
  std::unique_ptr<VariationOperator> make_variation(const json& spec) const;
  std::unique_ptr<LocalSearchMethod> make_localsearch(const json& spec) const;
  std::unique_ptr<UpdateStrategy> make_update(const json& spec) const;
  std::unique_ptr<ConstraintPolicy> make_constraint(const json& spec) const;
  std::unique_ptr<StopCriterion> make_stop(const json& spec) const;
  BenchmarkProblem make_problem(const json& spec) const;

 private:
  std::map<std::string, std::map<std::string, ComponentFactory>> by_role_;

  const ComponentFactory& find(const std::string& role, const json& spec,
                               const char* key = "name") const;
};

/// Fresh registry holding all built-in components.
ComponentRegistry make_default_registry();

/// Shared immutable instance of the default registry.
const ComponentRegistry& default_registry();

// Parameter helpers shared by factories and the config loader.
double param_number(const json& spec, const std::string& key, double fallback);
double require_number(const json& spec, const std::string& key);
int param_int(const json& spec, const std::string& key, int fallback);
int require_int(const json& spec, const std::string& key);
std::string param_string(const json& spec, const std::string& key, const std::string& fallback);
std::string require_string(const json& spec, const std::string& key);

}  // namespace moead

#endif  // MOEAD_REGISTRY_HPP_
