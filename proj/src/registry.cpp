#include "moead/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace moead {

namespace {

std::string spec_name(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key) || !spec[key].is_string())
    throw std::invalid_argument(std::string("component spec is missing the '") + key +
                                "' field");
  return spec[key].get<std::string>();
}

template <typename F>
const F& as(const ComponentFactory& f, const std::string& role, const std::string& name) {
  const F* ptr = std::get_if<F>(&f);
  if (!ptr)
    throw std::invalid_argument("component '" + name + "' registered under role '" + role +
                                "' has the wrong factory type");
  return *ptr;
}

int role_index(const std::string& role) {
  const auto& names = ComponentRegistry::roles();
  const auto it = std::find(names.begin(), names.end(), role);
  if (it == names.end()) throw std::invalid_argument("unknown component role: " + role);
  return static_cast<int>(it - names.begin());
}

bool factory_matches_role(const std::string& role, const ComponentFactory& f) {
  switch (role_index(role)) {
    case 0: return std::holds_alternative<DecompositionFactory>(f);
    case 1: return std::holds_alternative<ScalarizationFactory>(f);
    case 2: return std::holds_alternative<NeighborhoodFactory>(f);
    case 3: return std::holds_alternative<VariationFactory>(f);
    case 4: return std::holds_alternative<LocalSearchFactory>(f);
    case 5: return std::holds_alternative<UpdateFactory>(f);
    case 6: return std::holds_alternative<ConstraintFactory>(f);
    case 7: return std::holds_alternative<StopFactory>(f);
    case 8: return std::holds_alternative<ProblemFactory>(f);
    default: return false;
  }
}

}  // namespace

double param_number(const json& spec, const std::string& key, double fallback) {
  if (!spec.contains(key)) return fallback;
  if (!spec[key].is_number())
    throw std::invalid_argument("parameter '" + key + "' must be a number");
  return spec[key].get<double>();
}

double require_number(const json& spec, const std::string& key) {
  if (!spec.contains(key) || !spec[key].is_number())
    throw std::invalid_argument("required numeric parameter '" + key + "' is missing");
  return spec[key].get<double>();
}

int param_int(const json& spec, const std::string& key, int fallback) {
  if (!spec.contains(key)) return fallback;
  if (!spec[key].is_number_integer())
    throw std::invalid_argument("parameter '" + key + "' must be an integer");
  return spec[key].get<int>();
}

int require_int(const json& spec, const std::string& key) {
  if (!spec.contains(key) || !spec[key].is_number_integer())
    throw std::invalid_argument("required integer parameter '" + key + "' is missing");
  return spec[key].get<int>();
}

std::string param_string(const json& spec, const std::string& key,
                         const std::string& fallback) {
  if (!spec.contains(key)) return fallback;
  if (!spec[key].is_string())
    throw std::invalid_argument("parameter '" + key + "' must be a string");
  return spec[key].get<std::string>();
}

std::string require_string(const json& spec, const std::string& key) {
  if (!spec.contains(key) || !spec[key].is_string())
    throw std::invalid_argument("required string parameter '" + key + "' is missing");
  return spec[key].get<std::string>();
}

const std::vector<std::string>& ComponentRegistry::roles() {
  static const std::vector<std::string> kRoles = {
      "decomposition", "scalarization", "neighborhood", "variation", "localsearch",
      "update",        "constraint",    "stop",         "problem"};
  return kRoles;
}

void ComponentRegistry::register_component(const std::string& role, const std::string& name,
                                           ComponentFactory factory) {
  role_index(role);  // validates the role
  if (!factory_matches_role(role, factory))
    throw std::invalid_argument("factory type does not match role '" + role + "'");
  auto& slot = by_role_[role];
  if (slot.count(name))
    throw std::invalid_argument("component '" + name + "' already registered for role '" +
                                role + "'");
  slot.emplace(name, std::move(factory));
}

std::vector<std::string> ComponentRegistry::list(const std::string& role) const {
  role_index(role);
  std::vector<std::string> names;
  const auto it = by_role_.find(role);
  if (it != by_role_.end())
    for (const auto& [name, factory] : it->second) names.push_back(name);
  return names;  // std::map iteration is already sorted
}

bool ComponentRegistry::contains(const std::string& role, const std::string& name) const {
  const auto it = by_role_.find(role);
  return it != by_role_.end() && it->second.count(name) > 0;
}

const ComponentFactory& ComponentRegistry::find(const std::string& role, const json& spec,
                                                const char* key) const {
  const std::string name = spec_name(spec, key);
  const auto it = by_role_.find(role);
  if (it == by_role_.end() || !it->second.count(name))
    throw std::invalid_argument("no component named '" + name + "' for role '" + role + "'");
  return it->second.at(name);
}

WeightMatrix ComponentRegistry::make_weights(const json& spec, int n_f) const {
  const auto& f = find("decomposition", spec);
  return as<DecompositionFactory>(f, "decomposition", spec_name(spec, "name"))(n_f, spec);
}

std::unique_ptr<Scalarization> ComponentRegistry::make_scalarization(const json& spec) const {
  const auto& f = find("scalarization", spec);
  return as<ScalarizationFactory>(f, "scalarization", spec_name(spec, "name"))(spec);
}

std::unique_ptr<NeighborhoodStrategy> ComponentRegistry::make_neighborhood(
    const json& spec) const {
  const auto& f = find("neighborhood", spec);
  return as<NeighborhoodFactory>(f, "neighborhood", spec_name(spec, "name"))(spec);
}

std::unique_ptr<VariationOperator> ComponentRegistry::make_variation(const json& spec) const {
  const auto& f = find("variation", spec);
  return as<VariationFactory>(f, "variation", spec_name(spec, "name"))(spec, *this);
}

std::unique_ptr<LocalSearchMethod> ComponentRegistry::make_localsearch(const json& spec) const {
  const auto& f = find("localsearch", spec, "type");
  return as<LocalSearchFactory>(f, "localsearch", spec_name(spec, "type"))(spec);
}

std::unique_ptr<UpdateStrategy> ComponentRegistry::make_update(const json& spec) const {
  const auto& f = find("update", spec);
  return as<UpdateFactory>(f, "update", spec_name(spec, "name"))(spec);
}

std::unique_ptr<ConstraintPolicy> ComponentRegistry::make_constraint(const json& spec) const {
  const auto& f = find("constraint", spec);
  return as<ConstraintFactory>(f, "constraint", spec_name(spec, "name"))(spec);
}

std::unique_ptr<StopCriterion> ComponentRegistry::make_stop(const json& spec) const {
  const auto& f = find("stop", spec);
  return as<StopFactory>(f, "stop", spec_name(spec, "name"))(spec);
}

BenchmarkProblem ComponentRegistry::make_problem(const json& spec) const {
  const auto& f = find("problem", spec);
  return as<ProblemFactory>(f, "problem", spec_name(spec, "name"))(spec);
}

namespace {

// --- built-in variation operator components ---

class SbxOperator final : public VariationOperator {
 public:
  explicit SbxOperator(SbxParams par) : par_(par) {}
  Mat apply(const VariationContext& ctx, const Mat& cur,
            const std::vector<bool>& ls) const override {
    return sbx(cur, *ctx.sampler, par_, *ctx.rng, &ls);
  }

 private:
  SbxParams par_;
};

class PolyMutOperator final : public VariationOperator {
 public:
  PolyMutOperator(double eta, double pm_or_negative) : eta_(eta), pm_(pm_or_negative) {}
  Mat apply(const VariationContext& ctx, const Mat& cur,
            const std::vector<bool>& ls) const override {
    PolyMutParams par;
    par.eta = eta_;
    par.pm = pm_ >= 0.0 ? pm_ : 1.0 / static_cast<double>(ncols(cur));
    return polynomial_mutation(cur, par, *ctx.rng, &ls);
  }

 private:
  double eta_;
  double pm_;  // negative means the 1/n_v default
};

class DiffMutOperator final : public VariationOperator {
 public:
  explicit DiffMutOperator(DiffMutParams par) : par_(par) {}
  Mat apply(const VariationContext& ctx, const Mat& cur,
            const std::vector<bool>& ls) const override {
    const auto pool_agg = [&](int point, int subproblem) {
      return ctx.aggregate((*ctx.incumbent_obj)[static_cast<std::size_t>(point)], subproblem);
    };
    return differential_mutation(cur, *ctx.sampler, *ctx.neighbors, pool_agg, par_, *ctx.rng,
                                 &ls);
  }

 private:
  DiffMutParams par_;
};

class BinRecOperator final : public VariationOperator {
 public:
  explicit BinRecOperator(double rho) : rho_(rho) {}
  Mat apply(const VariationContext& ctx, const Mat& cur,
            const std::vector<bool>& ls) const override {
    return binomial_recombination(cur, *ctx.incumbents, rho_, *ctx.rng, &ls);
  }

 private:
  double rho_;
};

class TruncateOperator final : public VariationOperator {
 public:
  Mat apply(const VariationContext&, const Mat& cur,
            const std::vector<bool>& ls) const override {
    return truncate(cur, &ls);
  }
};

class GaussMutOperator final : public VariationOperator {
 public:
  explicit GaussMutOperator(GaussMutParams par) : par_(par) {}
  Mat apply(const VariationContext& ctx, const Mat& cur,
            const std::vector<bool>& ls) const override {
    return gaussian_mutation(cur, par_, *ctx.rng, &ls);
  }

 private:
  GaussMutParams par_;
};

DiffMutBasis parse_basis(const std::string& s) {
  if (s == "rand") return DiffMutBasis::kRand;
  if (s == "mean") return DiffMutBasis::kMean;
  if (s == "wgi") return DiffMutBasis::kWgi;
  throw std::invalid_argument("diffmut: unknown basis '" + s + "'");
}

VbrVariant parse_vbr_variant(const std::string& s) {
  if (s == "ts") return VbrVariant::kTs;
  if (s == "sr") return VbrVariant::kSr;
  if (s == "vt") return VbrVariant::kVt;
  throw std::invalid_argument("vbr: unknown variant '" + s + "'");
}

}  // namespace

ComponentRegistry make_default_registry() {
  ComponentRegistry reg;

  // Decomposition
  reg.register_component("decomposition", "sld",
                         DecompositionFactory([](int n_f, const json& spec) {
                           return decompose_sld(require_int(spec, "h"), n_f);
                         }));
  reg.register_component(
      "decomposition", "msld", DecompositionFactory([](int n_f, const json& spec) {
        if (!spec.contains("h") || !spec["h"].is_array())
          throw std::invalid_argument("msld: parameter 'h' must be an integer array");
        const std::vector<int> h = spec["h"].get<std::vector<int>>();
        Vec tau;
        if (spec.contains("tau")) {
          tau = spec["tau"].get<Vec>();
        } else {
          // Documented heuristic default: tau_k = k / K.
          tau.resize(h.size());
          for (std::size_t k = 0; k < h.size(); ++k)
            tau[k] = static_cast<double>(k + 1) / static_cast<double>(h.size());
        }
        return decompose_msld(h, tau, n_f);
      }));
  reg.register_component("decomposition", "uniform",
                         DecompositionFactory([](int n_f, const json& spec) {
                           return decompose_uniform(require_int(spec, "N"), n_f);
                         }));

  // Scalarization
  struct WsScalarization final : Scalarization {
    double value(const Vec& y, const Vec& l, const ReferencePoints& r) const override {
      return ws_value(y, l, r.ideal);
    }
  };
  struct WtScalarization final : Scalarization {
    double value(const Vec& y, const Vec& l, const ReferencePoints& r) const override {
      return wt_value(y, l, r.ideal);
    }
  };
  struct AwtScalarization final : Scalarization {
    double eps;
    explicit AwtScalarization(double e) : eps(e) {}
    double value(const Vec& y, const Vec& l, const ReferencePoints& r) const override {
      return awt_value(y, l, r.ideal, eps);
    }
  };
  struct PbiScalarization final : Scalarization {
    double theta;
    explicit PbiScalarization(double t) : theta(t) {}
    double value(const Vec& y, const Vec& l, const ReferencePoints& r) const override {
      return pbi_value(y, l, r.ideal, theta);
    }
  };
  struct IpbiScalarization final : Scalarization {
    double theta;
    explicit IpbiScalarization(double t) : theta(t) {}
    double value(const Vec& y, const Vec& l, const ReferencePoints& r) const override {
      return ipbi_value(y, l, r.nadir, theta);
    }
  };
  reg.register_component("scalarization", "ws", ScalarizationFactory([](const json&) {
                           return std::make_unique<WsScalarization>();
                         }));
  reg.register_component("scalarization", "wt", ScalarizationFactory([](const json&) {
                           return std::make_unique<WtScalarization>();
                         }));
  reg.register_component("scalarization", "awt", ScalarizationFactory([](const json& s) {
                           return std::make_unique<AwtScalarization>(
                               param_number(s, "epsilon", 1e-4));
                         }));
  reg.register_component("scalarization", "pbi", ScalarizationFactory([](const json& s) {
                           const double theta = param_number(s, "theta", 5.0);
                           if (theta < 0.0)
                             throw std::invalid_argument("pbi: theta must be >= 0");
                           return std::make_unique<PbiScalarization>(theta);
                         }));
  reg.register_component("scalarization", "ipbi", ScalarizationFactory([](const json& s) {
                           const double theta = param_number(s, "theta", 5.0);
                           if (theta < 0.0)
                             throw std::invalid_argument("ipbi: theta must be >= 0");
                           return std::make_unique<IpbiScalarization>(theta);
                         }));

  // Neighborhood
  reg.register_component("neighborhood", "lambda", NeighborhoodFactory([](const json&) {
                           return std::make_unique<LambdaNeighborhood>();
                         }));
  reg.register_component("neighborhood", "x", NeighborhoodFactory([](const json&) {
                           return std::make_unique<XNeighborhood>();
                         }));

  // Variation
  reg.register_component("variation", "sbx",
                         VariationFactory([](const json& s, const ComponentRegistry&) {
                           SbxParams par;
                           par.eta = param_number(s, "eta", 20.0);
                           par.pc = param_number(s, "pc", 1.0);
                           return std::make_unique<SbxOperator>(par);
                         }));
  reg.register_component("variation", "polymut",
                         VariationFactory([](const json& s, const ComponentRegistry&) {
                           return std::make_unique<PolyMutOperator>(
                               param_number(s, "eta", 20.0), param_number(s, "pm", -1.0));
                         }));
  reg.register_component("variation", "diffmut",
                         VariationFactory([](const json& s, const ComponentRegistry&) {
                           DiffMutParams par;
                           par.basis = parse_basis(param_string(s, "basis", "rand"));
                           if (s.contains("phi")) par.phi = require_number(s, "phi");
                           return std::make_unique<DiffMutOperator>(par);
                         }));
  reg.register_component("variation", "binrec",
                         VariationFactory([](const json& s, const ComponentRegistry&) {
                           return std::make_unique<BinRecOperator>(
                               param_number(s, "rho", 0.9));
                         }));
  reg.register_component("variation", "truncate",
                         VariationFactory([](const json&, const ComponentRegistry&) {
                           return std::make_unique<TruncateOperator>();
                         }));
  reg.register_component("variation", "localsearch",
                         VariationFactory([](const json& s, const ComponentRegistry& r) {
                           LocalSearchGate gate;
                           if (s.contains("tau_ls")) gate.tau = require_int(s, "tau_ls");
                           if (s.contains("gamma_ls"))
                             gate.gamma = require_number(s, "gamma_ls");
                           return std::make_unique<LocalSearchOperator>(gate,
                                                                        r.make_localsearch(s));
                         }));

  // Local-search methods
  reg.register_component("localsearch", "tpqa", LocalSearchFactory([](const json& s) {
                           return std::make_unique<TpqaLocalSearch>(
                               param_number(s, "epsilon", 1e-6));
                         }));
  reg.register_component("localsearch", "dvls", LocalSearchFactory([](const json&) {
                           return std::make_unique<DvlsLocalSearch>();
                         }));

  // Update strategies
  reg.register_component("update", "standard", UpdateFactory([](const json&) {
                           return std::make_unique<StandardUpdate>();
                         }));
  reg.register_component("update", "restricted", UpdateFactory([](const json& s) {
                           return std::make_unique<RestrictedUpdate>(require_int(s, "nr"));
                         }));
  reg.register_component("update", "best", UpdateFactory([](const json& s) {
                           return std::make_unique<BestSubproblemUpdate>(
                               require_int(s, "nr"), require_int(s, "Tr"));
                         }));

  // Constraint handling
  reg.register_component("constraint", "none", ConstraintFactory([](const json&) {
                           return std::make_unique<NoConstraintPolicy>();
                         }));
  reg.register_component("constraint", "penalty", ConstraintFactory([](const json& s) {
                           return std::make_unique<PenaltyPolicy>(require_number(s, "beta"));
                         }));
  reg.register_component("constraint", "vbr", ConstraintFactory([](const json& s) {
                           VbrParams par;
                           par.variant = parse_vbr_variant(require_string(s, "type"));
                           par.pf = param_number(s, "pf", 0.5);
                           if (par.pf < 0.0 || par.pf > 1.0)
                             throw std::invalid_argument("vbr: pf must lie in [0, 1]");
                           return std::make_unique<VbrPolicy>(par);
                         }));

  // Stop criteria
  reg.register_component("stop", "max_iter", StopFactory([](const json& s) {
                           return std::make_unique<MaxIterations>(require_int(s, "iterations"));
                         }));
  reg.register_component("stop", "max_eval", StopFactory([](const json& s) {
                           const int v = require_int(s, "evaluations");
                           if (v <= 0)
                             throw std::invalid_argument("max_eval: evaluations must be > 0");
                           return std::make_unique<MaxEvaluations>(
                               static_cast<std::uint64_t>(v));
                         }));
  reg.register_component("stop", "max_time", StopFactory([](const json& s) {
                           return std::make_unique<MaxProcessTime>(
                               require_number(s, "seconds"));
                         }));

  // Benchmark problems. Optional xmin/xmax entries (scalar or array)
  // override the built-in bounds.
  const auto with_bounds = [](BenchmarkProblem p, const json& s) {
    const auto read_bound = [&](const char* key, Vec& target) {
      if (!s.contains(key)) return;
      if (s[key].is_number())
        target.assign(target.size(), s[key].get<double>());
      else
        target = s[key].get<Vec>();
    };
    read_bound("xmin", p.def.xmin);
    read_bound("xmax", p.def.xmax);
    p.def.validate();
    return p;
  };
  reg.register_component("problem", "sphere-rastrigin",
                         ProblemFactory([with_bounds](const json& s) {
                           return with_bounds(
                               make_problem("sphere-rastrigin", param_int(s, "n_v", 30)), s);
                         }));
  reg.register_component("problem", "zdt1", ProblemFactory([with_bounds](const json& s) {
                           return with_bounds(make_problem("zdt1", param_int(s, "n_v", 30)),
                                              s);
                         }));
  reg.register_component("problem", "dtlz2", ProblemFactory([with_bounds](const json& s) {
                           return with_bounds(make_problem("dtlz2", param_int(s, "n_v", 20),
                                                           param_int(s, "n_f", 3)),
                                              s);
                         }));

  return reg;
}

const ComponentRegistry& default_registry() {
  static const ComponentRegistry reg = make_default_registry();
  return reg;
}

}  // namespace moead
