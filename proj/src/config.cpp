#include "moead/config.hpp"

namespace moead {

AlgorithmConfig merge_overrides(AlgorithmConfig base, const json& a) {
  if (!a.is_object()) throw ConfigError("algorithm", "algorithm block must be an object");
  for (const auto& [key, value] : a.items()) {
    if (key == "preset") continue;
    if (key == "decomposition")
      base.decomposition = value;
    else if (key == "scalarization")
      base.scalarization = value;
    else if (key == "scaling") {
      if (!value.is_string())
        throw ConfigError("algorithm.scaling", "scaling must be a string");
      base.scaling = value.get<std::string>();
    } else if (key == "neighborhood")
      base.neighborhood = value;
    else if (key == "variation") {
      if (!value.is_array())
        throw ConfigError("algorithm.variation", "variation must be an array of operators");
      base.variation = std::vector<json>(value.begin(), value.end());
    } else if (key == "update")
      base.update = value;
    else if (key == "constraint")
      base.constraint = value;
    else if (key == "stop") {
      if (!value.is_array())
        throw ConfigError("algorithm.stop", "stop must be an array of criteria");
      base.stop = std::vector<json>(value.begin(), value.end());
    } else if (key == "seed") {
      if (!value.is_number_unsigned())
        throw ConfigError("algorithm.seed", "seed must be a nonnegative integer");
      base.seed = value.get<std::uint64_t>();
    } else {
      throw ConfigError("algorithm." + key, "unknown algorithm field");
    }
  }
  return base;
}

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "run config must be a JSON object");

  RunConfig rc;

  if (!doc.contains("problem") || !doc["problem"].is_object())
    throw ConfigError("problem", "missing problem block");
  rc.problem = doc["problem"];
  if (!rc.problem.contains("name") || !rc.problem["name"].is_string())
    throw ConfigError("problem.name", "problem name is required");

  AlgorithmConfig base;
  const json algorithm = doc.contains("algorithm") ? doc["algorithm"] : json::object();
  if (!algorithm.is_object())
    throw ConfigError("algorithm", "algorithm block must be an object");
  if (algorithm.contains("preset")) {
    if (!algorithm["preset"].is_string())
      throw ConfigError("algorithm.preset", "preset must be a string");
    try {
      base = preset(algorithm["preset"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("algorithm.preset", e.what());
    }
  }
  rc.algorithm = merge_overrides(std::move(base), algorithm);

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned())
      throw ConfigError("seed", "seed must be a nonnegative integer");
    rc.algorithm.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output", "output block must be an object");
    if (out.contains("dir")) {
      if (!out["dir"].is_string())
        throw ConfigError("output.dir", "output directory must be a string");
      rc.out_dir = out["dir"].get<std::string>();
    }
  }
  return rc;
}

}  // namespace moead
