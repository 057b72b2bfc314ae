#ifndef MOEAD_CONFIG_HPP_
#define MOEAD_CONFIG_HPP_

#include <stdexcept>
#include <string>

#include "moead/engine.hpp"

namespace moead {

/// Configuration problem with the offending key attached, so the CLI can
/// name it in the diagnostic.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message + " (key: " + key + ")"), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Declarative run description loaded from a JSON document:
///   problem:   {"name": ..., <problem parameters>}
///   algorithm: AlgorithmConfig fields, optionally seeded from {"preset": n};
///              any field present replaces the preset's whole component spec
///   output:    {"dir": ...}
///   seed:      unsigned integer
struct RunConfig {
  json problem;
  AlgorithmConfig algorithm;
  std::string out_dir;  // empty = caller decides
};

/// Applies the component-level overrides present in `algorithm_block` on top
/// of `base`.
AlgorithmConfig merge_overrides(AlgorithmConfig base, const json& algorithm_block);

RunConfig parse_run_config(const json& doc);

}  // namespace moead

#endif  // MOEAD_CONFIG_HPP_
