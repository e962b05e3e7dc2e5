#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "holoform/report.hpp"

namespace holoform {

/// Invalid flag value or combination; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string command;  // weights, fracderiv, norm, carleson, verify, ode
  std::string space = "p=2,s=0.5,sigma=0.4,K=power:q=0.3";
  std::string function;  // test function spec
  std::string weight;    // weights: overrides the space's K
  std::optional<double> sigma;
  std::string theorem;      // verify: 21 23 29 25 28 gap; ode: 31 32
  std::string params_path;  // verify
  std::string system_path;  // ode
  double t = 1.5;           // fracderiv order
  std::optional<double> b;  // kernel parameter, default_b when unset
  int quad_depth = 8;
  int quad_angles = 512;
  int sup_depth = 6;
  int sup_rotations = 16;
  int terms = 256;
  double slack = 100.0;
  double threshold = 1e-2;  // ode smallness threshold
  std::uint64_t seed = 1;
  std::string m_variant = "proof";
  bool relaxed_t = false;
  bool cor29_literal = false;

  /// Bounds J <= 12, M <= 4096, sup depth <= 10 and the enumerations.
  void validate() const;
  Resolution resolution() const;
};

/// Runs one command. Config problems throw ConfigError or ParseError; numerical
/// overflow inside a row becomes an error row and the run continues.
ResultTable run_experiment(const ExperimentConfig& cfg);

}  // namespace holoform
