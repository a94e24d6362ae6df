#ifndef BREGMAN_CONFIG_HPP
#define BREGMAN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "bregman/common.hpp"

namespace bregman {

/// All validation failures of a config, one message per offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Flat key=value experiment description with [section] headers; one
/// experiment per file. Unknown keys are rejected.
struct ExperimentConfig {
  std::string kind;  // run | probe-a | probe-b | counterexample | blowup | diagnose
  unsigned long long seed = 0;

  std::string generator;  // neg_entropy | fermi_dirac | ball_gen | half_squared_norm
  std::string domain_kind;  // simplex | box | ball (defaulted per generator)
  int dim = 0;              // defaulted per generator

  std::string objective;  // linear | quadratic | abs_deviation | constant
  Vec objective_c;
  Vec objective_center;

  std::string algorithm;  // mirror_descent | bregman_gradient | proximal_d |
                          // alternating_projections
  int iterations = 1000;          // K
  std::optional<double> alpha0;   // schedule scale (default 1/Lipschitz)
  double exponent = 0.75;
  double alpha = 1.0;             // fixed step for bregman_gradient
  std::vector<Vec> halfspace_normals;  // alternating projections
  std::vector<double> halfspace_offsets;
  std::optional<Vec> witness;

  Vec probe_target;
  std::vector<std::string> curves;  // chord | tangential
  int num_chords = 3;
  int j_min = 4;
  int j_max = 40;
  double tol = 1e-4;

  std::optional<double> r_max;  // counterexample: extra grid point, < 1
  Vec blowup_x, blowup_y;
  double blowup_bar = 1e6;

  Vec seg_x, seg_y;
  std::optional<Vec> z0;
  long k_max = 1000000;

  double diagnose_tol = 1e-2;

  std::vector<std::string> echo_lines;  // original text, for the report
};

ExperimentConfig parse_config(const std::string& text);

}  // namespace bregman

#endif  // BREGMAN_CONFIG_HPP
