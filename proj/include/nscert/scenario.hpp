#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nscert/forcing.hpp"
#include "nscert/nonlinear.hpp"

namespace nscert {

struct InitSpec {
  enum class Kind { taylor_green, random_low_mode, from_snapshot };
  Kind kind = Kind::taylor_green;
  double amplitude = 1.0;      // taylor-green U0 / random L2-norm target
  std::uint64_t seed = 0;      // random-low-mode
  double shell_lambda = 0.0;   // random-low-mode: populate lambda <= shell
  std::string path;            // from-snapshot
};

/// Physical and numerical parameters of one run.  Invariants: m >= 3,
/// nu >= 0, dt divides T within rounding, lambda_cut > 0.
struct ScenarioConfig {
  double L = 2.0 * M_PI;
  int K = 2;
  double lambda_cut = 0.0;  // 0 resolves to the full lattice
  double nu = 1.0;
  int m = 3;
  double T = 1.0;
  double dt = 0.01;
  int snapshot_stride = 1;
  int quad_order = 4;
  InitSpec init;
  ForcingSpec forcing;
  std::optional<ConstantEstimate> cm;
  std::string echo;  // original config text, echoed into reports
};

/// Validates invariants and resolves lambda_cut = 0 to the lattice
/// maximum.  Throws std::invalid_argument with the offending key.
void validate_scenario(ScenarioConfig& cfg);

/// Number of integrator steps (T/dt, validated to be integral).
int scenario_steps(const ScenarioConfig& cfg);

GalerkinCutoff scenario_cutoff(const ScenarioConfig& cfg);

std::string init_kind_name(InitSpec::Kind k);

}  // namespace nscert
