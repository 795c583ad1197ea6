#pragma once

// Scenario documents: the JSON form of one simulation setup, its validation,
// and the entry point that turns a scenario into a trace.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "suig/engine.hpp"

namespace suig {

struct RobotSpec {
  Point2 position;
  Frame frame;
  bool crashed = false;

  friend bool operator==(const RobotSpec&, const RobotSpec&) = default;
};

struct OutputPaths {
  std::string trace;
  std::string summary;

  friend bool operator==(const OutputPaths&, const OutputPaths&) = default;
};

struct Scenario {
  AlgorithmKind algorithm = AlgorithmKind::Suig;
  std::vector<RobotSpec> robots;
  Scheduler scheduler;
  MovementAdversary movement;
  std::uint64_t max_rounds = 10'000;
  std::size_t max_bits = std::size_t{1} << 20;
  OutputPaths outputs;

  Configuration configuration() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Validation failure; `violations` holds one "path: message" entry each.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> violations);
  std::vector<std::string> violations;
};

/// All violations of the scenario invariants (empty when valid).
std::vector<std::string> validate(const Scenario& scenario);

/// Parse and validate a JSON scenario. Unknown fields are rejected.
/// Throws ScenarioError.
Scenario parse_scenario(std::string_view text);
/// Canonical JSON text (all fields explicit, exact scalars as strings).
std::string serialize_scenario(const Scenario& scenario);

/// Stable 64-bit FNV-1a digest of the canonical form without output paths.
std::string scenario_digest(const Scenario& scenario);

/// Validate and execute. Throws ScenarioError or PrecisionLimitError.
Trace run(const Scenario& scenario, ExecutionMode mode = ExecutionMode::Parallel);
/// Same, with a caller-supplied decision function in place of the named one.
Trace run(const Scenario& scenario, const DecisionFn& decide, ExecutionMode mode = ExecutionMode::Parallel);

}  // namespace suig
