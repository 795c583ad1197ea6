#pragma once

// Per-robot work inside one round. Every robot's Look/Compute reads the same
// immutable snapshot and every Move depends only on that robot's own command,
// so both loops are data-parallel. The serial versions are the reference the
// OpenMP versions are tested against.

#include <cstdint>
#include <optional>
#include <vector>

#include "suig/engine.hpp"

namespace suig::kernels {

/// Counter-based hash, so random draws do not depend on iteration order.
std::uint64_t mix(std::uint64_t seed, std::uint64_t round, std::uint64_t index);

struct Planned {
  LocalView view;
  Decision decision;
  Point2 destination;  // global
};

/// Decision of every correct robot (empty slot for crashed robots). Robots
/// sharing a position and a frame share one Look/Compute.
std::vector<std::optional<Planned>> plan_serial(const Configuration& config, const DecisionFn& decide);
std::vector<std::optional<Planned>> plan_parallel(const Configuration& config, const DecisionFn& decide);

/// Stop point of every active robot; inactive robots keep their position.
std::vector<Point2> move_serial(const Configuration& config,
                                const std::vector<std::optional<Planned>>& plan,
                                const std::vector<char>& active, const MovementAdversary& adversary);
std::vector<Point2> move_parallel(const Configuration& config,
                                  const std::vector<std::optional<Planned>>& plan,
                                  const std::vector<char>& active, const MovementAdversary& adversary);

int max_threads();

}  // namespace suig::kernels
