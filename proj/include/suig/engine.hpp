#pragma once

// Round execution: activation schedulers, the non-rigid movement adversary,
// crash enforcement and per-round records.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "suig/algorithms.hpp"
#include "suig/model.hpp"

namespace suig {

enum class MovementKind { Rigid, MinProgress, SeededRandom, Scripted };

/// Decides where a moving robot is stopped. A commanded segment of length L is
/// travelled completely when L <= delta; otherwise the travelled part s obeys
/// delta <= s <= L.
struct MovementAdversary {
  MovementKind kind = MovementKind::Rigid;
  Rational delta{1};
  std::uint64_t seed = 0;
  /// Scripted stop fractions, indexed [round][robot index]; missing -> 1.
  std::vector<std::vector<Rational>> script;

  friend bool operator==(const MovementAdversary&, const MovementAdversary&) = default;
};

std::string_view to_string(MovementKind kind);
MovementKind parse_movement(std::string_view name);

/// Smallest admissible stop fraction for a segment of squared length len_sq.
/// Exact (delta / L) whenever L lies in Q(sqrt3); otherwise a dyadic fraction
/// that is provably >= delta / L and within about 2^-62 relative of it.
Scalar min_progress_fraction(const Scalar& len_sq, const Rational& delta);

/// Fraction of the segment actually travelled by robot `robot_index` in
/// `round`. Deterministic in (adversary, round, robot_index).
Scalar stop_fraction(const Scalar& len_sq, const MovementAdversary& adversary,
                     std::uint64_t round, std::size_t robot_index);

Point2 resolve_move(const Point2& from, const Point2& to, const MovementAdversary& adversary,
                    std::uint64_t round, std::size_t robot_index);

enum class SchedulerKind { Fsync, SsyncRoundRobin, SsyncRandom, SsyncImpossibility };

struct Scheduler {
  SchedulerKind kind = SchedulerKind::Fsync;
  std::uint64_t seed = 0;

  bool synchronous() const { return kind == SchedulerKind::Fsync; }
  friend bool operator==(const Scheduler&, const Scheduler&) = default;
};

std::string_view to_string(SchedulerKind kind);
SchedulerKind parse_scheduler(std::string_view name);

/// The four activation rules of the semi-synchronous adversary, from the point
/// of view of a designated robot r and the other robot r'.
enum class ImpossibilityRule {
  RIdle,          // r stays: activate only r
  RMovesElsewhere,  // r heads somewhere other than r': activate only r
  BothMove,       // r heads to r' and r' moves: activate both
  OnlyOther,      // r heads to r' and r' stays: activate only r'
};

std::string_view to_string(ImpossibilityRule rule);

struct PendingMove {
  Point2 position;     // global
  Point2 destination;  // global
  bool idle() const { return destination == position; }
};

struct ImpossibilityChoice {
  ImpossibilityRule rule;
  bool activate_r;
  bool activate_other;
};

ImpossibilityChoice impossibility_schedule(const PendingMove& r, const PendingMove& other);

enum class ExecutionMode { Serial, Parallel };

/// Algorithm as seen by the engine.
using DecisionFn = std::function<Decision(const LocalView&)>;
DecisionFn decision_fn(AlgorithmKind kind);

struct RobotStep {
  RobotId id = 0;
  std::size_t view_size = 0;
  std::string tag;
  Point2 local_destination;
  Point2 destination;  // global
  Point2 stop;         // global, after the movement adversary

  friend bool operator==(const RobotStep&, const RobotStep&) = default;
};

struct RoundRecord {
  std::uint64_t round = 0;  // round number after the step
  std::vector<RobotId> active;
  std::vector<RobotStep> steps;  // activated robots only, in robot order
  std::optional<ImpossibilityRule> rule;
  std::vector<Point2> positions;  // per robot, after the step

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct StepOptions {
  DecisionFn decide;
  Scheduler scheduler;
  MovementAdversary adversary;
  ExecutionMode mode = ExecutionMode::Parallel;
};

/// One Look-Compute-Move round. Crashed and inactive robots keep their
/// positions; the round counter advances by one.
Configuration step(const Configuration& config, const StepOptions& options,
                   RoundRecord* record = nullptr);

enum class VerdictKind { Gathered, RoundCapReached };

struct Verdict {
  VerdictKind kind = VerdictKind::RoundCapReached;
  std::uint64_t round = 0;
  std::optional<Point2> point;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view to_string(VerdictKind kind);

struct Trace {
  std::string digest;
  std::string algorithm;
  Configuration initial;
  std::vector<RoundRecord> rounds;
  Verdict verdict;

  /// Configuration after `t` rounds (t = 0 is the initial one).
  Configuration configuration_at(std::size_t t) const;
  std::size_t length() const { return rounds.size(); }

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Raised when coordinates outgrow the configured bit budget.
class PrecisionLimitError : public std::runtime_error {
 public:
  PrecisionLimitError(std::uint64_t round, std::size_t bits, std::size_t limit);
  std::uint64_t round;
  std::size_t bits;
};

struct RunOptions {
  std::uint64_t max_rounds = 10'000;
  std::size_t max_bits = std::size_t{1} << 20;
  ExecutionMode mode = ExecutionMode::Parallel;
};

/// Iterate `step` until a single point is occupied or the round cap is hit.
Trace run_configuration(const Configuration& initial, const StepOptions& options,
                        const RunOptions& run_options, std::string algorithm_name = {});

/// Per-robot activation gaps of a trace (rounds between consecutive
/// activations, counting the start and end of the trace as boundaries).
struct ActivationStats {
  std::map<RobotId, std::uint64_t> max_gap;
  std::map<std::uint64_t, std::uint64_t> gap_histogram;
};

ActivationStats activation_stats(const Trace& trace);

}  // namespace suig
