#include "suig/engine.hpp"

#include <algorithm>
#include <array>

#include "suig/kernels.hpp"

namespace suig {

namespace {

template <typename Enum, std::size_t N>
Enum parse_name(std::string_view name, const std::array<Enum, N>& values, const char* what) {
  for (Enum v : values) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

constexpr unsigned kRandomBits = 16;
constexpr long kMinProgressBits = 64;

std::vector<char> activation(const Configuration& config, const Scheduler& scheduler,
                             const std::vector<std::optional<kernels::Planned>>& plan,
                             std::optional<ImpossibilityRule>& rule) {
  const std::size_t n = config.robots.size();
  std::vector<char> active(n, 0);
  std::vector<std::size_t> correct;
  for (std::size_t i = 0; i < n; ++i) {
    if (!config.robots[i].crashed) correct.push_back(i);
  }
  if (correct.empty()) return active;

  switch (scheduler.kind) {
    case SchedulerKind::Fsync:
      for (std::size_t i : correct) active[i] = 1;
      break;
    case SchedulerKind::SsyncRoundRobin:
      active[correct[config.round % correct.size()]] = 1;
      break;
    case SchedulerKind::SsyncRandom: {
      bool any = false;
      for (std::size_t i : correct) {
        if ((kernels::mix(scheduler.seed, config.round, i) & 1U) != 0) {
          active[i] = 1;
          any = true;
        }
      }
      if (!any) active[correct[kernels::mix(scheduler.seed, config.round, n) % correct.size()]] = 1;
      break;
    }
    case SchedulerKind::SsyncImpossibility: {
      if (correct.size() != n) {
        throw ContractViolation("impossibility scheduler requires crash-free robots");
      }
      const auto occupied = config.occupied();
      if (occupied.size() == 1) {
        std::fill(active.begin(), active.end(), 1);
        break;
      }
      if (occupied.size() != 2) {
        throw ContractViolation("impossibility scheduler requires two occupied points");
      }
      // Robot 0 is r; robots sharing its position move as one robot with it.
      const Point2& r_pos = config.robots[0].position;
      std::size_t other = 0;
      while (config.robots[other].position == r_pos) ++other;
      const auto choice = impossibility_schedule({r_pos, plan[0]->destination},
                                                 {config.robots[other].position, plan[other]->destination});
      rule = choice.rule;
      for (std::size_t i = 0; i < n; ++i) {
        const bool in_r = config.robots[i].position == r_pos;
        active[i] = in_r ? choice.activate_r : choice.activate_other;
      }
      break;
    }
  }
  if (std::none_of(active.begin(), active.end(), [](char c) { return c != 0; })) {
    throw ContractViolation("scheduler activated no robot");
  }
  return active;
}

}  // namespace

std::string_view to_string(MovementKind kind) {
  switch (kind) {
    case MovementKind::Rigid: return "rigid";
    case MovementKind::MinProgress: return "min_progress";
    case MovementKind::SeededRandom: return "random";
    case MovementKind::Scripted: return "scripted";
  }
  return "?";
}

MovementKind parse_movement(std::string_view name) {
  return parse_name(name,
                    std::array{MovementKind::Rigid, MovementKind::MinProgress, MovementKind::SeededRandom,
                               MovementKind::Scripted},
                    "movement policy");
}

std::string_view to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::Fsync: return "fsync";
    case SchedulerKind::SsyncRoundRobin: return "ssync_round_robin";
    case SchedulerKind::SsyncRandom: return "ssync_random";
    case SchedulerKind::SsyncImpossibility: return "ssync_impossibility";
  }
  return "?";
}

SchedulerKind parse_scheduler(std::string_view name) {
  return parse_name(name,
                    std::array{SchedulerKind::Fsync, SchedulerKind::SsyncRoundRobin, SchedulerKind::SsyncRandom,
                               SchedulerKind::SsyncImpossibility},
                    "scheduler");
}

std::string_view to_string(ImpossibilityRule rule) {
  switch (rule) {
    case ImpossibilityRule::RIdle: return "r_idle";
    case ImpossibilityRule::RMovesElsewhere: return "r_moves_elsewhere";
    case ImpossibilityRule::BothMove: return "both_move";
    case ImpossibilityRule::OnlyOther: return "only_other";
  }
  return "?";
}

std::string_view to_string(VerdictKind kind) {
  return kind == VerdictKind::Gathered ? "gathered" : "round_cap_reached";
}

Scalar min_progress_fraction(const Scalar& len_sq, const Rational& delta) {
  const Scalar delta_sq = Scalar(delta * delta);
  if (len_sq <= delta_sq) return Scalar(1);
  if (auto len = exact_sqrt(len_sq)) return Scalar(delta) / *len;
  // Dividing by a lower bound of L overshoots delta / L, never undershoots.
  // Rounding up to a dyadic keeps coordinate denominators powers of two.
  const Rational upper = delta / sqrt_lower_bound(len_sq);
  const long exponent = static_cast<long>(mpz_sizeinbase(upper.get_den_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(upper.get_num_mpz_t(), 2));
  const auto bits = static_cast<mp_bitcnt_t>(std::max(0L, exponent) + kMinProgressBits);
  mpz_class scaled = upper.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), upper.get_den_mpz_t());
  Rational t(scaled);
  mpz_mul_2exp(t.get_den_mpz_t(), t.get_den_mpz_t(), bits);
  t.canonicalize();
  return t >= 1 ? Scalar(1) : Scalar(t);
}

Scalar stop_fraction(const Scalar& len_sq, const MovementAdversary& adversary, std::uint64_t round,
                     std::size_t robot_index) {
  if (len_sq.is_zero() || adversary.kind == MovementKind::Rigid) return Scalar(1);
  const Scalar floor = min_progress_fraction(len_sq, adversary.delta);
  switch (adversary.kind) {
    case MovementKind::Rigid: return Scalar(1);
    case MovementKind::MinProgress: return floor;
    case MovementKind::SeededRandom: {
      const std::uint64_t draw =
          kernels::mix(adversary.seed, round, robot_index) % ((std::uint64_t{1} << kRandomBits) + 1);
      const Scalar u(Rational(mpz_class(static_cast<unsigned long>(draw)), mpz_class(1) << kRandomBits));
      return floor + (Scalar(1) - floor) * u;
    }
    case MovementKind::Scripted: {
      Scalar wanted(1);
      if (round < adversary.script.size() && robot_index < adversary.script[round].size()) {
        wanted = Scalar(adversary.script[round][robot_index]);
      }
      return std::clamp(wanted, floor, Scalar(1));
    }
  }
  return Scalar(1);
}

Point2 resolve_move(const Point2& from, const Point2& to, const MovementAdversary& adversary,
                    std::uint64_t round, std::size_t robot_index) {
  if (from == to) return to;
  const Scalar t = stop_fraction(dist_sq(from, to), adversary, round, robot_index);
  if (t == Scalar(1)) return to;
  return from + t * (to - from);
}

ImpossibilityChoice impossibility_schedule(const PendingMove& r, const PendingMove& other) {
  if (r.idle()) return {ImpossibilityRule::RIdle, true, false};
  if (r.destination != other.position) return {ImpossibilityRule::RMovesElsewhere, true, false};
  if (!other.idle()) return {ImpossibilityRule::BothMove, true, true};
  return {ImpossibilityRule::OnlyOther, false, true};
}

DecisionFn decision_fn(AlgorithmKind kind) {
  return [kind](const LocalView& view) { return decide(kind, view); };
}

Configuration step(const Configuration& config, const StepOptions& options, RoundRecord* record) {
  const bool parallel = options.mode == ExecutionMode::Parallel;
  const auto plan = parallel ? kernels::plan_parallel(config, options.decide)
                             : kernels::plan_serial(config, options.decide);
  std::optional<ImpossibilityRule> rule;
  const auto active = activation(config, options.scheduler, plan, rule);
  const auto stops = parallel ? kernels::move_parallel(config, plan, active, options.adversary)
                              : kernels::move_serial(config, plan, active, options.adversary);

  Configuration next = config;
  next.round = config.round + 1;
  for (std::size_t i = 0; i < next.robots.size(); ++i) next.robots[i].position = stops[i];

  if (record != nullptr) {
    record->round = next.round;
    record->rule = rule;
    record->active.clear();
    record->steps.clear();
    record->positions = stops;
    for (std::size_t i = 0; i < config.robots.size(); ++i) {
      if (active[i] == 0) continue;
      const auto& p = *plan[i];
      record->active.push_back(config.robots[i].id);
      record->steps.push_back({config.robots[i].id, p.view.size(), p.decision.tag,
                               p.decision.command.destination, p.destination, stops[i]});
    }
  }
  return next;
}

Configuration Trace::configuration_at(std::size_t t) const {
  Configuration c = initial;
  if (t == 0) return c;
  const RoundRecord& rec = rounds.at(t - 1);
  c.round = rec.round;
  for (std::size_t i = 0; i < c.robots.size(); ++i) c.robots[i].position = rec.positions[i];
  return c;
}

PrecisionLimitError::PrecisionLimitError(std::uint64_t round_, std::size_t bits_, std::size_t limit)
    : std::runtime_error("coordinate bit length " + std::to_string(bits_) + " exceeds limit " +
                         std::to_string(limit) + " at round " + std::to_string(round_)),
      round(round_),
      bits(bits_) {}

Trace run_configuration(const Configuration& initial, const StepOptions& options,
                        const RunOptions& run_options, std::string algorithm_name) {
  initial.check_single_crash_location();
  Trace trace;
  trace.algorithm = std::move(algorithm_name);
  trace.initial = initial;
  Configuration current = initial;
  while (true) {
    auto occupied = current.occupied();
    if (occupied.size() <= 1) {
      trace.verdict = {VerdictKind::Gathered, current.round,
                       occupied.empty() ? std::nullopt : std::optional<Point2>(occupied.front())};
      break;
    }
    if (current.round - initial.round >= run_options.max_rounds) {
      trace.verdict = {VerdictKind::RoundCapReached, current.round, std::nullopt};
      break;
    }
    RoundRecord rec;
    current = step(current, options, &rec);
    trace.rounds.push_back(std::move(rec));
    std::size_t bits = 0;
    for (const Robot& r : current.robots) bits = std::max(bits, r.position.bit_length());
    if (bits > run_options.max_bits) throw PrecisionLimitError(current.round, bits, run_options.max_bits);
  }
  return trace;
}

ActivationStats activation_stats(const Trace& trace) {
  ActivationStats stats;
  const auto total = static_cast<std::uint64_t>(trace.rounds.size());
  std::map<RobotId, std::uint64_t> last;
  for (const Robot& r : trace.initial.robots) {
    if (!r.crashed) last[r.id] = 0;
  }
  auto note = [&stats](RobotId id, std::uint64_t gap) {
    auto& m = stats.max_gap[id];
    m = std::max(m, gap);
    ++stats.gap_histogram[gap];
  };
  for (std::uint64_t t = 0; t < total; ++t) {
    for (RobotId id : trace.rounds[t].active) {
      note(id, t + 1 - last[id]);
      last[id] = t + 1;
    }
  }
  for (const auto& [id, at] : last) {
    if (at < total) note(id, total - at);
    else stats.max_gap.try_emplace(id, 0);
  }
  return stats;
}

}  // namespace suig
