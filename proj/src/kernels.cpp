#include "suig/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace suig::kernels {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Planned plan_one(const Configuration& config, const Robot& robot, const DecisionFn& decide) {
  Planned p;
  p.view = observe(config, robot);
  p.decision = decide(p.view);
  p.destination = robot.position + robot.frame.to_global(p.decision.command.destination);
  return p;
}

/// Index of the first correct robot with the same position and frame, or i
/// itself. Such robots see the same view, hence decide the same.
std::vector<std::size_t> representatives(const Configuration& config) {
  std::vector<std::size_t> rep(config.robots.size());
  for (std::size_t i = 0; i < config.robots.size(); ++i) {
    const Robot& r = config.robots[i];
    rep[i] = i;
    if (r.crashed) continue;
    for (std::size_t j = 0; j < i; ++j) {
      const Robot& q = config.robots[j];
      if (!q.crashed && rep[j] == j && q.position == r.position && q.frame == r.frame) {
        rep[i] = j;
        break;
      }
    }
  }
  return rep;
}

}  // namespace

std::uint64_t mix(std::uint64_t seed, std::uint64_t round, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ round) ^ index);
}

std::vector<std::optional<Planned>> plan_serial(const Configuration& config, const DecisionFn& decide) {
  std::vector<std::optional<Planned>> out(config.robots.size());
  const auto rep = representatives(config);
  for (std::size_t i = 0; i < config.robots.size(); ++i) {
    const Robot& r = config.robots[i];
    if (r.crashed) continue;
    out[i] = rep[i] == i ? plan_one(config, r, decide) : out[rep[i]];
  }
  return out;
}

std::vector<std::optional<Planned>> plan_parallel(const Configuration& config, const DecisionFn& decide) {
  const auto n = static_cast<std::ptrdiff_t>(config.robots.size());
  std::vector<std::optional<Planned>> out(config.robots.size());
  const auto rep = representatives(config);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Robot& r = config.robots[static_cast<std::size_t>(i)];
    if (r.crashed || rep[static_cast<std::size_t>(i)] != static_cast<std::size_t>(i)) continue;
    try {
      out[static_cast<std::size_t>(i)] = plan_one(config, r, decide);
    } catch (...) {
#pragma omp critical(suig_plan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!config.robots[i].crashed && rep[i] != i) out[i] = out[rep[i]];
  }
  return out;
}

std::vector<Point2> move_serial(const Configuration& config,
                                const std::vector<std::optional<Planned>>& plan,
                                const std::vector<char>& active, const MovementAdversary& adversary) {
  std::vector<Point2> out(config.robots.size());
  for (std::size_t i = 0; i < config.robots.size(); ++i) {
    const Robot& r = config.robots[i];
    out[i] = active[i] != 0 ? resolve_move(r.position, plan[i]->destination, adversary, config.round, i)
                            : r.position;
  }
  return out;
}

std::vector<Point2> move_parallel(const Configuration& config,
                                  const std::vector<std::optional<Planned>>& plan,
                                  const std::vector<char>& active, const MovementAdversary& adversary) {
  const auto n = static_cast<std::ptrdiff_t>(config.robots.size());
  std::vector<Point2> out(config.robots.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const Robot& r = config.robots[u];
    try {
      out[u] = active[u] != 0 ? resolve_move(r.position, plan[u]->destination, adversary, config.round, u)
                              : r.position;
    } catch (...) {
#pragma omp critical(suig_move_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace suig::kernels
