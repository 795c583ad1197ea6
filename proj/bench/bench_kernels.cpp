// Serial reference kernels against their OpenMP versions: one round of a
// large swarm, and a batch sweep. Prints a small table of wall-clock times.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "suig/kernels.hpp"
#include "suig/sweep.hpp"

namespace {

using namespace suig;
using Clock = std::chrono::steady_clock;

template <typename F>
double seconds(F&& f, int repeats) {
  const auto t0 = Clock::now();
  for (int i = 0; i < repeats; ++i) f();
  return std::chrono::duration<double>(Clock::now() - t0).count() / repeats;
}

Configuration swarm(std::size_t n) {
  // Scattered robots with distinct rotated frames: every view runs the SEC.
  Configuration c;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<long>(i);
    c.robots.push_back({static_cast<RobotId>(i),
                        {Scalar(Rational((k * 37) % 101, 7)), Scalar(Rational((k * 53) % 97, 5))},
                        {ratio(3, 5 + k % 3), ratio(4, 5 + k % 3), k % 2 == 0},
                        false});
  }
  return c;
}

void row(const char* name, double serial, double parallel) {
  std::cout << std::left << std::setw(28) << name << std::right << std::setw(12) << std::fixed
            << std::setprecision(4) << serial << std::setw(12) << parallel << std::setw(10) << std::setprecision(2)
            << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t robots = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const std::uint64_t seeds = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 64;
  std::cout << "threads: " << kernels::max_threads() << ", robots: " << robots << ", sweep seeds: " << seeds
            << "\n\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial s" << std::setw(12)
            << "parallel s" << std::setw(11) << "speedup\n";

  const Configuration c = swarm(robots);
  const DecisionFn decide = decision_fn(AlgorithmKind::Suig);
  row("plan (look + compute)", seconds([&] { kernels::plan_serial(c, decide); }, 3),
      seconds([&] { kernels::plan_parallel(c, decide); }, 3));

  StepOptions opts{decide, {}, {MovementKind::SeededRandom, Rational(1, 100), 5, {}}, ExecutionMode::Serial};
  const double step_serial = seconds([&] { step(c, opts); }, 3);
  opts.mode = ExecutionMode::Parallel;
  row("full round", step_serial, seconds([&] { step(c, opts); }, 3));

  SweepOptions sweep_opts;
  sweep_opts.family = SweepFamily::SuigNoCrash;
  sweep_opts.count = seeds;
  sweep_opts.mode = ExecutionMode::Serial;
  const double sweep_serial = seconds([&] { run_sweep(sweep_opts); }, 1);
  sweep_opts.mode = ExecutionMode::Parallel;
  row("suig sweep", sweep_serial, seconds([&] { run_sweep(sweep_opts); }, 1));
  return 0;
}
