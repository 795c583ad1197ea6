#include "suig/sweep.hpp"

#include <array>
#include <exception>
#include <random>
#include <stdexcept>

namespace suig {

namespace {

// Rational rotations with a perfect-square norm, identity included.
constexpr std::array<std::array<long, 3>, 6> kTriples = {{
    {1, 0, 1}, {3, 4, 5}, {4, 3, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29},
}};

class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) != 0; }

  Rational scale_pow2(int e) {
    Rational r(1);
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return r;
  }

  /// Rotation by a rational angle, scaled by 2^-e, possibly mirrored.
  Frame frame(int e) {
    const auto& t = kTriples[static_cast<std::size_t>(uniform(0, kTriples.size() - 1))];
    const Rational s = scale_pow2(e);
    Frame f{s * Rational(t[0], t[2]), s * Rational(t[1], t[2]), coin()};
    if (coin()) f.a = -f.a, f.b = -f.b;
    return f;
  }

  /// Unit vector with rational coordinates.
  Point2 direction() {
    const auto& t = kTriples[static_cast<std::size_t>(uniform(0, kTriples.size() - 1))];
    Point2 u{Scalar(Rational(t[0], t[2])), Scalar(Rational(t[1], t[2]))};
    if (coin()) std::swap(u.x, u.y);
    if (coin()) u.x = -u.x;
    if (coin()) u.y = -u.y;
    return u;
  }

  Point2 point(long range, unsigned long den) {
    return {Scalar(ratio(uniform(-range, range), static_cast<long>(den))), Scalar(ratio(uniform(-range, range), static_cast<long>(den)))};
  }

 private:
  std::mt19937_64 rng_;
};

GeneratedCase suir_case(std::uint64_t seed) {
  CaseRng rng(seed);
  GeneratedCase gc;
  gc.seed = seed;
  gc.start = "two-point";
  Scenario& s = gc.scenario;
  s.algorithm = AlgorithmKind::Suir;
  static const std::array<Rational, 3> kDeltas = {Rational(1, 10), Rational(1, 3), Rational(2)};
  static const std::array<MovementKind, 3> kPolicies = {MovementKind::Rigid, MovementKind::MinProgress,
                                                        MovementKind::SeededRandom};
  s.movement.delta = kDeltas[seed % 3];
  s.movement.kind = kPolicies[(seed / 3) % 3];
  s.movement.seed = seed;
  const Point2 p0 = rng.point(32, 4);
  Point2 p1;
  do {
    p1 = rng.point(32, 4);
  } while (p1 == p0);
  s.robots.push_back({p0, rng.frame(static_cast<int>(rng.uniform(0, 4))), false});
  s.robots.push_back({p1, rng.frame(static_cast<int>(rng.uniform(0, 4))), false});
  return gc;
}

GeneratedCase suig_case(std::uint64_t seed, bool crash) {
  CaseRng rng(seed);
  GeneratedCase gc;
  gc.seed = seed;
  Scenario& s = gc.scenario;
  s.algorithm = AlgorithmKind::Suig;
  const auto n = static_cast<std::size_t>(2 + seed % 15);
  const int spread = static_cast<int>(rng.uniform(0, 5));
  auto next_frame = [&]() { return rng.frame(static_cast<int>(rng.uniform(0, spread))); };

  // Two-point starts dominate: they exercise the phase machinery. Levels:
  // the pair sits at global level g, frames add at most `spread` more.
  const long kind = rng.uniform(0, 9);
  const int g = static_cast<int>(rng.uniform(0, 55));
  const Rational length = rng.scale_pow2(g) * ratio(16 + rng.uniform(0, 15), 16);
  const Point2 p0 = rng.point(16, 8);
  const Point2 p1 = p0 + Scalar(length) * rng.direction();

  if (kind < 7 || n == 2) {
    std::size_t at_p1 = 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    gc.start = "two-point";
    if (kind < 3 && n % 2 == 0) {
      at_p1 = n / 2;
      gc.start = "bivalent";
    }
    // Crashed robots sit on p1; some correct robots may share it.
    std::size_t crashed = 0;
    if (crash) {
      crashed = rng.coin() && at_p1 > 1 ? static_cast<std::size_t>(rng.uniform(1, static_cast<long>(at_p1) - 1))
                                        : at_p1;
      if (n == 2) crashed = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool on_p1 = i < at_p1;
      s.robots.push_back({on_p1 ? p1 : p0, next_frame(), on_p1 && i < crashed});
    }
  } else if (kind < 9) {
    gc.start = "scattered";
    // Up to n distinct points, repeats give multiplicities.
    std::vector<Point2> pts{p0, p1};
    const long distinct = rng.uniform(2, static_cast<long>(n));
    while (static_cast<long>(pts.size()) < distinct) pts.push_back(rng.point(16, 8));
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& p = pts[i < pts.size() ? i : static_cast<std::size_t>(rng.uniform(0, pts.size() - 1))];
      s.robots.push_back({p, next_frame(), crash && p == p1 && i == 1});
    }
  } else {
    gc.start = "collinear";
    const Point2 u = rng.direction();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = p0 + Scalar(ratio(rng.uniform(0, 12), 4)) * u;
      s.robots.push_back({p, next_frame(), false});
    }
    if (crash) s.robots.front().crashed = true;
  }
  return gc;
}

}  // namespace

std::string_view to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::SuirContraction: return "suir";
    case SweepFamily::SuigNoCrash: return "suig";
    case SweepFamily::SuigCrash: return "suig_crash";
  }
  return "?";
}

SweepFamily parse_family(std::string_view name) {
  for (SweepFamily f : {SweepFamily::SuirContraction, SweepFamily::SuigNoCrash, SweepFamily::SuigCrash}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown sweep family '" + std::string(name) + "'");
}

GeneratedCase generate_case(SweepFamily family, std::uint64_t seed) {
  switch (family) {
    case SweepFamily::SuirContraction: return suir_case(seed);
    case SweepFamily::SuigNoCrash: return suig_case(seed, false);
    case SweepFamily::SuigCrash: return suig_case(seed, true);
  }
  throw std::invalid_argument("generate_case: unknown family");
}

bool SweepRow::ok(SweepFamily family) const {
  if (!error.empty() || !gathered()) return false;
  switch (family) {
    case SweepFamily::SuirContraction: return contraction;
    case SweepFamily::SuigNoCrash:
      return bound_verdict == BoundVerdict::Pass && level_jump && hull && crash_immobility;
    case SweepFamily::SuigCrash: return at_crash && level_jump && hull && crash_immobility;
  }
  return false;
}

SweepRow run_case(SweepFamily family, const GeneratedCase& gc, const Rational& c1, const Rational& c2) {
  SweepRow row;
  row.seed = gc.seed;
  row.start = gc.start;
  row.robots = gc.scenario.robots.size();
  try {
    const Configuration initial = gc.scenario.configuration();
    const ComplexityInputs in = complexity_inputs(initial, c1, c2);
    row.delta_level = in.delta_level;
    row.lowest_level = in.lowest_level;
    row.bound = in.bound;
    const Trace trace = run(gc.scenario, ExecutionMode::Serial);
    row.verdict = std::string(to_string(trace.verdict.kind));
    row.rounds = trace.verdict.round - trace.initial.round;
    if (family == SweepFamily::SuirContraction) {
      row.contraction = monitor_contraction(trace, gc.scenario.movement.delta).pass;
    } else {
      row.bound_verdict = check_complexity_bound(trace, c1, c2);
      row.level_jump = monitor_level_jump(trace).pass;
      row.hull = monitor_hull(trace).pass;
      row.crash_immobility = monitor_crash_immobility(trace).pass;
      if (const auto crash = initial.crash_location()) {
        row.at_crash = trace.verdict.point && *trace.verdict.point == *crash;
      }
    }
  } catch (const std::exception& e) {
    row.verdict = "error";
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  const auto n = static_cast<std::ptrdiff_t>(options.count);
  std::vector<SweepRow> rows(options.count);
  const bool parallel = options.mode == ExecutionMode::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const GeneratedCase gc = generate_case(options.family, options.first_seed + u);
    rows[u] = run_case(options.family, gc, options.c1, options.c2);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "seed,start,robots,delta_level,lowest_level,verdict,rounds,bound,bound_check,margin,at_crash,"
         "contraction,level_jump,hull,crash_immobility,error\n";
  for (const SweepRow& r : rows) {
    const long margin = static_cast<long>(r.bound) - static_cast<long>(r.rounds);
    out << r.seed << ',' << r.start << ',' << r.robots << ',' << r.delta_level << ',' << r.lowest_level << ','
        << r.verdict << ',' << r.rounds << ',' << r.bound << ',' << to_string(r.bound_verdict) << ',' << margin
        << ',' << r.at_crash << ',' << r.contraction << ',' << r.level_jump << ',' << r.hull << ','
        << r.crash_immobility << ',';
    // Messages never contain commas except by accident; quote to be safe.
    out << '"';
    for (char ch : r.error) out << (ch == '"' ? '\'' : ch);
    out << "\"\n";
  }
}

}  // namespace suig
