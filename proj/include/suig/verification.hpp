#pragma once

// Executable forms of the correctness lemmas: case tables, trace monitors,
// the round-complexity check, and the adversary and lifting demonstrations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suig/engine.hpp"

namespace suig {

struct CaseReport {
  std::string id;        // e.g. "common(0,1)", "R(1,2)", "crash right 0"
  std::string expected;  // "gathered" or the successor class
  std::string observed;
  std::uint64_t rounds = 0;  // rounds until gathered (0 if never)
  bool pass = false;
};

/// Two robots agreeing on the orientation of their line; one case per pair
/// of level residues (left robot, right robot).
std::vector<CaseReport> verify_suir_common();
/// Two robots with opposite orientations; L{i,j} and R{i,j} with i <= j.
/// Each class is instantiated with both assignments of the levels.
std::vector<CaseReport> verify_suir_opposite();
/// One crashed robot; one case per level residue and side of the correct one.
std::vector<CaseReport> verify_suir_crash();

struct MonitorResult {
  bool pass = true;
  std::size_t checked = 0;  // number of rounds the property was evaluated on
  std::string detail;       // first violation, if any
};

/// Two rounds after any round with inter-robot distance d >= delta, the
/// distance is at most d - min(delta, d/2). Exact squared-form comparison.
MonitorResult monitor_contraction(const Trace& trace, const Rational& delta);
/// Same property over an explicit sequence of squared distances.
MonitorResult monitor_contraction(const std::vector<Scalar>& dist_sq, const Rational& delta);

/// Between consecutive two-point configurations the level of the occupied
/// pair, measured in global units, rises by at most 7.
MonitorResult monitor_level_jump(const Trace& trace);
MonitorResult monitor_level_jump(const std::vector<std::vector<Point2>>& occupied_per_round);

/// Every occupied point stays in the convex hull of the previous round.
MonitorResult monitor_hull(const Trace& trace);

/// Crashed robots keep their initial position in every round.
MonitorResult monitor_crash_immobility(const Trace& trace);

enum class BoundVerdict { Pass, Fail, Inapplicable };
const char* to_string(BoundVerdict verdict);

struct ComplexityInputs {
  int delta_level = 0;
  int lowest_level = 0;  // clamped to 0
  std::uint64_t bound = 0;
};

/// Delta level and lowest level of a start configuration (0 and 0 unless
/// exactly two points are occupied), and the resulting bound.
ComplexityInputs complexity_inputs(const Configuration& initial, const Rational& c1, const Rational& c2);

/// rounds <= c1 (delta_level^2 + ceil(sqrt(l_min))) + c2 for gathered,
/// crash-free traces; Inapplicable otherwise.
BoundVerdict check_complexity_bound(const Trace& trace, const Rational& c1, const Rational& c2);

/// Constants fixed by the calibration sweep (see README).
Rational complexity_c1();
Rational complexity_c2();

struct GeometryCase {
  std::string id;
  Rational span_ratio;                // d' / d
  Rational crash_gap_ratio;           // crash extremity gap / d'
  std::optional<Rational> far_gap_ratio;  // far extremity gap / d'
  bool text_everywhere = false;       // every correct view is Text(crash point)
  bool gathered_next = false;         // one more round gathers at the crash point
  bool pass = false;
  std::string detail;
};

struct GeometryReport {
  std::vector<GeometryCase> cases;
  std::vector<Rational> span_ratios;       // distinct observed values of d'/d
  std::vector<Rational> crash_gap_ratios;  // distinct observed crash gaps / d'
  bool pass = false;
};

/// One B-phase round from every combination of moves at the far point and at
/// the crash point, plus the mixed B/C1 combinations.
GeometryReport verify_crash_geometry();

struct ImpossibilityReport {
  std::string name;
  bool gathered = false;
  std::uint64_t rounds = 0;
  std::map<ImpossibilityRule, std::uint64_t> rule_counts;
  bool rules_consistent = true;  // every round's rule matches the pending moves
  bool groups_intact = true;     // never more than two occupied points
  ActivationStats activation;
  std::string detail;
};

/// Run the impossibility scheduler for `horizon` rounds against `kind` from
/// the two-robot start (0,0), (1,0) with the given frames; with
/// `copies_per_point` > 1 every point carries that many identical robots.
ImpossibilityReport demo_impossibility(AlgorithmKind kind, std::uint64_t horizon, const Frame& r_frame,
                                       const Frame& other_frame, std::size_t copies_per_point = 1,
                                       const Point2& other_position = {Scalar(1), Scalar(0)});

struct LiftReport {
  std::size_t instances = 0;
  std::size_t rounds_compared = 0;
  bool pass = true;
  std::string detail;
};

/// Lifted line rendezvous against an independent one-dimensional simulator
/// on seeded two-robot instances laid out along rational unit directions.
LiftReport verify_lift_equivalence(std::uint64_t instances, std::uint64_t seed);

struct AxisReport {
  std::size_t runs = 0;
  std::size_t rounds_checked = 0;
  bool claimed_bound = true;   // decrease >= sqrt(2) delta in every checked round
  bool travel_bound = true;    // decrease >= delta in every checked round
  bool symmetric_gathered = true;
  bool asymmetric_ok = true;   // northern robot never moves, rendezvous completes
  std::string detail;
};

/// Symmetric starts under the equal-progress adversary and asymmetric starts
/// under all movement policies.
AxisReport verify_axis_rendezvous();

/// Check of the one-round distance function |d - x - y| <= d - min(delta, d/2)
/// over a grid of admissible (d, x, y) where one robot targets the middle.
MonitorResult verify_one_round_contraction(std::uint64_t samples, std::uint64_t seed);

}  // namespace suig
