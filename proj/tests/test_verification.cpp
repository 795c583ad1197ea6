#include <doctest.h>

#include <algorithm>
#include <string>

#include "suig/verification.hpp"

using namespace suig;

namespace {

Point2 p(long x, long y) { return {Scalar(x), Scalar(y)}; }

const CaseReport& find(const std::vector<CaseReport>& reports, const std::string& id) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const CaseReport& r) { return r.id == id; });
  REQUIRE(it != reports.end());
  return *it;
}

Rational pow2(int k) {
  Rational r(1);
  if (k >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

}  // namespace

TEST_CASE("common orientation case table") {
  const auto reports = verify_suir_common();
  CHECK(reports.size() == 16);
  const CaseReport& c00 = find(reports, "common(0,0)");
  CHECK(c00.expected == "gathered");
  CHECK(c00.rounds == 1);
  CHECK(find(reports, "common(0,1)").expected == "(2,1)");
  CHECK(find(reports, "common(3,1)").expected == "(1,3)");
  for (const CaseReport& r : reports) {
    CHECK_MESSAGE(r.pass, r.id, ": ", r.observed);
    CHECK(r.rounds <= 3);
  }
}

TEST_CASE("opposite orientation case table") {
  const auto reports = verify_suir_opposite();
  CHECK(reports.size() == 20);
  CHECK(find(reports, "L(0,3)").expected == "R(0,1)");
  CHECK(find(reports, "L(3,3)").expected == "R(3,3)");
  const CaseReport& r22 = find(reports, "R(2,2)");
  CHECK(r22.expected == "gathered");
  CHECK(r22.rounds == 1);
  for (const CaseReport& r : reports) CHECK_MESSAGE(r.pass, r.id, ": ", r.observed);
}

TEST_CASE("crash case table") {
  const auto reports = verify_suir_crash();
  CHECK(reports.size() == 8);
  CHECK(find(reports, "crash right 1").rounds == 1);
  CHECK(find(reports, "crash left 3").rounds == 1);
  CHECK(find(reports, "crash right 0").rounds <= 4);
  CHECK(find(reports, "crash right 2").expected == "gathered at crash point in 4");
  for (const CaseReport& r : reports) CHECK_MESSAGE(r.pass, r.id, ": ", r.observed);
}

TEST_CASE("contraction monitor") {
  const Rational delta(1, 10);
  // d = 1 must fall to 9/10 within two rounds.
  CHECK(monitor_contraction({Scalar(1), Scalar(1), Scalar::fraction(81, 100)}, delta).pass);
  const MonitorResult stuck = monitor_contraction({Scalar(1), Scalar(1), Scalar::fraction(82, 100)}, delta);
  CHECK_FALSE(stuck.pass);
  CHECK_FALSE(stuck.detail.empty());
  // Distances below delta are not constrained.
  const MonitorResult small =
      monitor_contraction({Scalar::fraction(1, 400), Scalar::fraction(1, 400), Scalar::fraction(1, 400)}, delta);
  CHECK(small.pass);
  CHECK(small.checked == 0);
}

TEST_CASE("level jump monitor") {
  const Point2 o = p(0, 0);
  const Point2 seven{Scalar(pow2(-7)), Scalar(0)};
  const Point2 eight{Scalar(pow2(-8)), Scalar(0)};
  CHECK(monitor_level_jump(std::vector<std::vector<Point2>>{{o, p(1, 0)}, {o, seven}}).pass);
  const MonitorResult jump = monitor_level_jump(std::vector<std::vector<Point2>>{{o, p(1, 0)}, {o, eight}});
  CHECK_FALSE(jump.pass);
  CHECK_FALSE(jump.detail.empty());
  // Gathering is not a jump.
  CHECK(monitor_level_jump(std::vector<std::vector<Point2>>{{o, p(1, 0)}, {o}}).pass);
}

TEST_CASE("monitors accept a min-progress run") {
  Configuration c;
  c.robots.push_back({0, p(0, 0), Frame::identity(), false});
  c.robots.push_back({1, p(1, 0), Frame{Rational(-1, 2), Rational(0), false}, false});
  const StepOptions opts{decision_fn(AlgorithmKind::Suir), {}, {MovementKind::MinProgress, Rational(1, 10), 0, {}},
                         ExecutionMode::Serial};
  const Trace t = run_configuration(c, opts, {200, std::size_t{1} << 20, ExecutionMode::Serial});
  CHECK(t.verdict.kind == VerdictKind::Gathered);
  const MonitorResult contraction = monitor_contraction(t, Rational(1, 10));
  CHECK(contraction.pass);
  CHECK(contraction.checked > 0);
  CHECK(monitor_level_jump(t).pass);
  CHECK(monitor_hull(t).pass);
  CHECK(monitor_crash_immobility(t).pass);
  // Two rounds from distance 1 at least 1/10 is gone.
  REQUIRE(t.length() >= 2);
  const auto occ = t.configuration_at(2).occupied();
  if (occ.size() == 2) CHECK(dot(occ[1] - occ[0], occ[1] - occ[0]) <= Scalar::fraction(81, 100));
}

TEST_CASE("complexity bound") {
  Configuration c;
  const Rational d = pow2(-24);
  c.robots.push_back({0, p(0, 0), Frame::identity(), false});
  // Scaled down by 2^-3, the second robot sits three levels deeper.
  c.robots.push_back({1, {Scalar(d), Scalar(0)}, Frame{pow2(-3), Rational(0), false}, false});
  const ComplexityInputs in = complexity_inputs(c, Rational(4), Rational(8));
  CHECK(in.delta_level == 3);
  CHECK(in.lowest_level == 24);
  CHECK(in.bound == 64);

  Trace crashed;
  crashed.initial = c;
  crashed.initial.robots[0].crashed = true;
  crashed.verdict.kind = VerdictKind::Gathered;
  CHECK(check_complexity_bound(crashed, Rational(4), Rational(8)) == BoundVerdict::Inapplicable);

  Trace capped;
  capped.initial = c;
  CHECK(check_complexity_bound(capped, Rational(4), Rational(8)) == BoundVerdict::Inapplicable);
  CHECK(std::string(to_string(BoundVerdict::Pass)) != to_string(BoundVerdict::Fail));
}

TEST_CASE("crash geometry") {
  const GeometryReport rep = verify_crash_geometry();
  CHECK(rep.pass);
  CHECK_FALSE(rep.cases.empty());
  CHECK_FALSE(rep.span_ratios.empty());
  for (const GeometryCase& gc : rep.cases) {
    CHECK_MESSAGE(gc.pass, gc.id, ": ", gc.detail);
    CHECK(gc.text_everywhere);
    CHECK(gc.gathered_next);
    CHECK(gc.span_ratio < 1);
  }
}

TEST_CASE("impossibility scheduler keeps two groups apart") {
  const Frame half_turn{Rational(-1), Rational(0), false};
  for (AlgorithmKind kind : {AlgorithmKind::Midpoint, AlgorithmKind::LiftedSuir}) {
    const ImpossibilityReport rep = demo_impossibility(kind, 200, half_turn, Frame::identity());
    CHECK_FALSE(rep.gathered);
    CHECK(rep.rounds == 200);
    CHECK(rep.rules_consistent);
    CHECK(rep.groups_intact);
    std::uint64_t total = 0;
    for (const auto& [rule, n] : rep.rule_counts) total += n;
    CHECK(total == 200);
  }
}

TEST_CASE("lifted rendezvous matches the line simulator") {
  const LiftReport rep = verify_lift_equivalence(6, 7);
  CHECK(rep.instances == 6);
  CHECK(rep.rounds_compared > 0);
  CHECK_MESSAGE(rep.pass, rep.detail);
}

TEST_CASE("axis rendezvous report") {
  const AxisReport rep = verify_axis_rendezvous();
  CHECK(rep.runs > 0);
  CHECK(rep.rounds_checked > 0);
  CHECK(rep.travel_bound);
  // The claimed sqrt(2) delta decrease does not hold for moves at 60 degrees.
  CHECK_FALSE(rep.claimed_bound);
  CHECK(rep.symmetric_gathered);
  CHECK(rep.asymmetric_ok);
}

TEST_CASE("one round contraction over a grid") {
  const MonitorResult res = verify_one_round_contraction(2000, 9);
  CHECK(res.checked > 0);
  CHECK_MESSAGE(res.pass, res.detail);
}
