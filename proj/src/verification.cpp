#include "suig/verification.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace suig {

namespace {

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::string residues(const char* prefix, int i, int j) {
  return std::string(prefix) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Level l is realised by a frame of scale 2^-l looking at a global distance of
// 17/16, which sits 1/16 of a band above the lower edge.
const Rational kCaseDistance(17, 16);

Frame level_frame(int level, bool half_turn) {
  Rational a = pow2(-level);
  if (half_turn) a = -a;
  return {a, 0, false};
}

Configuration two_robots(const Frame& f0, const Frame& f1, bool crash1 = false) {
  Configuration c;
  c.robots.push_back({0, {Scalar(0), Scalar(0)}, f0, false});
  c.robots.push_back({1, {Scalar(kCaseDistance), Scalar(0)}, f1, crash1});
  return c;
}

Trace run_rigid(const Configuration& c, AlgorithmKind kind, std::uint64_t max_rounds,
                const MovementAdversary& adversary = {}) {
  StepOptions opts{decision_fn(kind), {}, adversary, ExecutionMode::Serial};
  RunOptions run_opts{max_rounds, std::size_t{1} << 20, ExecutionMode::Serial};
  return run_configuration(c, opts, run_opts, std::string(to_string(kind)));
}

std::uint64_t rounds_to_gather(const Trace& t) {
  return t.verdict.kind == VerdictKind::Gathered ? t.verdict.round - t.initial.round : 0;
}

struct SideLevel {
  Side side;
  int level;
};

std::vector<SideLevel> side_levels(const Configuration& c) {
  std::vector<SideLevel> out;
  for (const Robot& r : c.robots) {
    if (r.crashed) continue;
    const LocalView v = observe(c, r);
    out.push_back({side_of(v), local_level(v)});
  }
  return out;
}

std::vector<std::vector<Point2>> occupied_per_round(const Trace& trace) {
  std::vector<std::vector<Point2>> out;
  out.reserve(trace.length() + 1);
  for (std::size_t t = 0; t <= trace.length(); ++t) out.push_back(trace.configuration_at(t).occupied());
  return out;
}

// d' <= d - c, with c = sqrt(c_sq) and d >= c, in squared form.
bool decrease_at_least(const Scalar& d_sq, const Scalar& next_sq, const Scalar& c_sq) {
  const Scalar r = d_sq + c_sq - next_sq;
  if (r.sign() < 0) return false;
  return Scalar(4) * c_sq * d_sq <= r * r;
}

}  // namespace

std::vector<CaseReport> verify_suir_common() {
  // Outcome per (left level, right level) residue: gathered or the next class.
  static const int kNext[4][4][2] = {
      {{-1, -1}, {2, 1}, {-1, -1}, {-1, -1}},
      {{-1, -1}, {2, 2}, {-1, -1}, {-1, -1}},
      {{-1, -1}, {2, 3}, {-1, -1}, {-1, -1}},
      {{1, 0}, {1, 3}, {3, 0}, {0, 0}},
  };
  std::vector<CaseReport> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CaseReport rep;
      rep.id = residues("common", i, j);
      const bool terminal = kNext[i][j][0] < 0;
      rep.expected = terminal ? "gathered" : residues("", kNext[i][j][0], kNext[i][j][1]);
      // Robot 0 at the origin sees the other to the East, so it is the left one.
      const Trace t = run_rigid(two_robots(level_frame(i, false), level_frame(j, false)), AlgorithmKind::Suir, 10);
      rep.rounds = rounds_to_gather(t);
      if (t.length() >= 1 && t.configuration_at(1).gathered()) {
        rep.observed = "gathered";
      } else if (t.length() >= 1) {
        const auto sl = side_levels(t.configuration_at(1));
        int left = -1, right = -1;
        for (const auto& s : sl) (s.side == Side::Left ? left : right) = mod4(s.level);
        rep.observed = (left < 0 || right < 0) ? "orientation changed" : residues("", left, right);
      }
      rep.pass = rep.observed == rep.expected && rep.rounds >= 1 && rep.rounds <= 3;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<CaseReport> verify_suir_opposite() {
  struct Row {
    bool left;
    int i, j;
    const char* next;  // empty when the class gathers in one round
  };
  static const Row kRows[] = {
      {true, 0, 0, ""},       {true, 0, 1, ""},       {true, 0, 2, ""},       {true, 0, 3, "R(0,1)"},
      {true, 1, 1, ""},       {true, 1, 2, ""},       {true, 1, 3, "R(0,2)"}, {true, 2, 2, ""},
      {true, 2, 3, "R(0,3)"}, {true, 3, 3, "R(3,3)"}, {false, 0, 0, ""},      {false, 0, 1, "L(1,2)"},
      {false, 0, 2, ""},      {false, 0, 3, ""},      {false, 1, 1, "L(1,1)"}, {false, 1, 2, "L(2,3)"},
      {false, 1, 3, "L(0,2)"}, {false, 2, 2, ""},     {false, 2, 3, ""},      {false, 3, 3, ""},
  };
  std::vector<CaseReport> out;
  for (const Row& row : kRows) {
    CaseReport rep;
    rep.id = residues(row.left ? "L" : "R", row.i, row.j);
    rep.expected = row.next[0] == '\0' ? "gathered" : row.next;
    rep.pass = true;
    std::ostringstream observed;
    for (int swap = 0; swap < 2; ++swap) {
      const int l0 = swap == 0 ? row.i : row.j;
      const int l1 = swap == 0 ? row.j : row.i;
      // Both left: robot 1 turns half way round. Both right: robot 0 does.
      const Configuration c = row.left ? two_robots(level_frame(l0, false), level_frame(l1, true))
                                       : two_robots(level_frame(l0, true), level_frame(l1, false));
      const Trace t = run_rigid(c, AlgorithmKind::Suir, 10);
      std::string obs;
      if (t.length() >= 1 && t.configuration_at(1).gathered()) {
        obs = "gathered";
      } else if (t.length() >= 1) {
        const auto sl = side_levels(t.configuration_at(1));
        int a = mod4(sl[0].level), b = mod4(sl[1].level);
        if (a > b) std::swap(a, b);
        obs = sl[0].side != sl[1].side ? "orientation changed"
                                       : residues(sl[0].side == Side::Left ? "L" : "R", a, b);
      }
      const std::uint64_t rounds = rounds_to_gather(t);
      rep.rounds = std::max(rep.rounds, rounds);
      rep.pass = rep.pass && obs == rep.expected && rounds >= 1 && rounds <= 3;
      observed << (swap == 0 ? "" : " / ") << obs;
    }
    rep.observed = observed.str();
    if (rep.pass) rep.observed = rep.expected;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CaseReport> verify_suir_crash() {
  std::vector<CaseReport> out;
  for (Side side : {Side::Left, Side::Right}) {
    for (int l = 0; l < 4; ++l) {
      CaseReport rep;
      rep.id = std::string("crash ") + (side == Side::Left ? "left " : "right ") + std::to_string(l);
      // A right robot climbs one level per midpoint move until its level is 1
      // mod 4; a left robot until 3 mod 4. Then it jumps onto the crash point.
      const int target = side == Side::Left ? 3 : 1;
      const std::uint64_t expected_rounds = static_cast<std::uint64_t>(mod4(target - l)) + 1;
      rep.expected = "gathered at crash point in " + std::to_string(expected_rounds);
      Configuration c;
      const Point2 crash = side == Side::Left ? Point2{Scalar(kCaseDistance), Scalar(0)} : Point2{};
      const Point2 start = side == Side::Left ? Point2{} : Point2{Scalar(kCaseDistance), Scalar(0)};
      c.robots.push_back({0, start, level_frame(l, false), false});
      c.robots.push_back({1, crash, Frame::identity(), true});
      const Trace t = run_rigid(c, AlgorithmKind::Suir, 10);
      rep.rounds = rounds_to_gather(t);
      const bool at_crash = t.verdict.point && *t.verdict.point == crash;
      rep.observed = t.verdict.kind != VerdictKind::Gathered
                         ? "not gathered"
                         : (at_crash ? "gathered at crash point in " : "gathered elsewhere in ") +
                               std::to_string(rep.rounds);
      rep.pass = rep.observed == rep.expected && rep.rounds <= 4;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

MonitorResult monitor_contraction(const std::vector<Scalar>& dist_sq, const Rational& delta) {
  MonitorResult res;
  const Scalar delta_sq(delta * delta);
  for (std::size_t t = 0; t + 2 < dist_sq.size(); ++t) {
    const Scalar& d0 = dist_sq[t];
    const Scalar& d2 = dist_sq[t + 2];
    if (d0 < delta_sq) continue;
    ++res.checked;
    bool ok;
    if (d0 <= Scalar(4) * delta_sq) {
      ok = Scalar(4) * d2 <= d0;  // min(delta, d/2) = d/2
    } else {
      ok = decrease_at_least(d0, d2, delta_sq);
    }
    if (!ok) {
      res.pass = false;
      res.detail = "round " + std::to_string(t) + ": d^2 " + d0.to_string() + " -> " + d2.to_string();
      return res;
    }
  }
  return res;
}

MonitorResult monitor_contraction(const Trace& trace, const Rational& delta) {
  std::vector<Scalar> ds;
  for (const auto& occ : occupied_per_round(trace)) {
    if (occ.size() > 2) {
      return {false, 0, "contraction monitor needs a two-robot trace"};
    }
    ds.push_back(occ.size() == 2 ? dist_sq(occ[0], occ[1]) : Scalar(0));
  }
  // A gathered trace stays gathered; pad so the last windows are evaluated.
  if (trace.verdict.kind == VerdictKind::Gathered) {
    ds.push_back(Scalar(0));
    ds.push_back(Scalar(0));
  }
  return monitor_contraction(ds, delta);
}

MonitorResult monitor_level_jump(const std::vector<std::vector<Point2>>& occupied) {
  MonitorResult res;
  std::optional<std::pair<std::size_t, int>> previous;
  for (std::size_t t = 0; t < occupied.size(); ++t) {
    if (occupied[t].size() != 2) continue;
    const int level = level_of_sq(dist_sq(occupied[t][0], occupied[t][1]));
    if (previous) {
      ++res.checked;
      if (level - previous->second > 7) {
        res.pass = false;
        res.detail = "level " + std::to_string(previous->second) + " at round " + std::to_string(previous->first) +
                     " to " + std::to_string(level) + " at round " + std::to_string(t);
        return res;
      }
    }
    previous = {t, level};
  }
  return res;
}

MonitorResult monitor_level_jump(const Trace& trace) { return monitor_level_jump(occupied_per_round(trace)); }

MonitorResult monitor_hull(const Trace& trace) {
  MonitorResult res;
  const auto occ = occupied_per_round(trace);
  for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
    ++res.checked;
    for (const Point2& p : occ[t + 1]) {
      if (!in_convex_hull(occ[t], p)) {
        res.pass = false;
        std::ostringstream os;
        os << "round " << t + 1 << ": " << p << " leaves the hull";
        res.detail = os.str();
        return res;
      }
    }
  }
  return res;
}

MonitorResult monitor_crash_immobility(const Trace& trace) {
  MonitorResult res;
  for (std::size_t t = 1; t <= trace.length(); ++t) {
    const auto& positions = trace.rounds[t - 1].positions;
    ++res.checked;
    for (std::size_t i = 0; i < trace.initial.robots.size(); ++i) {
      const Robot& r = trace.initial.robots[i];
      if (r.crashed && positions[i] != r.position) {
        res.pass = false;
        res.detail = "crashed robot " + std::to_string(r.id) + " moved in round " + std::to_string(t);
        return res;
      }
    }
  }
  return res;
}

const char* to_string(BoundVerdict verdict) {
  switch (verdict) {
    case BoundVerdict::Pass: return "pass";
    case BoundVerdict::Fail: return "fail";
    case BoundVerdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

ComplexityInputs complexity_inputs(const Configuration& initial, const Rational& c1, const Rational& c2) {
  ComplexityInputs in;
  const bool any_correct =
      std::any_of(initial.robots.begin(), initial.robots.end(), [](const Robot& r) { return !r.crashed; });
  if (initial.occupied().size() == 2 && any_correct) {
    const LevelSpread s = level_spread(initial);
    in.delta_level = s.delta();
    in.lowest_level = std::max(0, s.lowest);
  }
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), mpz_class(in.lowest_level).get_mpz_t());
  if (root * root < in.lowest_level) ++root;
  const Rational bound = c1 * (Rational(in.delta_level) * in.delta_level + Rational(root)) + c2;
  const mpz_class floor_bound = bound.get_num() / bound.get_den();
  in.bound = floor_bound.get_ui();
  return in;
}

BoundVerdict check_complexity_bound(const Trace& trace, const Rational& c1, const Rational& c2) {
  for (const Robot& r : trace.initial.robots) {
    if (r.crashed) return BoundVerdict::Inapplicable;
  }
  if (trace.verdict.kind != VerdictKind::Gathered) return BoundVerdict::Inapplicable;
  const ComplexityInputs in = complexity_inputs(trace.initial, c1, c2);
  return rounds_to_gather(trace) <= in.bound ? BoundVerdict::Pass : BoundVerdict::Fail;
}

Rational complexity_c1() { return Rational(2); }
Rational complexity_c2() { return Rational(8); }

GeometryReport verify_crash_geometry() {
  GeometryReport report;
  report.pass = true;
  std::set<Rational> spans, gaps;

  enum Mix { LeftOnly = 1, RightOnly = 2, Both = 3 };
  struct Spec {
    int far;    // sides of the B robots at the far point
    int crash;  // sides of the correct robots at the crash point (0: none)
    bool c1;    // a C1 robot at the far point as well
  };
  std::vector<Spec> specs;
  for (int f = 1; f <= 3; ++f) {
    for (int k = 1; k <= 3; ++k) specs.push_back({f, k, false});
  }
  specs.push_back({Both, 0, false});
  for (int f = 1; f <= 3; ++f) specs.push_back({f, 0, true});

  for (const Spec& spec : specs) {
    for (int layout = 0; layout < 2; ++layout) {
      // B(2) covers levels [10, 12) and C1(2) is level 12; a C1 robot reads a
      // level-11 distance at half scale.
      const int level = spec.c1 ? 11 : 10;
      const Rational d = kCaseDistance * pow2(-level);
      const Point2 crash = layout == 0 ? Point2{} : Point2{Scalar(d), Scalar(0)};
      const Point2 far = layout == 0 ? Point2{Scalar(d), Scalar(0)} : Point2{};
      // A robot with an unrotated frame sees itself Left when the other point
      // lies at larger x; a half turn flips that.
      auto frame_for = [](const Point2& at, const Point2& other, Side side, const Rational& scale) {
        const bool natural_left = other.x > at.x;
        const bool turn = natural_left != (side == Side::Left);
        return Frame{turn ? Rational(-scale) : scale, 0, false};
      };
      Configuration c;
      auto add = [&c](const Point2& p, const Frame& f, bool crashed) {
        c.robots.push_back({static_cast<RobotId>(c.robots.size()), p, f, crashed});
      };
      add(crash, Frame::identity(), true);
      for (Side s : {Side::Left, Side::Right}) {
        const int bit = s == Side::Left ? LeftOnly : RightOnly;
        if ((spec.far & bit) != 0) add(far, frame_for(far, crash, s, Rational(1)), false);
        if ((spec.crash & bit) != 0) add(crash, frame_for(crash, far, s, Rational(1)), false);
      }
      if (spec.c1) add(far, frame_for(far, crash, Side::Left, Rational(1, 2)), false);

      GeometryCase gc;
      gc.id = std::string(spec.c1 ? "B+C1" : "B") + " far=" + "-LRB"[spec.far] + " crash=" + "-LRB"[spec.crash] +
              (layout == 0 ? " crash-west" : " crash-east");

      // Expected values straight from the case analysis.
      const bool far_right = (spec.far & RightOnly) != 0;
      const Rational span = far_right ? Rational(9, 10) : Rational(8, 9);
      Rational crash_gap;
      std::optional<Rational> far_gap;
      if (spec.c1) {
        crash_gap = Rational(1, 2) / span;
      } else if (spec.crash != 0) {
        crash_gap = ((spec.crash & RightOnly) != 0 ? Rational(1, 10) : Rational(1, 9)) / span;
        if (spec.far == Both) far_gap = Rational(1, 81);
      } else {
        crash_gap = Rational(80, 81);
        far_gap = Rational(1, 81);
      }

      StepOptions opts{decision_fn(AlgorithmKind::Suig), {}, {}, ExecutionMode::Serial};
      const Configuration next = step(c, opts);
      const auto occ = next.occupied();
      const auto line = collinear_frame(occ);
      std::ostringstream detail;
      bool ok = line.has_value() && occ.size() >= 3;
      if (ok) {
        const auto& t = line->params;
        const Scalar total = t.back() - t.front();
        const bool crash_first = line->at(t.front()) == crash;
        ok = crash_first || line->at(t.back()) == crash;
        if (ok) {
          const Scalar gap_crash = crash_first ? t[1] - t[0] : t[t.size() - 1] - t[t.size() - 2];
          const Scalar gap_far = crash_first ? t[t.size() - 1] - t[t.size() - 2] : t[1] - t[0];
          // The x-axis layout makes every param an x-difference, hence rational.
          gc.span_ratio = (total / Scalar(d)).rational_part();
          gc.crash_gap_ratio = (gap_crash / total).rational_part();
          gc.far_gap_ratio = (gap_far / total).rational_part();
          spans.insert(gc.span_ratio);
          gaps.insert(gc.crash_gap_ratio);
          ok = gc.span_ratio == span && gc.crash_gap_ratio == crash_gap;
          if (far_gap) {
            ok = ok && *gc.far_gap_ratio == *far_gap;
          } else if (!spec.c1) {
            ok = ok && *gc.far_gap_ratio > Rational(1, 2);
          }
          detail << "d'/d=" << gc.span_ratio.get_str() << " crash gap=" << gc.crash_gap_ratio.get_str()
                 << " far gap=" << gc.far_gap_ratio->get_str();
        } else {
          detail << "crash point is not an extremity";
        }
      } else {
        detail << "expected at least three aligned points, got " << occ.size();
      }

      gc.text_everywhere = true;
      for (const Robot& r : next.robots) {
        if (r.crashed) continue;
        const Phase ph = classify_view(observe(next, r));
        gc.text_everywhere = gc.text_everywhere && ph.kind == PhaseKind::Text && ph.anchor &&
                             *ph.anchor == r.frame.to_local(crash - r.position);
      }
      const auto after = step(next, opts).occupied();
      gc.gathered_next = after.size() == 1 && after.front() == crash;
      gc.pass = ok && gc.text_everywhere && gc.gathered_next;
      if (!gc.text_everywhere) detail << "; some view is not Text(crash point)";
      if (!gc.gathered_next) detail << "; not gathered at the crash point next round";
      gc.detail = detail.str();
      report.pass = report.pass && gc.pass;
      report.cases.push_back(std::move(gc));
    }
  }
  report.span_ratios.assign(spans.begin(), spans.end());
  report.crash_gap_ratios.assign(gaps.begin(), gaps.end());
  const std::set<Rational> want_spans{Rational(9, 10), Rational(8, 9)};
  const std::set<Rational> want_gaps{Rational(1, 9),   Rational(9, 80),  Rational(10, 81), Rational(1, 8),
                                     Rational(80, 81), Rational(5, 9), Rational(9, 16)};
  report.pass = report.pass && spans == want_spans && gaps == want_gaps;
  return report;
}

ImpossibilityReport demo_impossibility(AlgorithmKind kind, std::uint64_t horizon, const Frame& r_frame,
                                       const Frame& other_frame, std::size_t copies_per_point,
                                       const Point2& other_position) {
  ImpossibilityReport rep;
  rep.name = std::string(to_string(kind)) + (copies_per_point > 1 ? " bivalent x" + std::to_string(copies_per_point) : "");
  Configuration c;
  for (std::size_t i = 0; i < copies_per_point; ++i) {
    c.robots.push_back({static_cast<RobotId>(c.robots.size()), {}, r_frame, false});
  }
  for (std::size_t i = 0; i < copies_per_point; ++i) {
    c.robots.push_back({static_cast<RobotId>(c.robots.size()), other_position, other_frame, false});
  }
  StepOptions opts{decision_fn(kind), {SchedulerKind::SsyncImpossibility, 0}, {}, ExecutionMode::Serial};
  RunOptions run_opts{horizon, std::size_t{1} << 22, ExecutionMode::Serial};
  const Trace trace = run_configuration(c, opts, run_opts, std::string(to_string(kind)));
  rep.gathered = trace.verdict.kind == VerdictKind::Gathered;
  rep.rounds = trace.length();
  rep.activation = activation_stats(trace);

  Configuration cur = trace.initial;
  for (std::size_t t = 0; t < trace.length(); ++t) {
    const RoundRecord& rec = trace.rounds[t];
    const auto occ = cur.occupied();
    if (occ.size() > 2) rep.groups_intact = false;
    // Recompute both pending moves and the activation the rules prescribe.
    const Robot& r = cur.robots[0];
    std::size_t o = 0;
    while (o < cur.robots.size() && cur.robots[o].position == r.position) ++o;
    if (o == cur.robots.size()) break;
    const Robot& other = cur.robots[o];
    auto dest = [&](const Robot& robot) {
      return robot.position + robot.frame.to_global(decide(kind, observe(cur, robot)).command.destination);
    };
    const Point2 r_dest = dest(r);
    const Point2 o_dest = dest(other);
    ImpossibilityRule expected;
    bool r_group, o_group;
    if (r_dest == r.position) {
      expected = ImpossibilityRule::RIdle, r_group = true, o_group = false;
    } else if (r_dest != other.position) {
      expected = ImpossibilityRule::RMovesElsewhere, r_group = true, o_group = false;
    } else if (o_dest != other.position) {
      expected = ImpossibilityRule::BothMove, r_group = true, o_group = true;
    } else {
      expected = ImpossibilityRule::OnlyOther, r_group = false, o_group = true;
    }
    std::vector<RobotId> want;
    for (const Robot& x : cur.robots) {
      const bool in_r = x.position == r.position;
      if (in_r ? r_group : o_group) want.push_back(x.id);
    }
    if (!rec.rule || *rec.rule != expected || rec.active != want) {
      if (rep.rules_consistent) rep.detail = "round " + std::to_string(t + 1) + ": rule mismatch";
      rep.rules_consistent = false;
    }
    if (rec.rule) ++rep.rule_counts[*rec.rule];
    cur = trace.configuration_at(t + 1);
    if (copies_per_point > 1) {
      for (std::size_t i = 0; i < cur.robots.size(); ++i) {
        const std::size_t leader = i < copies_per_point ? 0 : copies_per_point;
        if (cur.robots[i].position != cur.robots[leader].position) rep.groups_intact = false;
      }
    }
  }
  return rep;
}

namespace {

// One-dimensional reference for the lift check, written against rationals
// only: positions along the line, frames as a sign and a positive scale.
int line_level(const Rational& d_sq) {
  int i = 0;
  Rational low(1);  // 4^-i
  while (d_sq < low) {
    low /= 4;
    ++i;
  }
  while (d_sq >= low * 4) {
    low *= 4;
    --i;
  }
  return i;
}

Rational line_fraction(bool left, int level) {
  switch (mod4(level)) {
    case 1: return left ? Rational(1, 2) : Rational(1);
    case 3: return left ? Rational(1) : Rational(1, 2);
    default: return Rational(1, 2);
  }
}

struct LineRobot {
  Rational s;
  int sign;        // +1 when the robot's frame keeps the line direction
  Rational scale;  // positive
};

Rational random_rational(std::mt19937_64& rng, long lo, long hi, unsigned long den) {
  std::uniform_int_distribution<long> num(lo, hi);
  return Rational(num(rng), den);
}

}  // namespace

LiftReport verify_lift_equivalence(std::uint64_t instances, std::uint64_t seed) {
  LiftReport rep;
  std::mt19937_64 rng(seed);
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto fail = [&rep](std::string msg) {
    if (rep.pass) rep.detail = std::move(msg);
    rep.pass = false;
  };
  for (std::uint64_t inst = 0; inst < instances; ++inst) {
    ++rep.instances;
    // Unit direction from a Pythagorean triple.
    const long m = pick(2, 7), n = pick(1, m - 1);
    const Rational hyp(m * m + n * n);
    Point2 v{Scalar(Rational(m * m - n * n) / hyp), Scalar(Rational(2 * m * n) / hyp)};
    if (pick(0, 1) != 0) std::swap(v.x, v.y);
    if (pick(0, 1) != 0) v = Scalar(-1) * v;
    const Point2 origin{Scalar(random_rational(rng, -64, 64, 8)), Scalar(random_rational(rng, -64, 64, 8))};

    std::vector<LineRobot> line(2);
    Configuration c;
    for (std::size_t i = 0; i < 2; ++i) {
      Rational s;
      do {
        s = random_rational(rng, -256, 256, 16);
      } while (i == 1 && s == line[0].s);
      // Rotation by a rational angle, a rational scale, maybe a mirror.
      const long p = pick(2, 6), q = pick(1, p - 1);
      const Rational h(p * p + q * q);
      const Rational scale(pick(1, 40), static_cast<unsigned long>(pick(1, 64)));
      Frame f{scale * Rational(p * p - q * q) / h, scale * Rational(2 * p * q) / h, pick(0, 1) != 0};
      if (pick(0, 1) != 0) f.a = -f.a, f.b = -f.b;
      const Point2 hv = f.to_local(v);
      const bool positive = hv.x.sign() > 0 || (hv.x.is_zero() && hv.y.sign() > 0);
      line[i] = {s, positive ? 1 : -1, scale};
      c.robots.push_back({static_cast<RobotId>(i), origin + Scalar(s) * v, f, false});
    }
    MovementAdversary adv;
    if (inst % 2 == 1) {
      adv.kind = MovementKind::MinProgress;
      adv.delta = ratio(pick(1, 16), 32);
    }
    StepOptions opts{decision_fn(AlgorithmKind::LiftedSuir), {}, adv, ExecutionMode::Serial};
    RunOptions run_opts{200, std::size_t{1} << 20, ExecutionMode::Serial};
    const Trace trace = run_configuration(c, opts, run_opts, "lifted_suir");

    const std::string where = "instance " + std::to_string(inst);
    for (std::size_t t = 0;; ++t) {
      const Configuration cur = trace.configuration_at(t);
      for (std::size_t i = 0; i < 2; ++i) {
        if (dot(cur.robots[i].position - origin, v) != Scalar(line[i].s)) {
          fail(where + " round " + std::to_string(t) + ": projected position differs");
        }
      }
      const bool line_gathered = line[0].s == line[1].s;
      if (line_gathered != cur.gathered()) fail(where + ": gathering differs at round " + std::to_string(t));
      if (line_gathered || t == trace.length() || !rep.pass) break;
      ++rep.rounds_compared;

      std::vector<Rational> next(2);
      for (std::size_t i = 0; i < 2; ++i) {
        const LineRobot& me = line[i];
        const Rational off = line[1 - i].s - me.s;
        const Rational local = me.sign * me.scale * off;
        const bool left = sgn(local) > 0;
        const int level = line_level(local * local);
        const Rational lambda = line_fraction(left, level);
        Rational travel = lambda * abs(off);
        if (adv.kind == MovementKind::MinProgress && travel > adv.delta) travel = adv.delta;
        next[i] = me.s + (sgn(off) > 0 ? travel : Rational(-travel));

        const LocalView view = observe(cur, cur.robots[i]);
        const RobotStep& st = trace.rounds[t].steps[i];
        const Point2& q = view.other();
        const Scalar planar_lambda = q.x.is_zero() ? st.local_destination.y / q.y : st.local_destination.x / q.x;
        if ((side_of(view) == Side::Left) != left) fail(where + ": side differs");
        if (local_level(view) != level) fail(where + ": level differs");
        if (planar_lambda != Scalar(lambda)) fail(where + ": fraction differs");
      }
      line[0].s = next[0];
      line[1].s = next[1];
    }
    if (!rep.pass) break;
  }
  return rep;
}

AxisReport verify_axis_rendezvous() {
  AxisReport rep;
  auto fail = [&rep](bool& flag, std::string msg) {
    if (flag && rep.detail.empty()) rep.detail = std::move(msg);
    flag = false;
  };
  // Frames that share the northern direction: scaled, possibly mirrored east-west.
  const std::vector<Frame> frames = {
      Frame::identity(), {Rational(3), 0, false}, {Rational(-1), 0, true}, {Rational(-1, 4), 0, true}};

  // Symmetric starts: both robots on one horizontal, equal progress each round.
  for (const Rational& delta : {Rational(1, 10), Rational(1, 3), Rational(1)}) {
    for (long gap : {1L, 2L, 5L, 13L}) {
      for (std::size_t f = 0; f < frames.size(); ++f) {
        ++rep.runs;
        Configuration c;
        c.robots.push_back({0, {Scalar(Rational(-1, 3)), Scalar(2)}, frames[f], false});
        c.robots.push_back({1, {Scalar(Rational(-1, 3) + gap), Scalar(2)}, frames[(f + 1) % frames.size()], false});
        MovementAdversary adv{MovementKind::MinProgress, delta, 0, {}};
        const Trace t = run_rigid(c, AlgorithmKind::AxisRdv, 1000, adv);
        const Scalar delta_sq(delta * delta);
        for (std::size_t r = 0; r < t.length(); ++r) {
          const auto a = t.configuration_at(r).occupied();
          const auto b = t.configuration_at(r + 1).occupied();
          const Scalar d0 = dist_sq(a[0], a[1]);
          const Scalar d1 = b.size() == 2 ? dist_sq(b[0], b[1]) : Scalar(0);
          const std::string where = "symmetric gap " + std::to_string(gap) + " delta " + delta.get_str() +
                                    " round " + std::to_string(r + 1);
          if (d0 >= Scalar(2) * delta_sq) {
            ++rep.rounds_checked;
            if (!decrease_at_least(d0, d1, Scalar(2) * delta_sq)) {
              fail(rep.claimed_bound, where + ": d^2 " + d0.to_string() + " -> " + d1.to_string() +
                                          " decreases by less than sqrt(2) delta");
            }
          }
          if (d0 >= delta_sq && !decrease_at_least(d0, d1, delta_sq)) {
            fail(rep.travel_bound, where + ": decrease below delta");
          }
        }
        if (t.verdict.kind != VerdictKind::Gathered) fail(rep.symmetric_gathered, "symmetric start did not gather");
      }
    }
  }

  // Asymmetric starts: the northern robot waits while the other comes up.
  const std::vector<MovementAdversary> adversaries = {
      {}, {MovementKind::MinProgress, Rational(1, 7), 0, {}}, {MovementKind::SeededRandom, Rational(1, 5), 11, {}}};
  const std::vector<std::pair<Point2, Point2>> starts = {
      {{Scalar(0), Scalar(0)}, {Scalar(3), Scalar(5)}},
      {{Scalar(4), Scalar(-2)}, {Scalar(-1), Scalar(Rational(1, 2))}},
      {{Scalar(0), Scalar(-7)}, {Scalar(0), Scalar(1)}},
  };
  for (const auto& adv : adversaries) {
    for (const auto& [south, north] : starts) {
      for (std::size_t f = 0; f < frames.size(); ++f) {
        ++rep.runs;
        Configuration c;
        c.robots.push_back({0, south, frames[f], false});
        c.robots.push_back({1, north, frames[(f + 2) % frames.size()], false});
        const Trace t = run_rigid(c, AlgorithmKind::AxisRdv, 1000, adv);
        for (const RoundRecord& rec : t.rounds) {
          if (rec.positions[1] != north) fail(rep.asymmetric_ok, "northern robot moved");
        }
        if (t.verdict.kind != VerdictKind::Gathered || !t.verdict.point || *t.verdict.point != north) {
          fail(rep.asymmetric_ok, "asymmetric start did not gather at the northern robot");
        }
      }
    }
  }
  return rep;
}

MonitorResult verify_one_round_contraction(std::uint64_t samples, std::uint64_t seed) {
  MonitorResult res;
  std::mt19937_64 rng(seed);
  auto frac = [&rng](const Rational& lo, const Rational& hi) -> Rational {
    const long k = std::uniform_int_distribution<long>(0, 64)(rng);
    return lo + (hi - lo) * ratio(k, 64);
  };
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Rational d(std::uniform_int_distribution<long>(1, 400)(rng), 40);
    const Rational delta(std::uniform_int_distribution<long>(1, 100)(rng), 40);
    const Rational half = d / 2;
    const Rational m = std::min(delta, half);
    // x: robot heading for the middle; y: the other robot's travel, which
    // targets the middle, the other robot, or is zero when it crashed.
    const Rational x = frac(m, half);
    const int mode = static_cast<int>(i % 4);
    Rational y;
    if (mode == 0) y = frac(m, half);
    if (mode == 1) y = frac(std::min(delta, d), d);
    if (mode == 2) y = 0;
    Rational xx = x;
    if (mode == 3) xx = 0, y = frac(std::min(delta, d), d);  // the middle robot crashed
    ++res.checked;
    if (abs(d - xx - y) > d - m) {
      res.pass = false;
      res.detail = "d=" + d.get_str() + " x=" + xx.get_str() + " y=" + y.get_str();
      return res;
    }
  }
  return res;
}

}  // namespace suig
