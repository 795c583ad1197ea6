#include <doctest.h>

#include "suig/algorithms.hpp"
#include "suig/model.hpp"
#include "test_support.hpp"

using namespace suig;

namespace {

Point2 p(long x, long y) { return {Scalar(x), Scalar(y)}; }
Point2 q(long xn, long xd, long yn, long yd) { return {Scalar::fraction(xn, xd), Scalar::fraction(yn, yd)}; }

Configuration config(std::vector<Robot> robots) {
  Configuration c;
  c.robots = std::move(robots);
  return c;
}

LocalView two_point(const Point2& other) { return LocalView{unique_points(std::vector<Point2>{p(0, 0), other})}; }

Frame inverse(const Frame& g) {
  // Non-reflecting only: [[a, -b], [b, a]]^-1 = [[a, b], [-b, a]] / (a^2 + b^2).
  const Rational s = g.scale_sq();
  return {g.a / s, -g.b / s, false};
}

}  // namespace

TEST_CASE("observe examples") {
  const Configuration gathered = config({{0, p(3, 3), {}, false}, {1, p(3, 3), {}, false}, {2, p(3, 3), {}, false}});
  CHECK(observe(gathered, gathered.robots[1]).points == std::vector<Point2>{p(0, 0)});

  Configuration pair = config({{0, p(0, 0), {}, false}, {1, p(2, 0), {}, false}});
  CHECK(observe(pair, pair.robots[0]).points == std::vector<Point2>{p(0, 0), p(2, 0)});
  pair.robots[0].frame = {Rational(0), Rational(1), false};
  CHECK(observe(pair, pair.robots[0]).points == std::vector<Point2>{p(0, 0), p(0, 2)});
}

TEST_CASE("views have no multiplicity and contain the observer") {
  testing::Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    Configuration c;
    const long n = g.integer(1, 8);
    for (long i = 0; i < n; ++i) {
      const Point2 at = i > 0 && g.coin() ? c.robots[static_cast<std::size_t>(g.integer(0, i - 1))].position : g.point();
      c.robots.push_back({static_cast<RobotId>(i), at, g.frame(), false});
    }
    for (const Robot& r : c.robots) {
      const LocalView v = observe(c, r);
      CHECK(v.size() == c.occupied().size());
      CHECK(std::find(v.points.begin(), v.points.end(), p(0, 0)) != v.points.end());
      CHECK(unique_points(v.points) == v.points);
    }
  }
}

TEST_CASE("frames map back and forth") {
  testing::Gen g(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Frame f = g.frame();
    const Frame h = g.frame();
    const Point2 v = g.point(true);
    CHECK(f.to_global(f.to_local(v)) == v);
    CHECK(f.to_local(f.to_global(v)) == v);
    CHECK(f.then(h).to_local(v) == h.to_local(f.to_local(v)));
    CHECK(dot(f.to_local(v), f.to_local(v)) == Scalar(f.scale_sq()) * dot(v, v));
  }
  CHECK(Frame{Rational(0), Rational(0), false}.invertible() == false);
}

TEST_CASE("side of a two-point view") {
  CHECK(side_of(two_point(p(5, 0))) == Side::Left);
  CHECK(side_of(two_point(p(0, 3))) == Side::Left);
  CHECK(side_of(two_point(p(-1, 7))) == Side::Right);
  CHECK(side_of(two_point(p(0, -3))) == Side::Right);
  CHECK(side_of(two_point(p(2, -9))) == Side::Left);
  CHECK_THROWS_AS(side_of(LocalView{{p(0, 0)}}), ContractViolation);
}

TEST_CASE("a half turn flips the side") {
  testing::Gen g(33);
  const Frame half_turn{Rational(-1), Rational(0), false};
  for (int trial = 0; trial < 300; ++trial) {
    Configuration c = config({{0, g.point(true), g.frame(), false}, {1, g.point(true), {}, false}});
    if (c.robots[0].position == c.robots[1].position) continue;
    const Side before = side_of(observe(c, c.robots[0]));
    c.robots[0].frame = c.robots[0].frame.then(half_turn);
    CHECK(side_of(observe(c, c.robots[0])) != before);
  }
}

TEST_CASE("local levels") {
  CHECK(local_level(two_point(p(1, 0))) == 0);
  CHECK(local_level(two_point(q(0, 1, 3, 8))) == 2);
  // Global distance 1 read through a frame with scale_sq 4.
  const Configuration c = config({{0, p(0, 0), {Rational(2), Rational(0), false}, false}, {1, p(1, 0), {}, false}});
  CHECK(local_level(observe(c, c.robots[0])) == -1);
}

TEST_CASE("scaling a frame by 2^k shifts the level by -k") {
  testing::Gen g(34);
  for (int trial = 0; trial < 200; ++trial) {
    Configuration c = config({{0, g.point(), g.frame(), false}, {1, g.point(), {}, false}});
    if (c.robots[0].position == c.robots[1].position) continue;
    const int before = local_level(observe(c, c.robots[0]));
    const long k = g.integer(-6, 6);
    const Rational factor = k >= 0 ? Rational(1L << k) : ratio(1, 1L << -k);
    c.robots[0].frame.a *= factor;
    c.robots[0].frame.b *= factor;
    CHECK(local_level(observe(c, c.robots[0])) == before - k);
  }
}

TEST_CASE("level spread") {
  const Configuration same = config({{0, p(0, 0), {}, false}, {1, p(1, 0), {}, false}, {2, p(1, 0), {}, false}});
  CHECK(delta_level(same) == 0);
  CHECK(lowest_level(same) == 0);

  const Configuration mixed = config({{0, p(0, 0), {}, false}, {1, p(1, 0), {Rational(4), Rational(0), false}, false}});
  CHECK(delta_level(mixed) == 2);
  CHECK(lowest_level(mixed) == -2);

  // Crashed robots do not take part.
  const Configuration crashed = config({{0, p(0, 0), {}, false}, {1, p(1, 0), {Rational(4), Rational(0), false}, true}});
  CHECK(delta_level(crashed) == 0);

  const Configuration triangle = config({{0, p(0, 0), {}, false}, {1, p(1, 0), {}, false}, {2, p(0, 1), {}, false}});
  CHECK_THROWS_AS(delta_level(triangle), ContractViolation);
}

TEST_CASE("views are invariant under translation") {
  testing::Gen g(35);
  for (int trial = 0; trial < 100; ++trial) {
    Configuration c;
    for (RobotId i = 0; i < 5; ++i) c.robots.push_back({i, g.point(true), g.frame(), false});
    Configuration moved = c;
    const Point2 shift = g.point(true);
    for (Robot& r : moved.robots) r.position += shift;
    for (std::size_t i = 0; i < c.robots.size(); ++i) {
      CHECK(observe(c, c.robots[i]) == observe(moved, moved.robots[i]));
    }
  }
}

TEST_CASE("views are invariant under a global similarity absorbed by the frames") {
  testing::Gen g(36);
  for (int trial = 0; trial < 100; ++trial) {
    Frame sim = g.frame();
    sim.reflect = false;
    Configuration c;
    for (RobotId i = 0; i < 5; ++i) c.robots.push_back({i, g.point(true), g.frame(), false});
    Configuration mapped = c;
    for (Robot& r : mapped.robots) {
      r.position = sim.to_local(r.position);
      r.frame = inverse(sim).then(r.frame);
    }
    for (std::size_t i = 0; i < c.robots.size(); ++i) {
      const LocalView before = observe(c, c.robots[i]);
      CHECK(before == observe(mapped, mapped.robots[i]));
      CHECK(decide(AlgorithmKind::Suig, before).command ==
            decide(AlgorithmKind::Suig, observe(mapped, mapped.robots[i])).command);
    }
  }
}

TEST_CASE("crash location") {
  Configuration c = config({{0, p(0, 0), {}, true}, {1, p(0, 0), {}, true}, {2, p(1, 0), {}, false}});
  CHECK(c.crash_location() == p(0, 0));
  CHECK_NOTHROW(c.check_single_crash_location());
  c.robots[2].crashed = true;
  CHECK_THROWS_AS(c.check_single_crash_location(), ContractViolation);
  c.robots[0].crashed = c.robots[1].crashed = c.robots[2].crashed = false;
  CHECK_FALSE(c.crash_location().has_value());
}
