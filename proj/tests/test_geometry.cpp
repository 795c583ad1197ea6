#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "suig/geometry.hpp"
#include "test_support.hpp"

using namespace suig;

namespace {

Point2 p(long x, long y) { return {Scalar(x), Scalar(y)}; }

/// Circumcircle by solving the two perpendicular-bisector equations with
/// Cramer's rule, written independently of the library.
std::optional<Circle> circle_through(const Point2& a, const Point2& b, const Point2& c) {
  const Scalar a11 = 2 * (b.x - a.x), a12 = 2 * (b.y - a.y);
  const Scalar a21 = 2 * (c.x - a.x), a22 = 2 * (c.y - a.y);
  const Scalar r1 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
  const Scalar r2 = c.x * c.x + c.y * c.y - a.x * a.x - a.y * a.y;
  const Scalar det = a11 * a22 - a12 * a21;
  if (det.is_zero()) return std::nullopt;
  const Point2 center{(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
  return Circle{center, dist_sq(center, a)};
}

/// Smallest circle among all pair and triple circles that contain every point.
Circle brute_force_sec(const std::vector<Point2>& pts) {
  std::optional<Circle> best;
  auto consider = [&](const Circle& c) {
    for (const Point2& q : pts) {
      if (!c.contains(q)) return;
    }
    if (!best || c.radius_sq < best->radius_sq) best = c;
  };
  if (pts.size() == 1) return {pts[0], Scalar(0)};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point2 mid{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      consider({mid, dist_sq(mid, pts[i])});
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (auto c = circle_through(pts[i], pts[j], pts[k])) consider(*c);
      }
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("smallest enclosing circle examples") {
  const std::vector<Point2> one{p(0, 0)};
  CHECK(smallest_enclosing_circle(one) == Circle{p(0, 0), Scalar(0)});
  const std::vector<Point2> two{p(0, 0), p(2, 0)};
  CHECK(smallest_enclosing_circle(two) == Circle{p(1, 0), Scalar(1)});
  const std::vector<Point2> tri{p(0, 0), p(2, 0), {Scalar(1), Scalar::sqrt3()}};
  const Circle c = smallest_enclosing_circle(tri);
  CHECK(c.center == Point2{Scalar(1), Scalar(Rational(0), ratio(1, 3))});
  CHECK(c.radius_sq == Scalar::fraction(4, 3));
  const std::vector<Point2> none;
  CHECK_THROWS_AS(smallest_enclosing_circle(none), std::invalid_argument);
}

TEST_CASE("smallest enclosing circle matches brute force") {
  testing::Gen g(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 6));
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(g.point(trial % 4 == 0));
    // Repeats are legal input.
    if (n > 2 && g.coin()) pts.push_back(pts[0]);
    const Circle got = smallest_enclosing_circle(pts);
    const Circle want = brute_force_sec(unique_points(pts));
    CHECK(got.radius_sq == want.radius_sq);
    CHECK(got.center == want.center);
    for (const Point2& q : pts) CHECK(got.contains(q));
  }
}

TEST_CASE("circumcircle") {
  const Circle c = circumcircle(p(0, 0), p(4, 0), p(0, 2));
  CHECK(c.center == p(2, 1));
  CHECK(c.radius_sq == Scalar(5));
  CHECK_THROWS_AS(circumcircle(p(0, 0), p(1, 1), p(2, 2)), std::invalid_argument);
}

TEST_CASE("collinear frames") {
  const std::vector<Point2> diag{p(0, 0), p(1, 1), p(3, 3)};
  const auto f = collinear_frame(diag);
  REQUIRE(f.has_value());
  CHECK(f->direction == p(1, 1));
  CHECK(f->params == std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(3)});

  const std::vector<Point2> triangle{p(0, 0), p(1, 0), p(0, 1)};
  CHECK_FALSE(collinear_frame(triangle).has_value());

  const std::vector<Point2> axis{p(10, 0), p(0, 0), p(9, 0), p(9, 0)};
  const auto h = collinear_frame(axis);
  REQUIRE(h.has_value());
  CHECK(h->params == std::vector<Scalar>{Scalar(0), Scalar(9), Scalar(10)});

  const std::vector<Point2> vertical{p(2, 5), p(2, -1)};
  const auto v = collinear_frame(vertical);
  REQUIRE(v.has_value());
  CHECK(v->origin == p(2, -1));
  CHECK(v->direction == p(0, 1));
  CHECK(v->at(v->params.back()) == p(2, 5));
}

TEST_CASE("collinear frames reproduce their points") {
  testing::Gen g(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 o = g.point(true);
    Point2 dir = g.point(true);
    if (dir.is_origin()) dir = p(1, 0);
    std::vector<Point2> pts;
    const long n = g.integer(2, 7);
    for (long i = 0; i < n; ++i) pts.push_back(o + Scalar(g.rational()) * dir);
    const auto f = collinear_frame(pts);
    REQUIRE(f.has_value());
    const auto uniq = unique_points(pts);
    REQUIRE(f->params.size() == uniq.size());
    for (std::size_t i = 0; i + 1 < f->params.size(); ++i) CHECK(f->params[i] < f->params[i + 1]);
    for (const Scalar& t : f->params) {
      bool found = false;
      for (const Point2& q : uniq) found = found || f->at(t) == q;
      CHECK(found);
    }
  }
}

TEST_CASE("unique points are sorted and distinct") {
  testing::Gen g(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point2> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(p(g.integer(0, 2), g.integer(0, 2)));
    const auto u = unique_points(pts);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(u[i] < u[i + 1]);
    for (const Point2& q : pts) CHECK(std::find(u.begin(), u.end(), q) != u.end());
  }
}

TEST_CASE("convex hull membership") {
  const std::vector<Point2> square{p(0, 0), p(2, 0), p(2, 2), p(0, 2)};
  CHECK(in_convex_hull(square, p(1, 1)));
  CHECK(in_convex_hull(square, p(2, 1)));
  CHECK(in_convex_hull(square, p(0, 0)));
  CHECK_FALSE(in_convex_hull(square, p(3, 1)));
  CHECK_FALSE(in_convex_hull(square, {Scalar::fraction(-1, 100), Scalar(1)}));

  const std::vector<Point2> segment{p(0, 0), p(4, 4)};
  CHECK(in_convex_hull(segment, p(1, 1)));
  CHECK_FALSE(in_convex_hull(segment, p(5, 5)));
  CHECK_FALSE(in_convex_hull(segment, p(1, 2)));

  const std::vector<Point2> single{p(3, 3)};
  CHECK(in_convex_hull(single, p(3, 3)));
  CHECK_FALSE(in_convex_hull(single, p(3, 4)));
}

TEST_CASE("convex combinations lie in the hull") {
  testing::Gen g(24);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point2> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(g.point());
    Rational w1 = ratio(g.integer(0, 10), 10);
    Rational w2 = ratio(g.integer(0, 10), 10) * (1 - w1);
    const Rational w3 = 1 - w1 - w2;
    const Point2 q = Scalar(w1) * pts[0] + Scalar(w2) * pts[1] + Scalar(w3) * pts[2];
    CHECK(in_convex_hull(pts, q));
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(p(0, 0), p(1, 0), p(0, 1)) == 1);
  CHECK(orientation(p(0, 0), p(0, 1), p(1, 0)) == -1);
  CHECK(orientation(p(0, 0), p(1, 1), p(2, 2)) == 0);
}
