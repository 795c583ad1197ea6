#include "suig/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace suig {

namespace {

// 4^-i as an exact rational; i may be negative.
Scalar pow4_neg(int i) {
  mpz_class p = mpz_class(1) << (2 * static_cast<mp_bitcnt_t>(std::abs(i)));
  if (i >= 0) return Scalar(Rational(mpz_class(1), p));
  return Scalar(Rational(p));
}

Circle diameter_circle(const Point2& a, const Point2& b) {
  Point2 center{(a.x + b.x) / 2, (a.y + b.y) / 2};
  return {center, dist_sq(a, b) / 4};
}

}  // namespace

int level_of_sq(const Scalar& d_sq) {
  if (d_sq.sign() <= 0) throw std::domain_error("level_of_sq: squared distance must be positive");
  // Seed from a floating estimate, then settle exactly.
  const double log4 = d_sq.log2_magnitude() / 2.0;
  int level = static_cast<int>(std::ceil(-log4));
  while (d_sq < pow4_neg(level)) ++level;
  while (d_sq >= pow4_neg(level - 1)) --level;
  return level;
}

Circle circumcircle(const Point2& a, const Point2& b, const Point2& c) {
  const Point2 ab = b - a;
  const Point2 ac = c - a;
  const Scalar d = 2 * cross(ab, ac);
  if (d.is_zero()) throw std::invalid_argument("circumcircle: collinear points");
  const Scalar nb = dot(ab, ab);
  const Scalar nc = dot(ac, ac);
  Point2 offset{(ac.y * nb - ab.y * nc) / d, (ab.x * nc - ac.x * nb) / d};
  Scalar r2 = dot(offset, offset);
  return {a + offset, std::move(r2)};
}

std::vector<Point2> unique_points(std::span<const Point2> points) {
  // Equality is much cheaper than ordering (no cross products), so drop
  // repeats of the previous point before sorting.
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const Point2& p : points) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Circle smallest_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("smallest_enclosing_circle: no points");
  const std::vector<Point2> pts = unique_points(points);
  Circle c{pts[0], Scalar(0)};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (c.contains(pts[i])) continue;
    c = {pts[i], Scalar(0)};
    for (std::size_t j = 0; j < i; ++j) {
      if (c.contains(pts[j])) continue;
      c = diameter_circle(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (c.contains(pts[k])) continue;
        c = circumcircle(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

std::optional<CollinearFrame> collinear_frame(std::span<const Point2> points) {
  if (points.empty()) return std::nullopt;
  std::vector<Point2> pts = unique_points(points);
  CollinearFrame frame{pts.front(), Point2{Scalar(1), Scalar(0)}, {}};
  if (pts.size() == 1) {
    frame.params.emplace_back(0);
    return frame;
  }
  const Point2 span = pts.back() - pts.front();
  for (const Point2& p : pts) {
    if (!cross(span, p - frame.origin).is_zero()) return std::nullopt;
  }
  // Lexicographic sorting makes span.x >= 0, with span.y > 0 when span.x == 0.
  const bool vertical = span.x.is_zero();
  frame.direction = vertical ? Point2{Scalar(0), Scalar(1)} : Point2{Scalar(1), span.y / span.x};
  frame.params.reserve(pts.size());
  for (const Point2& p : pts) {
    frame.params.push_back(vertical ? p.y - frame.origin.y : p.x - frame.origin.x);
  }
  return frame;
}

bool in_convex_hull(std::span<const Point2> points, const Point2& q) {
  if (points.empty()) throw std::invalid_argument("in_convex_hull: no points");
  std::vector<Point2> pts = unique_points(points);
  if (pts.size() == 1) return pts.front() == q;
  if (auto line = collinear_frame(pts)) {
    const Point2& lo = pts.front();
    const Point2& hi = pts.back();
    if (!cross(hi - lo, q - lo).is_zero()) return false;
    return dot(q - lo, hi - lo).sign() >= 0 && dot(q - hi, lo - hi).sign() >= 0;
  }
  // Andrew's monotone chain, counter-clockwise, collinear points dropped.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], q) < 0) return false;
  }
  return true;
}

}  // namespace suig
