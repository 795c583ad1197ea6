#pragma once

#include <optional>
#include <span>
#include <vector>

#include "suig/field.hpp"

namespace suig {

/// The integer i with 4^-i <= d_sq < 4^(1-i), i.e. d in [2^-i, 2^(1-i)).
/// Throws std::domain_error when d_sq <= 0.
int level_of_sq(const Scalar& d_sq);

/// Exact smallest enclosing circle (incremental, exact predicates).
/// Throws std::invalid_argument on an empty input.
Circle smallest_enclosing_circle(std::span<const Point2> points);

/// Circle through three non-collinear points.
Circle circumcircle(const Point2& a, const Point2& b, const Point2& c);

/// Line parametrisation of a collinear point set.
///
/// `origin` is the lexicographically smallest point and `direction` is
/// normalised so that its first non-zero coordinate is 1; every point is
/// origin + t * direction for its entry t in `params` (ascending). Param
/// differences are therefore proportional to along-line distances.
struct CollinearFrame {
  Point2 origin;
  Point2 direction;
  std::vector<Scalar> params;

  Point2 at(const Scalar& t) const { return origin + t * direction; }
};

std::optional<CollinearFrame> collinear_frame(std::span<const Point2> points);

/// Sorted, duplicate-free copy.
std::vector<Point2> unique_points(std::span<const Point2> points);

/// Whether q lies in the closed convex hull of `points` (non-empty).
bool in_convex_hull(std::span<const Point2> points, const Point2& q);

}  // namespace suig
