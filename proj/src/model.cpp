#include "suig/model.hpp"

#include <algorithm>

namespace suig {

Point2 Frame::to_local(const Point2& v) const {
  Point2 out;
  if (sgn(b) == 0) {
    out = v;
    out.x.scale_by(a);
    out.y.scale_by(a);
  } else {
    out = {a * v.x - b * v.y, b * v.x + a * v.y};
  }
  if (reflect) out.y = -out.y;
  return out;
}

Point2 Frame::to_global(const Point2& local) const {
  Point2 w = local;
  if (reflect) w.y = -w.y;
  if (sgn(b) == 0) {
    const Rational inv = 1 / a;
    w.x.scale_by(inv);
    w.y.scale_by(inv);
    return w;
  }
  const Scalar s = scale_sq();
  return {(a * w.x + b * w.y) / s, (a * w.y - b * w.x) / s};
}

Frame Frame::then(const Frame& other) const {
  // Frames act on z = x + iy as z -> m z, or z -> conj(m z) when reflecting.
  const Rational ga = other.a;
  const Rational gb = reflect ? Rational(-other.b) : other.b;
  Frame out;
  out.a = ga * a - gb * b;
  out.b = ga * b + gb * a;
  out.reflect = reflect != other.reflect;
  return out;
}

std::vector<Point2> Configuration::occupied() const {
  std::vector<Point2> pts;
  pts.reserve(robots.size());
  for (const Robot& r : robots) pts.push_back(r.position);
  return unique_points(pts);
}

std::optional<Point2> Configuration::crash_location() const {
  for (const Robot& r : robots) {
    if (r.crashed) return r.position;
  }
  return std::nullopt;
}

void Configuration::check_single_crash_location() const {
  auto loc = crash_location();
  if (!loc) return;
  for (const Robot& r : robots) {
    if (r.crashed && r.position != *loc) {
      throw ContractViolation("crashed robots occupy more than one location");
    }
  }
}

const Point2& LocalView::other() const {
  if (points.size() != 2) throw ContractViolation("view does not consist of exactly two points");
  return points[0].is_origin() ? points[1] : points[0];
}

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

LocalView observe(const Configuration& config, const Robot& robot) {
  LocalView view;
  view.points.reserve(config.robots.size());
  const Point2* previous = nullptr;
  for (const Robot& r : config.robots) {
    // Co-located robots are often listed together; one copy is enough.
    if (previous && *previous == r.position) continue;
    previous = &r.position;
    view.points.push_back(robot.frame.to_local(r.position - robot.position));
  }
  std::sort(view.points.begin(), view.points.end());
  view.points.erase(std::unique(view.points.begin(), view.points.end()), view.points.end());
  return view;
}

Side side_of_offset(const Point2& other) {
  const int sx = other.x.sign();
  if (sx > 0 || (sx == 0 && other.y.sign() > 0)) return Side::Left;
  return Side::Right;
}

Side side_of(const LocalView& view) { return side_of_offset(view.other()); }

int local_level(const LocalView& view) {
  const Point2& q = view.other();
  return level_of_sq(dot(q, q));
}

LevelSpread level_spread(const Configuration& config) {
  if (config.occupied().size() != 2) {
    throw ContractViolation("level spread needs a two-point configuration");
  }
  std::optional<LevelSpread> spread;
  for (const Robot& r : config.robots) {
    if (r.crashed) continue;
    const int level = local_level(observe(config, r));
    if (!spread) {
      spread = LevelSpread{level, level};
    } else {
      spread->lowest = std::min(spread->lowest, level);
      spread->highest = std::max(spread->highest, level);
    }
  }
  if (!spread) throw ContractViolation("level spread needs at least one correct robot");
  return *spread;
}

int delta_level(const Configuration& config) { return level_spread(config).delta(); }

int lowest_level(const Configuration& config) { return level_spread(config).lowest; }

}  // namespace suig
