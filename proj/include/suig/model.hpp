#pragma once

// Robots, their private frames, configurations and local views.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "suig/field.hpp"
#include "suig/geometry.hpp"

namespace suig {

/// Raised when an operation is called outside its documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Private similarity of a robot: local = R(M * v), where M = [[a, -b], [b, a]]
/// and R mirrors the local y coordinate when `reflect` is set.
struct Frame {
  Rational a{1};
  Rational b{0};
  bool reflect = false;

  static Frame identity() { return {}; }
  /// Pure rotation-scaling; `reflect` off.
  static Frame similarity(Rational a, Rational b) { return {std::move(a), std::move(b), false}; }

  bool invertible() const { return sgn(a) != 0 || sgn(b) != 0; }
  /// Squared local-unit factor: global d_sq reads as scale_sq() * d_sq.
  Rational scale_sq() const { return a * a + b * b; }

  Point2 to_local(const Point2& v) const;
  Point2 to_global(const Point2& local) const;

  /// Frame that maps v to other.to_local(this->to_local(v)).
  Frame then(const Frame& other) const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

using RobotId = std::uint32_t;

struct Robot {
  RobotId id = 0;
  Point2 position;
  Frame frame;
  bool crashed = false;

  friend bool operator==(const Robot&, const Robot&) = default;
};

struct Configuration {
  std::vector<Robot> robots;
  std::uint64_t round = 0;

  /// Distinct occupied positions, lexicographically sorted.
  std::vector<Point2> occupied() const;
  bool gathered() const { return occupied().size() <= 1; }
  std::optional<Point2> crash_location() const;
  /// Throws ContractViolation if crashed robots sit at more than one point.
  void check_single_crash_location() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// What a robot sees: occupied points in its own frame, itself at the origin,
/// without multiplicities.
struct LocalView {
  std::vector<Point2> points;  // sorted, distinct, contains (0, 0)

  std::size_t size() const { return points.size(); }
  /// The non-origin point of a two-point view.
  const Point2& other() const;

  friend bool operator==(const LocalView&, const LocalView&) = default;
};

enum class Side { Left, Right };

const char* to_string(Side side);

LocalView observe(const Configuration& config, const Robot& robot);

/// Left when the other point lies East, or due North; Right otherwise.
Side side_of(const LocalView& view);
/// Same rule applied to a local offset directly.
Side side_of_offset(const Point2& other);

int local_level(const LocalView& view);

struct LevelSpread {
  int lowest = 0;
  int highest = 0;
  int delta() const { return highest - lowest; }
};

/// Min/max local level over correct robots of a two-point configuration.
/// Throws ContractViolation otherwise or when no correct robot exists.
LevelSpread level_spread(const Configuration& config);
int delta_level(const Configuration& config);
int lowest_level(const Configuration& config);

}  // namespace suig
