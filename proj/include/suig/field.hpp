#pragma once

// Exact scalars over Q(sqrt3) and the plane points built from them.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace suig {

using Rational = mpq_class;

/// num/den in lowest terms; gmp arithmetic assumes canonical operands.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact number rational_part + root3_part * sqrt(3).
///
/// Both coefficients are kept canonical (lowest terms, positive denominator),
/// so structural equality coincides with numeric equality: sqrt3 is
/// irrational, hence a + b*sqrt3 == 0 iff a == b == 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long num, long den) { return Scalar(Rational(num, den)); }

  const Rational& rational_part() const { return a_; }
  const Rational& root3_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// -1, 0 or +1 according to the sign of the real value.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);
  /// Multiplication by a rational, skipping the sqrt3 cross terms.
  Scalar& scale_by(const Rational& q);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& l, const Scalar& r);

  /// Largest bit length among the four integers that make up the value.
  std::size_t bit_length() const;

  /// Rough magnitude for diagnostics and search seeding; never used to decide.
  double approx() const;
  /// Approximate log2 |value|; safe for magnitudes outside double range.
  double log2_magnitude() const;

  /// Text form "p/q" or "p/q+r/s*sqrt3" (integers print without "/1").
  std::string to_string() const;
  /// Accepts the forms produced by to_string, plus "r/s*sqrt3", "-sqrt3",
  /// "a-r/s*sqrt3". Throws std::invalid_argument on malformed input.
  static Scalar parse(std::string_view text);

 private:
  Rational a_{0};
  Rational b_{0};
};

Scalar abs(const Scalar& s);
Scalar square(const Scalar& s);

/// Exact square root when it lies in Q(sqrt3); empty otherwise.
std::optional<Scalar> exact_sqrt(const Scalar& s);

/// A rational r with 0 <= r <= sqrt(s) and r >= sqrt(s) * (1 - 2^-100).
/// Requires s >= 0.
Rational sqrt_lower_bound(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2&, const Point2&) = default;
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point2& l, const Point2& r) {
    if (auto c = l.x <=> r.x; c != 0) return c;
    return l.y <=> r.y;
  }

  Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point2& operator-=(const Point2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Point2 operator+(Point2 l, const Point2& r) { return l += r; }
  friend Point2 operator-(Point2 l, const Point2& r) { return l -= r; }
  friend Point2 operator*(const Scalar& k, const Point2& p) { return {k * p.x, k * p.y}; }

  bool is_origin() const { return x.is_zero() && y.is_zero(); }
  std::size_t bit_length() const;
};

Scalar dot(const Point2& u, const Point2& v);
Scalar cross(const Point2& u, const Point2& v);
Scalar dist_sq(const Point2& p, const Point2& q);
/// Sign of the turn p -> q -> r (+1 counter-clockwise).
int orientation(const Point2& p, const Point2& q, const Point2& r);

std::ostream& operator<<(std::ostream& os, const Point2& p);

struct Circle {
  Point2 center;
  Scalar radius_sq;

  bool contains(const Point2& p) const { return dist_sq(p, center) <= radius_sq; }
  friend bool operator==(const Circle&, const Circle&) = default;
};

}  // namespace suig
