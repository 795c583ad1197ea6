#pragma once

// Seeded generators shared by the property tests.

#include <array>
#include <cstdint>
#include <random>

#include "suig/field.hpp"
#include "suig/model.hpp"

namespace suig::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long range = 40, long max_den = 12) { return ratio(integer(-range, range), integer(1, max_den)); }

  Rational nonzero_rational() {
    Rational r;
    do {
      r = rational();
    } while (sgn(r) == 0);
    return r;
  }

  Scalar scalar(bool allow_root3 = true) {
    return allow_root3 && coin() ? Scalar(rational(), rational(10, 6)) : Scalar(rational());
  }

  Point2 point(bool allow_root3 = false) { return {scalar(allow_root3), scalar(allow_root3)}; }

  /// Rational rotation-scaling from a Pythagorean triple, random reflection.
  Frame frame() {
    static constexpr std::array<std::array<long, 3>, 5> kTriples = {
        {{1, 0, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}}};
    const auto& t = kTriples[static_cast<std::size_t>(integer(0, kTriples.size() - 1))];
    const Rational s = ratio(integer(1, 8), integer(1, 8));
    Frame f{s * ratio(t[0], t[2]), s * ratio(t[1], t[2]), coin()};
    if (coin()) std::swap(f.a, f.b);
    if (coin()) f.a = -f.a;
    if (coin()) f.b = -f.b;
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace suig::testing
