#pragma once

// Decision functions: each maps a local view to a destination in the same
// local frame. Two-point moves are encoded as fractions of the way toward the
// other point so that nothing ever needs a Euclidean norm.

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "suig/model.hpp"

namespace suig {

enum class PhaseKind { A, B, C1, C2, C3, Text, Tsec };

struct Phase {
  PhaseKind kind = PhaseKind::Tsec;
  int k = 0;                   // band index for A..C3
  std::optional<Point2> anchor;  // the extremity for Text

  static Phase band(PhaseKind kind, int k) { return {kind, k, std::nullopt}; }

  /// "A(3)", "C2(0)", "Text", "Tsec".
  std::string label() const;
  friend bool operator==(const Phase&, const Phase&) = default;
};

/// S_k = k (k + 2), the first level of band k.
long band_start(int k);

/// Band of a two-point level. Levels below 1 are A(0).
Phase phase_of_level(int level);

/// Full configuration class as seen through one view.
Phase classify_view(const LocalView& view);

/// Gap ratios e/d that mark a unique extremity as the crash location.
bool is_extremity_signature(const Scalar& ratio);

struct MoveCommand {
  Point2 destination;  // local frame; the origin means stay

  static MoveCommand stay() { return {}; }
  static MoveCommand toward(const Point2& other, const Scalar& fraction) {
    return {fraction * other};
  }
  bool is_stay() const { return destination.is_origin(); }
  friend bool operator==(const MoveCommand&, const MoveCommand&) = default;
};

/// Fraction of the way toward the other point for a two-point SUIG view.
Scalar suig_fraction(const Phase& phase, Side side);

MoveCommand suig_decide(const LocalView& view);
MoveCommand suir_decide(const LocalView& view);
MoveCommand axis_rdv_decide(const LocalView& view);
/// Every robot heads for the middle of a two-point view.
MoveCommand midpoint_decide(const LocalView& view);

/// A one-dimensional rendezvous rule: given the side a robot sees itself on
/// and its squared distance to the other robot (own units), the fraction of
/// that distance to travel toward the other robot. Zero means stay.
using LineAlgorithm = std::function<Scalar(Side, const Scalar& dist_sq)>;
using PlanarAlgorithm = std::function<MoveCommand(const LocalView&)>;

/// The rendezvous rule on levels mod 4 in its one-dimensional form.
Scalar suir_line(Side side, const Scalar& dist_sq);

/// Run a line rule on two-point planar views; the answer is mapped back along
/// the segment. Views with three or more points raise ContractViolation.
PlanarAlgorithm lift_line_algorithm(LineAlgorithm line);

enum class AlgorithmKind { Suig, Suir, AxisRdv, LiftedSuir, Midpoint };

std::string_view to_string(AlgorithmKind kind);
/// Throws std::invalid_argument on an unknown name.
AlgorithmKind parse_algorithm(std::string_view name);

struct Decision {
  MoveCommand command;
  std::string tag;  // short human-readable reason (phase, side and level, ...)
};

/// Dispatch by kind, with a tag describing the branch taken.
Decision decide(AlgorithmKind kind, const LocalView& view);

}  // namespace suig
