#include "suig/algorithms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace suig {

namespace {

int mod4(int level) { return ((level % 4) + 4) % 4; }

long isqrt(long v) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void require_at_most_two(const LocalView& view, const char* who) {
  if (view.size() > 2) {
    throw ContractViolation(std::string(who) + " is only defined on views of one or two points");
  }
}

std::string side_level_tag(const LocalView& view) {
  if (view.size() == 1) return "gathered";
  return std::string(to_string(side_of(view))) + ":" + std::to_string(local_level(view));
}

}  // namespace

std::string Phase::label() const {
  switch (kind) {
    case PhaseKind::A: return "A(" + std::to_string(k) + ")";
    case PhaseKind::B: return "B(" + std::to_string(k) + ")";
    case PhaseKind::C1: return "C1(" + std::to_string(k) + ")";
    case PhaseKind::C2: return "C2(" + std::to_string(k) + ")";
    case PhaseKind::C3: return "C3(" + std::to_string(k) + ")";
    case PhaseKind::Text: return "Text";
    case PhaseKind::Tsec: return "Tsec";
  }
  return "?";
}

long band_start(int k) { return static_cast<long>(k) * (k + 2); }

Phase phase_of_level(int level) {
  // A(0) absorbs every level below 1, which also covers the formula's C1(0).
  if (level < 1) return Phase::band(PhaseKind::A, 0);
  if (level < 2) return Phase::band(PhaseKind::C2, 0);
  if (level < 3) return Phase::band(PhaseKind::C3, 0);
  // S_k <= l  <=>  (k + 1)^2 <= l + 1.
  const int k = static_cast<int>(isqrt(static_cast<long>(level) + 1) - 1);
  const long offset = level - band_start(k);
  if (offset < k) return Phase::band(PhaseKind::A, k);
  if (offset < 2L * k) return Phase::band(PhaseKind::B, k);
  if (offset == 2L * k) return Phase::band(PhaseKind::C1, k);
  if (offset == 2L * k + 1) return Phase::band(PhaseKind::C2, k);
  return Phase::band(PhaseKind::C3, k);
}

bool is_extremity_signature(const Scalar& ratio) {
  static const std::array<Scalar, 7> kSignatures = {
      Scalar::fraction(1, 9),   Scalar::fraction(1, 8),   Scalar::fraction(9, 80),
      Scalar::fraction(10, 81), Scalar::fraction(10, 18), Scalar::fraction(9, 16),
      Scalar::fraction(80, 81)};
  for (const Scalar& s : kSignatures) {
    if (s == ratio) return true;
  }
  return false;
}

Phase classify_view(const LocalView& view) {
  if (view.size() == 2) return phase_of_level(local_level(view));
  if (view.size() < 2) return {};
  auto line = collinear_frame(view.points);
  if (!line) return {};
  const auto& t = line->params;
  const std::size_t n = t.size();
  const Scalar length = t.back() - t.front();
  const bool low = is_extremity_signature((t[1] - t[0]) / length);
  const bool high = is_extremity_signature((t[n - 1] - t[n - 2]) / length);
  if (low == high) return {};
  return {PhaseKind::Text, 0, line->at(low ? t.front() : t.back())};
}

Scalar suig_fraction(const Phase& phase, Side side) {
  const bool left = side == Side::Left;
  switch (phase.kind) {
    case PhaseKind::A:
    case PhaseKind::C1: return Scalar::fraction(1, 2);
    case PhaseKind::B: return left ? Scalar::fraction(1, 9) : Scalar::fraction(1, 10);
    case PhaseKind::C2: return left ? Scalar(1) : Scalar::fraction(1, 2);
    case PhaseKind::C3: return left ? Scalar::fraction(1, 2) : Scalar(1);
    case PhaseKind::Text:
    case PhaseKind::Tsec: break;
  }
  throw ContractViolation("suig_fraction: phase " + phase.label() + " is not a two-point band");
}

MoveCommand suig_decide(const LocalView& view) {
  const Phase phase = classify_view(view);
  switch (phase.kind) {
    case PhaseKind::Text: return {*phase.anchor};
    case PhaseKind::Tsec: return {smallest_enclosing_circle(view.points).center};
    default: return MoveCommand::toward(view.other(), suig_fraction(phase, side_of(view)));
  }
}

Scalar suir_line(Side side, const Scalar& dist_sq) {
  const int r = mod4(level_of_sq(dist_sq));
  const Scalar half = Scalar::fraction(1, 2);
  if (r % 2 == 0) return half;
  if (r == 1) return side == Side::Left ? half : Scalar(1);
  return side == Side::Left ? Scalar(1) : half;
}

MoveCommand suir_decide(const LocalView& view) {
  require_at_most_two(view, "suir_decide");
  if (view.size() == 1) return MoveCommand::stay();
  const Point2& q = view.other();
  return MoveCommand::toward(q, suir_line(side_of(view), dot(q, q)));
}

MoveCommand axis_rdv_decide(const LocalView& view) {
  require_at_most_two(view, "axis_rdv_decide");
  if (view.size() == 1) return MoveCommand::stay();
  const Point2& q = view.other();
  const int sy = q.y.sign();
  if (sy == 0) return {{q.x / 2, abs(q.x) * Scalar::sqrt3() / 2}};
  if (sy > 0) return {q};
  return MoveCommand::stay();
}

MoveCommand midpoint_decide(const LocalView& view) {
  require_at_most_two(view, "midpoint_decide");
  if (view.size() == 1) return MoveCommand::stay();
  return MoveCommand::toward(view.other(), Scalar::fraction(1, 2));
}

PlanarAlgorithm lift_line_algorithm(LineAlgorithm line) {
  return [line = std::move(line)](const LocalView& view) -> MoveCommand {
    require_at_most_two(view, "lifted line algorithm");
    if (view.size() == 1) return MoveCommand::stay();
    const Point2& q = view.other();
    return MoveCommand::toward(q, line(side_of(view), dot(q, q)));
  };
}

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::Suig: return "suig";
    case AlgorithmKind::Suir: return "suir";
    case AlgorithmKind::AxisRdv: return "axis_rdv";
    case AlgorithmKind::LiftedSuir: return "lifted_suir";
    case AlgorithmKind::Midpoint: return "midpoint";
  }
  return "?";
}

AlgorithmKind parse_algorithm(std::string_view name) {
  for (AlgorithmKind k : {AlgorithmKind::Suig, AlgorithmKind::Suir, AlgorithmKind::AxisRdv,
                          AlgorithmKind::LiftedSuir, AlgorithmKind::Midpoint}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

Decision decide(AlgorithmKind kind, const LocalView& view) {
  switch (kind) {
    case AlgorithmKind::Suig: {
      const Phase phase = classify_view(view);
      std::string tag = phase.label();
      if (view.size() == 2) tag += std::string(":") + to_string(side_of(view));
      return {suig_decide(view), std::move(tag)};
    }
    case AlgorithmKind::Suir: return {suir_decide(view), side_level_tag(view)};
    case AlgorithmKind::LiftedSuir: {
      static const PlanarAlgorithm lifted = lift_line_algorithm(suir_line);
      return {lifted(view), side_level_tag(view)};
    }
    case AlgorithmKind::AxisRdv: {
      MoveCommand cmd = axis_rdv_decide(view);
      std::string tag = "gathered";
      if (view.size() == 2) {
        const int sy = view.other().y.sign();
        tag = sy == 0 ? "apex" : (sy > 0 ? "to-other" : "wait");
      }
      return {std::move(cmd), std::move(tag)};
    }
    case AlgorithmKind::Midpoint:
      return {midpoint_decide(view), view.size() == 1 ? "gathered" : "middle"};
  }
  throw std::invalid_argument("decide: unknown algorithm kind");
}

}  // namespace suig
