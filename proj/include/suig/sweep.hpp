#pragma once

// Seeded scenario families and batch runs over them. Runs are independent,
// so a sweep spreads them over OpenMP threads; every run itself is serial.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "suig/scenario.hpp"
#include "suig/verification.hpp"

namespace suig {

enum class SweepFamily {
  SuirContraction,  // two robots, SUIR, rigid / min-progress / random stops
  SuigNoCrash,      // 2..16 robots, SUIG, rigid FSYNC
  SuigCrash,        // same with one crashed location
};

std::string_view to_string(SweepFamily family);
SweepFamily parse_family(std::string_view name);

struct GeneratedCase {
  std::uint64_t seed = 0;
  std::string start;  // "two-point", "bivalent", "scattered", "collinear"
  Scenario scenario;
};

GeneratedCase generate_case(SweepFamily family, std::uint64_t seed);

struct SweepRow {
  std::uint64_t seed = 0;
  std::string start;
  std::size_t robots = 0;
  int delta_level = 0;
  int lowest_level = 0;
  std::string verdict;  // "gathered", "round_cap_reached", "error"
  std::uint64_t rounds = 0;
  std::uint64_t bound = 0;
  BoundVerdict bound_verdict = BoundVerdict::Inapplicable;
  bool at_crash = true;  // gathered exactly on the crashed location (crash family)
  bool contraction = true;
  bool level_jump = true;
  bool hull = true;
  bool crash_immobility = true;
  std::string error;

  bool gathered() const { return verdict == "gathered"; }
  /// Every property the family is checked against holds.
  bool ok(SweepFamily family) const;
};

struct SweepOptions {
  SweepFamily family = SweepFamily::SuigNoCrash;
  std::uint64_t first_seed = 0;
  std::uint64_t count = 100;
  ExecutionMode mode = ExecutionMode::Parallel;  // across runs
  Rational c1 = complexity_c1();
  Rational c2 = complexity_c2();
};

/// Run one generated case and evaluate the family's monitors on its trace.
SweepRow run_case(SweepFamily family, const GeneratedCase& gc, const Rational& c1, const Rational& c2);

std::vector<SweepRow> run_sweep(const SweepOptions& options);

/// One line per run plus a header; see README for the columns.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace suig
