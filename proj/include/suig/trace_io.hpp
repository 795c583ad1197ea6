#pragma once

// Trace export: one JSON object per line, and a per-round CSV summary.

#include <ostream>

#include "suig/scenario.hpp"

namespace suig {

struct TraceWriteOptions {
  /// Embedded in the header record so the file alone is enough to replay.
  const Scenario* scenario = nullptr;
  /// Append per-robot activation gaps to the verdict record.
  bool activation_stats = false;
};

/// Header record, one record per round, then the verdict record.
void write_trace_jsonl(std::ostream& out, const Trace& trace, const TraceWriteOptions& options = {});

/// Columns: round, occupied, sec_diameter_sq, min_level, max_level, phases.
/// Row t describes the configuration after t rounds and the tags decided
/// from it; level columns are empty unless exactly two points are occupied.
void write_summary_csv(std::ostream& out, const Trace& trace);

}  // namespace suig
