#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "stsurf/staircase.hpp"

namespace stsurf {

struct DiffusionOptions {
  int directions = 20;
  long double length = 1e5L;       ///< Euclidean length of each orbit
  std::uint64_t seed = 1;
  long double tolerance = 1e-12L;  ///< crossing decisions closer than this are ambiguous
  long double return_after = 10;   ///< returns to 0 are counted only after this time
  long long trace_every = 0;       ///< keep every n-th crossing in the trace; 0 keeps none
};

struct TraceRow {
  long double t = 0;
  std::vector<long long> s;
  long long returns = 0;
};

struct DiffusionRun {
  double angle = 0;  ///< radians, direction (cos, sin)
  int square = 1;
  long double x = 0, y = 0;
  long double elapsed = 0;
  bool truncated = false;
  std::string note;
  GroupValue final_sum;
  double drift_ratio = 0;  ///< ||S_T|| / T
  long long returns = 0;
  long long max_excursion = 0;
  long long crossings = 0;
  std::vector<TraceRow> trace;
};

struct DiffusionSummary {
  std::vector<DiffusionRun> runs;
  double drift_q10 = 0, drift_median = 0, drift_q90 = 0, drift_max = 0;
  int returning = 0;  ///< runs with at least one counted return
  int truncated = 0;
};

/// Straight-line orbits in seeded uniform directions from seeded uniform start
/// points. Runs hitting an ambiguous crossing are cut short and flagged.
DiffusionSummary diffusion_experiment(const StaircaseSpec& spec, const DiffusionOptions& options);

/// Columns: t, s1..sd, returns.
void write_trace_csv(std::ostream& out, const DiffusionRun& run);
/// One row per run.
void write_summary_csv(std::ostream& out, const DiffusionSummary& summary);

}  // namespace stsurf
