#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/approximation.hpp"
#include "stsurf/directions.hpp"
#include "stsurf/group.hpp"
#include "stsurf/numeric.hpp"
#include "stsurf/staircase.hpp"
#include "stsurf/tracer.hpp"

namespace stsurf {

/// A diagnostic was asked for outside its hypotheses. The message names the
/// failed precondition.
class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CrossingRecord {
  int cut = 0;          ///< 0-based cut index
  int sign = 0;         ///< +1 when the orbit crosses the cut left to right
  long double time = 0;
  std::string exact_time;  ///< set for exact traces
  GroupValue running;   ///< S just after this crossing
};

struct ErgodicSumTrace {
  std::string start;      ///< "square:x,y"
  std::string direction;  ///< "dx,dy"
  bool exact = false;
  TraceStatus status = TraceStatus::Complete;
  long double elapsed = 0;
  std::string exact_elapsed;
  GroupValue sum;
  std::vector<CrossingRecord> crossings;
};

/// Exact trace of the flow (dx, dy) from `start` over times (0, T).
ErgodicSumTrace ergodic_sum(const StaircaseSpec& spec, const SurfacePoint& start, const Rational& dx,
                            const Rational& dy, const Rational& T);

/// Trace at the current Real precision. Crossing decisions closer than
/// 10^-(digits-10) throw AmbiguousCrossing.
ErgodicSumTrace ergodic_sum(const StaircaseSpec& spec, int square, const Real& x, const Real& y, const Real& dx,
                            const Real& dy, const Real& T, unsigned digits);

/// S over one period on the open transverse interval (lo, hi).
struct ProfileInterval {
  Rational lo, hi;
  GroupValue sum;
  std::vector<long long> crossings;  ///< unsigned crossing count per cut
};

/// Transverse offset t in (0,1): the periodic orbit of cylinder c at offset t
/// starts at (t/rise, 0) in square `base` (steep slopes) or at (0, t/run)
/// (shallow slopes), and has period `strips` in direction-vector time.
struct CylinderProfile {
  std::vector<int> cycle;
  int base = 1;
  long long strips = 0;
  std::vector<ProfileInterval> intervals;
  RationalCombination integral;
  long long max_norm = 0;

  const ProfileInterval& at(const Rational& t) const;
};

/// Transverse data of one cut: its shadow [lo, hi] in offset units, the number
/// P of complete unit intervals inside it and the two partial pieces.
struct CutShadow {
  Rational det;        ///< det(u, c)
  int sign = 0;        ///< sign of det
  Rational lo, hi;
  long long complete = 0;  ///< P
  Rational head, tail;     ///< p', p''
};

struct CylinderSums {
  Slope slope;
  bool transposed = false;
  std::vector<CylinderProfile> cylinders;
  std::vector<CutShadow> cuts;
  RationalCombination integral;  ///< sum over cylinders of the profile integrals
  long long max_norm = 0;
  /// sum_j f_j sign_j (P_j + p'_j + p''_j)
  RationalCombination translated;
};

/// Exact piecewise-constant S over one period for every cylinder of direction s.
/// Throws ParallelCut when a cut is parallel to s.
CylinderSums cylinder_sums(const StaircaseSpec& spec, const Slope& s);

struct KoksmaReport {
  Slope slope;
  long long bound = 0;         ///< 4 sum ||f_j||
  long long max_observed = 0;  ///< max of ||S|| over the whole profile
  bool pass = false;
  bool per_cut_ok = false;     ///< |P_j - |det(u, c_j)|| <= 2
  bool counts_ok = false;      ///< crossing counts within P_j .. P_j + 2
  bool translated_ok = false;  ///< translated identity sums to 0
  CylinderSums sums;
};

/// Throws PreconditionFailed when s is not single-cylinder or the integral
/// along s is nonzero.
KoksmaReport koksma_verify(const StaircaseSpec& spec, const Slope& s);

struct AvoidanceStep {
  int index = 0;
  Slope direction;
  int cylinder = -1;   ///< index into the decomposition, -1 when not resolved
  long long strips = 0;
  double offset = 0;   ///< transverse offset t of the point
  double drift = 0;    ///< signed transverse drift over one period
  double clearance = 0;   ///< epsilon in offset units
  double normalized = 0;  ///< epsilon times period length, in units of the direction width
  bool inside = false;
  std::string reason;
};

struct AvoidanceReport {
  SurfacePoint point;
  std::vector<AvoidanceStep> steps;
  double epsilon = 0;  ///< min of `normalized` over the trailing half of the depth
  bool passes = false;
  std::string failure;
};

struct AvoidanceOptions {
  double threshold = 1e-3;
  ApproximationOptions approximation;
};

/// One report per point, in input order.
std::vector<AvoidanceReport> self_avoiding_check(const Origami& o, const std::vector<SurfacePoint>& points,
                                                 const Real& theta, int depth, const AvoidanceOptions& options = {});

struct EssentialStep {
  int index = 0;
  Slope direction;
  long long sup = 0;  ///< sup of ||S|| over the orbit neighbourhood
  bool bounded = false;
};

struct EssentialReport {
  long long bound = 0;
  std::vector<EssentialStep> steps;
  int bounded_count = 0;
  bool essential = false;
  AvoidanceReport avoidance;
};

/// Throws PreconditionFailed unless `point` passes self_avoiding_check.
EssentialReport essential_point_diagnostic(const StaircaseSpec& spec, const SurfacePoint& point, const Real& theta,
                                           int depth, long long bound, const AvoidanceOptions& options = {});

}  // namespace stsurf
