#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/directions.hpp"
#include "stsurf/numeric.hpp"
#include "stsurf/origami.hpp"

namespace stsurf {

class RationalDirection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Direction given as a slope theta = rise/run > 0. Accepted forms:
///   "golden"          theta = (1+sqrt 5)/2, so theta' = (sqrt 5 - 1)/2
///   "sqrt(N)"         theta = sqrt N
///   "cf:a1,a2,..."    theta' = [0; a1, a2, ...] and theta = 1/theta'
///   a decimal or "a/b"
/// Evaluated at the current Real precision.
Real parse_direction(const std::string& text);

struct ApproximationOptions {
  unsigned digits = 100;          ///< working precision in decimal digits
  long long fairly_good_cap = 0;  ///< upper end of the fairly-good window; 0 means 4k+2
  double tolerance = 1e-9;        ///< relative tolerance of the bound check
};

/// One convergent p/q of theta' and the periodic direction it defines.
struct ConvergentReport {
  int index = 0;               ///< n >= 1
  long long p = 0, q = 0;
  long long next_quotient = 0; ///< a_{n+1}
  Slope direction;             ///< in the frame of the input surface
  std::size_t cylinders = 0;
  long long max_strips = 0;
  double measured = 0;         ///< E_n = max_j h_j tan|dpsi| / alpha_j
  /// Signed transverse drift of the theta-orbit over one period of a one-strip
  /// cylinder, in units of the cylinder width (steep frame).
  double drift_per_strip = 0;
  double bound_lo = 0;         ///< k/(a_{n+1}+1)
  double bound_hi = 0;         ///< k/a_{n+1}
  bool within_bound = false;
  /// k q |q theta' - p|, which lies in (k/(a_{n+1}+2), k/a_{n+1}).
  double scaled_rotation_error = 0;
  bool within_sharp_bound = false;
};

struct ApproximationReport {
  std::string theta;
  bool transposed = false;  ///< theta < 1 handled on the transposed surface
  int squares = 0;
  std::vector<long long> partial_quotients;  ///< a_1 .. a_{depth+1}
  std::vector<ConvergentReport> convergents;
  bool good_candidate = false;
  std::vector<int> good_witness;         ///< indices n of increasing record quotients
  bool fairly_good_candidate = false;
  std::vector<int> fairly_good_witness;  ///< indices n with a_{n+1} in [2k+1, cap]

  bool all_within_bound() const;
};

/// Convergents of theta' = 1/theta mod 1 (steep frame) to the given depth.
/// Throws RationalDirection when the expansion terminates and
/// InsufficientPrecision when the digits cannot resolve the requested depth.
ApproximationReport approximation_report(const Origami& o, const Real& theta, int depth,
                                         const ApproximationOptions& options = {});

}  // namespace stsurf
