#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "stsurf/numeric.hpp"
#include "stsurf/staircase.hpp"

namespace stsurf {

/// A floating-point decision (corner, cut endpoint, singular point) fell within tolerance.
class AmbiguousCrossing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The flow direction is parallel to a cut.
class ParallelCut : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TraceStatus { Complete, HitSingularity, HitCutEndpoint };
std::string to_string(TraceStatus s);

template <class Num>
struct TracePoint {
  int square = 1;
  Num x = 0, y = 0;
};

template <class Num>
struct TraceOutcome {
  TraceStatus status = TraceStatus::Complete;
  Num elapsed = 0;
  TracePoint<Num> end;
};

/// Straight-line flow on a staircase surface. Time is measured in multiples of
/// the direction vector (dx, dy). With Rational every decision is exact and an
/// orbit meeting a singular point or a cut endpoint stops there; with floating
/// types any decision within `tolerance` throws AmbiguousCrossing.
template <class Num>
class Tracer {
 public:
  /// cut index, crossing sign (sign of det(direction, cut)), time
  using Callback = std::function<void(int, int, const Num&)>;

  Tracer(const StaircaseSpec& spec, Num dx, Num dy, Num tolerance = Num(0));

  /// Crossings at times in (0, T), or [0, T) when include_start is set.
  TraceOutcome<Num> run(TracePoint<Num> start, const Num& T, bool include_start, const Callback& on_cross) const;

  const StaircaseSpec& spec() const { return *spec_; }

 private:
  struct Piece {
    int cut;
    Num x0, y0, x1, y1;
    bool starts_cut, ends_cut;
  };
  struct PointHits {
    bool singular = false;
    bool endpoint = false;
    std::vector<int> cuts;
  };

  bool near(const Num& a, const Num& b) const;
  PointHits cuts_through(int square, const Num& x, const Num& y) const;
  void collect(int square, const Num& x, const Num& y, PointHits& hits) const;

  const StaircaseSpec* spec_;
  Num dx_, dy_, tol_;
  std::vector<int> sign_;
  std::vector<std::vector<Piece>> interior_, right_, top_;
};

extern template class Tracer<Rational>;
extern template class Tracer<long double>;
extern template class Tracer<Real>;

}  // namespace stsurf
