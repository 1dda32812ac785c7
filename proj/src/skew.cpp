#include "stsurf/skew.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace stsurf {

namespace {

constexpr long long kWalkLimit = 2'000'000;

long double to_ld(const Rational& r) { return r.convert_to<long double>(); }

std::string point_text(int square, const std::string& x, const std::string& y) {
  return std::to_string(square) + ":" + x + "," + y;
}

Rational ceil_rational(const Rational& r) { return -floor_rational(-r); }

long long to_ll(const Rational& r) { return boost::multiprecision::numerator(r).convert_to<long long>(); }

// Position of a point relative to the cylinders of the steep slope (run P, rise Q)
// on frame origami F: its transverse offset t and the base square of its strip.
struct Located {
  Rational t;
  int base = 1;
  bool resolved = false;
};

Located locate(const Origami& f, long long P, long long Q, const SurfacePoint& pt, bool walk) {
  Located out;
  int sq = pt.square;
  Rational x0 = pt.x - Rational(P) / Q * pt.y;
  if (x0 < 0) {
    x0 += 1;
    sq = f.sigma_h_inv()(sq);
  }
  const Rational scaled = x0 * Q;
  const Rational whole = floor_rational(scaled);
  out.t = scaled - whole;
  if (!walk) return out;
  long long j = to_ll(whole) + 1;
  int i = sq;
  // undo the upward tile map until the strip reaches the bottom row
  for (long long guard = 0; j != 1; ++guard) {
    if (guard > Q) throw InternalConsistencyError("tile walk did not reach a base interval");
    const int below = f.sigma_v_inv()(i);
    if (j > P) {
      i = below;
      j -= P;
    } else {
      i = f.sigma_h_inv()(below);
      j = j - P + Q;
    }
  }
  out.base = i;
  out.resolved = true;
  return out;
}

}  // namespace

ErgodicSumTrace ergodic_sum(const StaircaseSpec& spec, const SurfacePoint& start, const Rational& dx,
                            const Rational& dy, const Rational& T) {
  if (T < 0) throw std::invalid_argument("trace time must be non-negative");
  Tracer<Rational> tracer(spec, dx, dy);
  ErgodicSumTrace out;
  out.exact = true;
  out.start = point_text(start.square, to_string(start.x), to_string(start.y));
  out.direction = to_string(dx) + "," + to_string(dy);
  out.sum = GroupValue::zero(spec.group());
  const auto outcome = tracer.run({start.square, start.x, start.y}, T, false, [&](int cut, int sign, const Rational& t) {
    out.sum += spec.cuts()[static_cast<std::size_t>(cut)].value * sign;
    out.crossings.push_back({cut, sign, to_ld(t), to_string(t), out.sum});
  });
  out.status = outcome.status;
  out.elapsed = to_ld(outcome.elapsed);
  out.exact_elapsed = to_string(outcome.elapsed);
  return out;
}

ErgodicSumTrace ergodic_sum(const StaircaseSpec& spec, int square, const Real& x, const Real& y, const Real& dx,
                            const Real& dy, const Real& T, unsigned digits) {
  if (digits < 20) throw std::invalid_argument("precision below 20 digits is not supported");
  PrecisionScope scope(digits);
  const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(digits - 10));
  Tracer<Real> tracer(spec, dx, dy, tol);
  ErgodicSumTrace out;
  out.start = point_text(square, x.str(20), y.str(20));
  out.direction = dx.str(20) + "," + dy.str(20);
  out.sum = GroupValue::zero(spec.group());
  const auto outcome = tracer.run({square, x, y}, T, false, [&](int cut, int sign, const Real& t) {
    out.sum += spec.cuts()[static_cast<std::size_t>(cut)].value * sign;
    out.crossings.push_back({cut, sign, t.convert_to<long double>(), "", out.sum});
  });
  out.status = outcome.status;
  out.elapsed = outcome.elapsed.convert_to<long double>();
  return out;
}

const ProfileInterval& CylinderProfile::at(const Rational& t) const {
  for (const auto& iv : intervals) {
    if (iv.lo < t && t < iv.hi) return iv;
  }
  throw std::out_of_range("offset " + to_string(t) + " is a breakpoint or outside (0,1)");
}

CylinderSums cylinder_sums(const StaircaseSpec& spec, const Slope& s) {
  const Origami& o = spec.origami();
  if (!o.connected()) throw DisconnectedSurface("cylinder sums need a connected surface");
  const SteepFrame frame = steep_frame(o, s);
  const Permutation hat = sigma_hat(frame.origami, frame.slope);
  const long long p = s.run, q = s.rise;
  Tracer<Rational> tracer(spec, Rational(p), Rational(q));

  CylinderSums out;
  out.slope = s;
  out.transposed = frame.transposed;
  out.integral = RationalCombination::zero(spec.group());
  out.translated = RationalCombination::zero(spec.group());

  // t = q x - p y on steep slopes, p y - q x on shallow ones
  auto offset = [&](const Rational& x, const Rational& y) {
    return frame.transposed ? Rational(p * y - q * x) : Rational(q * x - p * y);
  };
  std::set<Rational> breaks{Rational(0), Rational(1)};
  for (const auto& piece : spec.pieces()) {
    breaks.insert(frac(offset(piece.x0, piece.y0)));
    breaks.insert(frac(offset(piece.x1, piece.y1)));
  }
  const std::vector<Rational> cutsat(breaks.begin(), breaks.end());

  for (auto& cycle : hat.cycles(true)) {
    CylinderProfile cyl;
    cyl.base = cycle.front();
    cyl.strips = static_cast<long long>(cycle.size());
    cyl.cycle = std::move(cycle);
    cyl.integral = RationalCombination::zero(spec.group());
    for (std::size_t i = 0; i + 1 < cutsat.size(); ++i) {
      ProfileInterval iv;
      iv.lo = cutsat[i];
      iv.hi = cutsat[i + 1];
      iv.sum = GroupValue::zero(spec.group());
      iv.crossings.assign(spec.cuts().size(), 0);
      const Rational mid = (iv.lo + iv.hi) / 2;
      SurfacePoint start{cyl.base, frame.transposed ? Rational(0) : Rational(mid / q),
                         frame.transposed ? Rational(mid / p) : Rational(0)};
      const auto outcome =
          tracer.run({start.square, start.x, start.y}, Rational(cyl.strips), true, [&](int cut, int sign, const Rational&) {
            iv.sum += spec.cuts()[static_cast<std::size_t>(cut)].value * sign;
            ++iv.crossings[static_cast<std::size_t>(cut)];
          });
      if (outcome.status != TraceStatus::Complete) {
        throw InternalConsistencyError("periodic orbit at offset " + to_string(mid) + " stopped: " +
                                       to_string(outcome.status));
      }
      const SurfacePoint end = normalize_point(o, outcome.end.square, outcome.end.x, outcome.end.y);
      if (!(end == start)) throw InternalConsistencyError("periodic orbit did not close after one period");
      cyl.integral.add(iv.hi - iv.lo, iv.sum);
      out.integral.add(iv.hi - iv.lo, iv.sum);
      cyl.max_norm = std::max(cyl.max_norm, iv.sum.norm());
      cyl.intervals.push_back(std::move(iv));
    }
    out.max_norm = std::max(out.max_norm, cyl.max_norm);
    out.cylinders.push_back(std::move(cyl));
  }

  for (const auto& c : spec.cuts()) {
    CutShadow sh;
    sh.det = Rational(p) * c.cy() - Rational(q) * c.cx();
    sh.sign = sh.det > 0 ? 1 : (sh.det < 0 ? -1 : 0);
    const Rational t0 = offset(c.start.x, c.start.y);
    const Rational t1 = t0 + offset(c.cx(), c.cy());
    sh.lo = std::min(t0, t1);
    sh.hi = std::max(t0, t1);
    const Rational a = ceil_rational(sh.lo), b = floor_rational(sh.hi);
    if (a <= b) {
      sh.complete = to_ll(b - a);
      sh.head = a - sh.lo;
      sh.tail = sh.hi - b;
    } else {
      sh.complete = 0;
      sh.head = sh.hi - sh.lo;
      sh.tail = 0;
    }
    out.translated.add(Rational(sh.sign) * (Rational(sh.complete) + sh.head + sh.tail), c.value);
    out.cuts.push_back(std::move(sh));
  }

  if (!spec.group().is_cyclic()) {
    const auto residual = zero_integral_check(spec, s).residual;
    if (residual.components != out.integral.components) {
      throw InternalConsistencyError("profile integral " + out.integral.to_string() + " differs from residual " +
                                     residual.to_string());
    }
  }
  return out;
}

KoksmaReport koksma_verify(const StaircaseSpec& spec, const Slope& s) {
  const Origami& o = spec.origami();
  if (!is_single_cylinder(o, s)) {
    throw PreconditionFailed("refused: slope " + s.to_string() + " is not a single-cylinder direction");
  }
  const auto zero = zero_integral_check(spec, s);
  if (!zero.zero) {
    throw PreconditionFailed("refused: integral along " + s.to_string() + " is " + zero.residual.to_string() +
                             ", not zero");
  }
  KoksmaReport r;
  r.slope = s;
  r.bound = 4 * spec.total_value_norm();
  try {
    r.sums = cylinder_sums(spec, s);
  } catch (const ParallelCut& e) {
    throw PreconditionFailed(std::string("refused: cuts must be in general position; ") + e.what());
  }
  r.max_observed = r.sums.max_norm;

  r.per_cut_ok = true;
  for (const auto& sh : r.sums.cuts) {
    const Rational gap = Rational(sh.complete) - (sh.det < 0 ? Rational(-sh.det) : sh.det);
    if (gap > 2 || gap < -2) r.per_cut_ok = false;
  }
  r.counts_ok = true;
  const auto& cyl = r.sums.cylinders.front();
  for (const auto& iv : cyl.intervals) {
    for (std::size_t j = 0; j < r.sums.cuts.size(); ++j) {
      const long long extra = iv.crossings[j] - r.sums.cuts[j].complete;
      if (extra < 0 || extra > 2) r.counts_ok = false;
    }
  }
  r.translated_ok = r.sums.translated.is_zero();
  r.pass = r.max_observed <= r.bound && r.per_cut_ok && r.counts_ok && r.translated_ok;
  return r;
}

std::vector<AvoidanceReport> self_avoiding_check(const Origami& o, const std::vector<SurfacePoint>& points,
                                                 const Real& theta, int depth, const AvoidanceOptions& options) {
  if (!o.connected()) throw DisconnectedSurface("self-avoiding check needs a connected surface");
  std::vector<AvoidanceReport> reports(points.size());
  std::vector<bool> live(points.size(), true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    reports[i].point = normalize_point(o, points[i].square, points[i].x, points[i].y);
    if (classify_point(o, reports[i].point).kind == EndpointKind::Singular) {
      reports[i].failure = "point is a singularity";
      live[i] = false;
    }
  }
  const ApproximationReport approx = approximation_report(o, theta, depth, options.approximation);

  for (const auto& c : approx.convergents) {
    const SteepFrame frame = steep_frame(o, c.direction);
    const CylinderDecomposition dec = cylinder_decomposition(o, c.direction);
    const long long P = frame.slope.run, Q = frame.slope.rise;
    const bool walk = dec.cylinders.size() > 1 && Q <= kWalkLimit / o.squares();

    struct Where {
      double t = 0;
      int cylinder = -1;
      bool boundary = false;
    };
    std::vector<Where> where(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      SurfacePoint fp = reports[i].point;
      if (frame.transposed) std::swap(fp.x, fp.y);
      const Located loc = locate(frame.origami, P, Q, fp, walk);
      where[i].t = static_cast<double>(to_ld(loc.t));
      where[i].boundary = loc.t == 0;
      if (dec.cylinders.size() == 1) {
        where[i].cylinder = 0;
      } else if (loc.resolved) {
        for (std::size_t k = 0; k < dec.cylinders.size(); ++k) {
          const auto& cyc = dec.cylinders[k].cycle;
          if (std::find(cyc.begin(), cyc.end(), loc.base) != cyc.end()) where[i].cylinder = static_cast<int>(k);
        }
      }
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!live[i]) continue;
      AvoidanceStep st;
      st.index = c.index;
      st.direction = c.direction;
      st.cylinder = where[i].cylinder;
      st.strips = st.cylinder >= 0 ? dec.cylinders[static_cast<std::size_t>(st.cylinder)].strips : c.max_strips;
      st.offset = where[i].t;
      st.drift = static_cast<double>(st.strips) * c.drift_per_strip;
      if (where[i].boundary) {
        st.reason = "point lies on a cylinder boundary";
      } else {
        const double lo = std::min(st.offset, st.offset + st.drift), hi = std::max(st.offset, st.offset + st.drift);
        double eps = std::min(lo, 1.0 - hi);
        for (std::size_t j = 0; j < points.size() && eps > 0; ++j) {
          if (j == i || reports[j].point == reports[i].point) continue;
          if (st.cylinder >= 0 && where[j].cylinder >= 0 && where[j].cylinder != st.cylinder) continue;
          const double tj = where[j].t;
          eps = std::min(eps, tj < lo ? lo - tj : (tj > hi ? tj - hi : 0.0));
        }
        st.clearance = std::max(eps, 0.0);
        st.normalized = st.clearance * static_cast<double>(st.strips);
        st.inside = eps > 0;
        if (!st.inside) st.reason = "orbit neighbourhood meets the boundary or another point";
      }
      reports[i].steps.push_back(std::move(st));
    }
  }

  // liminf over the computed depth: the minimum over its trailing half
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& r = reports[i];
    if (!live[i]) continue;
    if (r.steps.empty()) {
      r.failure = "no convergents computed";
      continue;
    }
    const std::size_t from = r.steps.size() / 2;
    double eps = r.steps[from].normalized;
    for (std::size_t n = from; n < r.steps.size(); ++n) eps = std::min(eps, r.steps[n].normalized);
    r.epsilon = eps;
    r.passes = eps >= options.threshold;
    if (!r.passes) {
      for (std::size_t n = from; n < r.steps.size(); ++n) {
        if (r.steps[n].normalized < options.threshold) {
          r.failure = "epsilon below threshold at convergent " + std::to_string(r.steps[n].index);
          if (!r.steps[n].reason.empty()) r.failure += ": " + r.steps[n].reason;
          break;
        }
      }
    }
  }
  return reports;
}

EssentialReport essential_point_diagnostic(const StaircaseSpec& spec, const SurfacePoint& point, const Real& theta,
                                           int depth, long long bound, const AvoidanceOptions& options) {
  EssentialReport out;
  out.bound = bound;
  out.avoidance = self_avoiding_check(spec.origami(), {point}, theta, depth, options).front();
  if (!out.avoidance.passes) {
    throw PreconditionFailed("refused: point is not self-avoiding to depth " + std::to_string(depth) + " (" +
                             out.avoidance.failure + ")");
  }
  for (const auto& st : out.avoidance.steps) {
    EssentialStep e;
    e.index = st.index;
    e.direction = st.direction;
    if (st.inside) {
      const CylinderSums sums = cylinder_sums(spec, st.direction);
      const double lo = std::min(st.offset, st.offset + st.drift) - st.clearance;
      const double hi = std::max(st.offset, st.offset + st.drift) + st.clearance;
      for (std::size_t k = 0; k < sums.cylinders.size(); ++k) {
        if (st.cylinder >= 0 && static_cast<int>(k) != st.cylinder) continue;
        for (const auto& iv : sums.cylinders[k].intervals) {
          if (static_cast<double>(to_ld(iv.hi)) <= lo || static_cast<double>(to_ld(iv.lo)) >= hi) continue;
          e.sup = std::max(e.sup, iv.sum.norm());
        }
      }
      e.bounded = e.sup <= bound;
    }
    if (e.bounded) ++out.bounded_count;
    out.steps.push_back(e);
  }
  out.essential = 2 * out.bounded_count >= depth;
  return out;
}

}  // namespace stsurf
