#pragma once
// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <vector>

#include "stsurf/numeric.hpp"
#include "stsurf/origami.hpp"

namespace oracle {

// Follows the straight line of direction (run, rise), rise >= 1, from the
// point (1/(2 rise), 0) on the bottom of each square, edge crossing by edge
// crossing, until it has crossed `rise` top edges. Returns the square where
// it lands; the cycles of this map are the cylinders of the direction.
inline std::vector<int> first_return(const stsurf::Origami& o, long long run, long long rise) {
  std::vector<int> out(static_cast<std::size_t>(o.squares()) + 1, 0);
  const long double x0 = 0.5L / static_cast<long double>(rise);
  for (int start = 1; start <= o.squares(); ++start) {
    int sq = start;
    long double x = x0, y = 0;
    long long tops = 0;
    while (tops < rise) {
      const long double t_top = (1 - y) / static_cast<long double>(rise);
      const long double t_right = run > 0 ? (1 - x) / static_cast<long double>(run) : 1e30L;
      if (t_top <= t_right) {
        x += t_top * static_cast<long double>(run);
        y = 0;
        sq = o.sigma_v()(sq);
        ++tops;
        if (std::fabs(static_cast<double>(x - 1)) < 1e-12) throw std::logic_error("oracle hit a corner");
        if (x > 1) x -= 1;  // not expected, guards rounding
      } else {
        y += t_right * static_cast<long double>(rise);
        x = 0;
        sq = o.sigma_h()(sq);
      }
    }
    out[static_cast<std::size_t>(start)] = sq;
  }
  return out;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& map) {
  std::vector<int> lengths;
  std::vector<bool> seen(map.size(), false);
  for (std::size_t i = 1; i < map.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

// Lower Christoffel word of slope ones/length.
inline std::string christoffel(long long ones, long long length) {
  std::string w;
  for (long long m = 0; m < length; ++m) {
    const long long a = ((m + 1) * ones) / length - (m * ones) / length;
    w += static_cast<char>('0' + a);
  }
  return w;
}

// Ergodic sums on the plane, for surfaces that are the torus R^2 / (width Z x Z)
// cut into unit squares along a row. Each cut is a segment from `at` with
// displacement `d`; every lattice translate is intersected with the orbit
// segment from `from` over times (0, T). Sets `degenerate` if the orbit
// touches a cut endpoint or runs along a cut.
struct PlaneCut {
  stsurf::Rational ax, ay, dx, dy;
  long long value;
};

inline long long plane_sum(const std::vector<PlaneCut>& cuts, long long width, const stsurf::Rational& x0,
                           const stsurf::Rational& y0, const stsurf::Rational& vx, const stsurf::Rational& vy,
                           const stsurf::Rational& T, bool& degenerate) {
  using stsurf::Rational;
  using stsurf::floor_rational;
  long long total = 0;
  const Rational x1 = x0 + T * vx, y1 = y0 + T * vy;
  for (const auto& c : cuts) {
    const Rational det = vx * c.dy - vy * c.dx;
    const int sign = det > 0 ? 1 : -1;
    // translates whose bounding box can meet the orbit's
    const Rational lo_x = std::min(x0, x1) - std::max(c.ax, Rational(c.ax + c.dx)) - 1;
    const Rational hi_x = std::max(x0, x1) - std::min(c.ax, Rational(c.ax + c.dx)) + 1;
    const Rational lo_y = std::min(y0, y1) - std::max(c.ay, Rational(c.ay + c.dy)) - 1;
    const Rational hi_y = std::max(y0, y1) - std::min(c.ay, Rational(c.ay + c.dy)) + 1;
    const long long m0 = floor_rational(lo_x / width).convert_to<long long>();
    const long long m1 = floor_rational(hi_x / width).convert_to<long long>() + 1;
    const long long n0 = floor_rational(lo_y).convert_to<long long>();
    const long long n1 = floor_rational(hi_y).convert_to<long long>() + 1;
    for (long long m = m0; m <= m1; ++m) {
      for (long long n = n0; n <= n1; ++n) {
        const Rational px = c.ax + m * width - x0, py = c.ay + n - y0;
        if (det == 0) {
          if (px * vy - py * vx == 0) degenerate = true;
          continue;
        }
        // x0 + s v = a + u d
        const Rational s = (px * c.dy - py * c.dx) / det;
        const Rational u = (px * vy - py * vx) / det;
        if (s <= 0 || s >= T || u < 0 || u > 1) continue;
        if (u == 0 || u == 1) {
          degenerate = true;
          continue;
        }
        total += sign * c.value;
      }
    }
  }
  return total;
}

}  // namespace oracle
