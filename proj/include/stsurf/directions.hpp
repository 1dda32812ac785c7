#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/origami.hpp"
#include "stsurf/permutation.hpp"

namespace stsurf {

class ShallowSlope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes to sigma-hat disagreed on cycle type.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rational direction with direction vector (run, rise), run, rise >= 0 and
/// gcd(run, rise) = 1. Printed as "rise/run".
struct Slope {
  long long run = 0;
  long long rise = 1;

  static Slope make(long long run, long long rise);
  /// Parses "rise/run", e.g. "2/1" is the direction (1, 2).
  static Slope parse(const std::string& text);

  bool steep() const { return rise >= run; }
  long long norm2() const { return run * run + rise * rise; }
  Slope transposed() const { return Slope{rise, run}; }
  std::string to_string() const { return std::to_string(rise) + "/" + std::to_string(run); }

  friend bool operator==(const Slope&, const Slope&) = default;
};

/// Binary word of length q with p ones produced by the Farey recursion
/// w(p''/q'') = w(p/q) w(p'/q') from w(0/1) = "0", w(1/1) = "1".
struct SturmianWord {
  std::string letters;
  long long ones = 0;
  long long length = 0;
};

SturmianWord sturmian_lyndon(long long ones, long long length);

/// True iff the word is strictly smaller than each of its nontrivial rotations.
bool is_lyndon(const std::string& word);

/// Proper retiling of the surface by k*q parallelograms in the flow direction.
/// Tile (i, j), i in 1..k, j in 1..q, has index (i-1)q + j and is the base
/// interval [(j-1)/q, j/q) of square i flowed one unit upward.
struct Retiling {
  Permutation sigma_h;
  Permutation sigma_v;
  long long rise = 1;

  long long tile_index(int square, long long j) const { return (square - 1) * rise + j; }
};

/// Requires a steep slope.
Retiling retile(const Origami& o, const Slope& s);

/// sigma-hat from the retiling: sigma_hat(i) = (sigma_v')^q(tile(i, 1)). Steep slopes only.
Permutation sigma_hat_retile(const Origami& o, const Slope& s);

/// sigma-hat by composing phi(0) = sigma_v, phi(1) = sigma_v o sigma_h along the
/// word of the slope, first letter acting first. Steep slopes only.
/// Runs logarithmic in the partial quotients of run/rise.
Permutation sigma_hat_word(const Origami& o, const Slope& s);

/// Cross-checked sigma-hat (steep slopes). The retiling route is returned when
/// k*q is small enough to build it, otherwise the word route.
Permutation sigma_hat(const Origami& o, const Slope& s);

/// The origami and slope seen in the steep frame (transposed when shallow).
struct SteepFrame {
  Origami origami;
  Slope slope;
  bool transposed = false;
};
SteepFrame steep_frame(const Origami& o, const Slope& s);

/// Throws DisconnectedSurface.
bool is_single_cylinder(const Origami& o, const Slope& s);

struct NoSingleCylinderCertificate {
  enum class Kind { ParityObstruction, ExhaustedSearch, None };
  Kind kind = Kind::None;
  long long bound = 0;          ///< search bound for ExhaustedSearch
  std::optional<Slope> witness; ///< a single-cylinder slope when kind == None

  std::string describe() const;
};

/// ParityObstruction when k is even and both generators are even; otherwise the
/// outcome of a bounded search.
NoSingleCylinderCertificate no_single_cylinder_certificate(const Origami& o, long long q_max = 50);

/// Reduced slopes with max(rise, run) <= q_max: the Stern-Brocot tree breadth-first
/// from 1/1 (left to right within a level), then 0/1 and 1/0.
std::vector<Slope> enumerate_slopes(long long q_max);

struct SingleCylinderSearch {
  std::optional<Slope> slope;
  long long examined = 0;
  bool parity_obstruction = false;
};
SingleCylinderSearch find_single_cylinder_direction(const Origami& o, long long q_max);

/// One cylinder per sigma-hat cycle. Lengths are in unit-square units: a
/// cylinder through `strips` parallelograms has height strips*sqrt(norm2),
/// width 1/sqrt(norm2) and area strips.
struct Cylinder {
  std::vector<int> cycle;    ///< sigma-hat cycle (square labels)
  long long strips = 0;      ///< cycle length
  std::vector<int> squares;  ///< squares the cylinder passes through (sorted)

  long long area() const { return strips; }
};

struct CylinderDecomposition {
  Slope slope;
  bool transposed = false;
  std::vector<Cylinder> cylinders;

  long long norm2() const { return slope.norm2(); }
  long long total_area() const;
  double height(std::size_t i) const;
  double width() const;
  bool single_cylinder() const { return cylinders.size() == 1; }
};

/// Throws DisconnectedSurface.
CylinderDecomposition cylinder_decomposition(const Origami& o, const Slope& s);

}  // namespace stsurf
