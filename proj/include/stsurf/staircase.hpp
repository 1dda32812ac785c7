#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/directions.hpp"
#include "stsurf/group.hpp"
#include "stsurf/numeric.hpp"
#include "stsurf/origami.hpp"

namespace stsurf {

/// A cut passes through a singular point other than at its endpoints, or is otherwise malformed.
class InvalidCut : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the surface: square plus local coordinates in [0,1)^2.
struct SurfacePoint {
  int square = 1;
  Rational x = 0, y = 0;

  bool integer() const { return x == 0 && y == 0; }
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

enum class EndpointKind { Singular, RegularInteger, Interior };
std::string to_string(EndpointKind kind);

enum class EdgeSide { Top, Bottom, Left, Right };

/// Straight segment from `start` with displacement length*(dx, dy), carrying a group value.
struct Cut {
  SurfacePoint start;
  Rational dx = 0, dy = 1;
  Rational length = 1;
  GroupValue value;

  Rational cx() const { return length * dx; }
  Rational cy() const { return length * dy; }

  /// The full edge of a square, oriented rightward (top/bottom) or upward (left/right).
  static Cut edge(const Origami& o, EdgeSide side, int square, GroupValue value);
};

/// Portion of a cut inside one closed square. Pieces lying on an edge are stored
/// once: as the right edge (x = 1) or top edge (y = 1) of the square to the left/below.
struct CutPiece {
  enum class Kind { Interior, RightEdge, TopEdge };
  int cut = 0;
  int square = 1;
  Kind kind = Kind::Interior;
  Rational x0, y0, x1, y1;  ///< in the cut's orientation
  bool starts_cut = false;  ///< (x0, y0) is the start point of the cut
  bool ends_cut = false;    ///< (x1, y1) is the end point of the cut
};

struct CutEndpoint {
  SurfacePoint point;  ///< normalized into [0,1)^2
  EndpointKind kind = EndpointKind::Interior;
  int vertex = -1;     ///< vertex id for integer points
};

/// Boundary of the group-valued chain at one point: sum of values of cuts
/// ending there minus those starting there.
struct Jump {
  CutEndpoint where;
  GroupValue value;
};

class StaircaseSpec {
 public:
  /// Validates and decomposes every cut. Throws InvalidCut.
  static StaircaseSpec build(Origami o, GroupDescriptor group, std::vector<Cut> cuts);

  const Origami& origami() const { return origami_; }
  const GroupDescriptor& group() const { return group_; }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const std::vector<CutPiece>& pieces() const { return pieces_; }
  const CutEndpoint& start_of(std::size_t cut) const { return endpoints_.at(2 * cut); }
  const CutEndpoint& end_of(std::size_t cut) const { return endpoints_.at(2 * cut + 1); }
  /// Nonzero jumps, in order of first appearance.
  const std::vector<Jump>& jumps() const { return jumps_; }

  /// Unit axis-parallel cuts with integer endpoints, meeting only at endpoints.
  bool natural() const { return natural_; }
  /// Any valid cut system; natural specs are also generalized.
  bool generalized() const { return true; }

  /// Sum of norms of the cut values.
  long long total_value_norm() const;

 private:
  StaircaseSpec(Origami o, GroupDescriptor g) : origami_(std::move(o)), group_(g) {}

  Origami origami_;
  GroupDescriptor group_;
  std::vector<Cut> cuts_;
  std::vector<CutPiece> pieces_;
  std::vector<CutEndpoint> endpoints_;
  std::vector<Jump> jumps_;
  bool natural_ = false;
};

/// Normalizes a point given in closed coordinates [0,1]^2 of a square.
SurfacePoint normalize_point(const Origami& o, int square, Rational x, Rational y);
CutEndpoint classify_point(const Origami& o, const SurfacePoint& p);

/// det(u, c) = u.x c.y - u.y c.x for u the direction vector of s.
Rational transverse_extent(const Slope& s, const Cut& c);

struct ZeroIntegralResult {
  RationalCombination residual;  ///< sum_j f_j det(u, c_j)
  bool zero = false;
};
ZeroIntegralResult zero_integral_check(const StaircaseSpec& spec, const Slope& s);

/// Surfaces and cut systems used in tests, docs and the CLI.
namespace fixtures {
/// Z staircase of the six-square family: +-1 vertical unit cuts on the
/// left edge of 2n+2 (-1), right edge of 2 (+1), left edge of 4n+1 (+1) and
/// right edge of 2n+1 (-1).
StaircaseSpec six_square_staircase(int n);
/// Unramified cover of the left five-square surface: right edge of 5 (+1), left edge of 1 (-1).
StaircaseSpec five_square_left_staircase();
/// Right five-square surface: top edge of 5 (+1), top edge of 1 (-1).
StaircaseSpec five_square_right_staircase();
/// Two-square torus with vertical loop cuts: right edge of 1 (+1), right edge of 2 (-1).
StaircaseSpec two_square_staircase();
/// Z^2 cover of the right five-square surface with every top edge valued e1 and
/// every right edge valued e2; its integral is nonzero in every direction.
StaircaseSpec five_square_drifting_spec();
}  // namespace fixtures

}  // namespace stsurf
