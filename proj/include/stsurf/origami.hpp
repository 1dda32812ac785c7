#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/permutation.hpp"

namespace stsurf {

class DisconnectedSurface : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Corner { LowerLeft, LowerRight, UpperLeft, UpperRight };

/// An integer point of the surface, anchored at the upper-right corner of
/// `representative`. `cycle` is the commutator cycle through it.
struct VertexOrbit {
  int representative = 1;
  std::vector<int> cycle;
  int cone_angle_multiple = 1;  ///< cone angle is 2*pi times this

  bool regular() const { return cone_angle_multiple == 1; }
};

/// Stratum data of one connected surface.
struct Stratum {
  std::vector<int> cone_angles;      ///< multiples m >= 2 (angle 2*pi*m), descending
  int genus = 1;
  std::vector<int> regular_vertices; ///< vertex ids (indices into Origami::vertices())
  int vertex_count = 0;
  int squares = 0;

  /// Conventional name, e.g. "H(1,1)"; "H(0)" when there are no singularities.
  std::string name() const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// A square-tiled surface: the right edge of square i is glued to the left edge
/// of sigma_h(i), the top of i to the bottom of sigma_v(i).
class Origami {
 public:
  static Origami build(int k, Permutation sigma_h, Permutation sigma_v);

  int squares() const { return sigma_h_.degree(); }
  const Permutation& sigma_h() const { return sigma_h_; }
  const Permutation& sigma_v() const { return sigma_v_; }
  const Permutation& sigma_h_inv() const { return sigma_h_inv_; }
  const Permutation& sigma_v_inv() const { return sigma_v_inv_; }
  /// [sigma_v, sigma_h]; its cycles are the vertices.
  const Permutation& commutator() const { return commutator_; }

  bool connected() const { return components_.size() == 1; }
  const std::vector<std::vector<int>>& components() const { return components_; }

  const std::vector<VertexOrbit>& vertices() const { return vertices_; }
  /// Vertex id of the given corner of a square.
  int vertex_at(int square, Corner corner) const;
  bool singular_vertex(int vertex_id) const { return !vertices_[static_cast<std::size_t>(vertex_id)].regular(); }

  /// Mirror in the diagonal: swaps the roles of sigma_h and sigma_v.
  Origami transpose() const;
  /// Relabels square i as g(i) (conjugates both generators by g).
  Origami relabel(const Permutation& g) const;
  /// Restriction to one connected component, squares renumbered in increasing order.
  Origami component(std::size_t index) const;

  friend bool operator==(const Origami& a, const Origami& b) {
    return a.sigma_h_ == b.sigma_h_ && a.sigma_v_ == b.sigma_v_;
  }

 private:
  Origami(Permutation h, Permutation v);

  Permutation sigma_h_, sigma_v_, sigma_h_inv_, sigma_v_inv_, commutator_;
  std::vector<std::vector<int>> components_;
  std::vector<VertexOrbit> vertices_;
  std::vector<int> vertex_of_square_;  // upper-right corner
};

/// Throws DisconnectedSurface when the surface has more than one component.
Stratum stratum(const Origami& o);

/// Per-component strata; always succeeds.
struct StratumReport {
  bool connected = true;
  std::vector<Stratum> components;
};
StratumReport stratum_report(const Origami& o);

/// One VertexOrbit per commutator cycle.
const std::vector<VertexOrbit>& integer_points(const Origami& o);

/// Fixtures used throughout the tests, CLI and docs.
namespace fixtures {
Origami unit_torus();
Origami two_square_torus();            ///< h=(1 2), v=id
Origami wollmilchsau();                ///< h=(1234)(5678), v=(1836)(2745)
Origami six_square_family(int n);      ///< 4n+2 squares, two rows of 2n+1
Origami five_square_h2_left();         ///< h=(1 2)(3 4 5), v=(1 3)(2 4)
Origami five_square_h2_right();        ///< h=(1 2)(3 4 5), v=(1 5)(2 3)
}  // namespace fixtures

}  // namespace stsurf
