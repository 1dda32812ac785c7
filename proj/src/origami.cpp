#include "stsurf/origami.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace stsurf {

std::string Stratum::name() const {
  if (cone_angles.empty()) return "H(0)";
  std::ostringstream out;
  out << "H(";
  for (std::size_t i = 0; i < cone_angles.size(); ++i) {
    if (i) out << ',';
    out << cone_angles[i] - 1;
  }
  out << ')';
  return out.str();
}

Origami::Origami(Permutation h, Permutation v)
    : sigma_h_(std::move(h)),
      sigma_v_(std::move(v)),
      sigma_h_inv_(sigma_h_.inverse()),
      sigma_v_inv_(sigma_v_.inverse()),
      commutator_(stsurf::commutator(sigma_v_, sigma_h_)) {
  const std::array<Permutation, 2> gens{sigma_h_, sigma_v_};
  components_ = orbits(gens);

  vertex_of_square_.assign(static_cast<std::size_t>(squares()), -1);
  for (auto& cycle : commutator_.cycles(true)) {
    VertexOrbit vertex;
    vertex.representative = cycle.front();
    vertex.cone_angle_multiple = static_cast<int>(cycle.size());
    for (int s : cycle) vertex_of_square_[static_cast<std::size_t>(s - 1)] = static_cast<int>(vertices_.size());
    vertex.cycle = std::move(cycle);
    vertices_.push_back(std::move(vertex));
  }
}

Origami Origami::build(int k, Permutation sigma_h, Permutation sigma_v) {
  if (k < 1) throw std::invalid_argument("an origami needs at least one square");
  if (sigma_h.degree() != k || sigma_v.degree() != k) {
    throw DegreeMismatch("origami on " + std::to_string(k) + " squares needs permutations of degree " +
                         std::to_string(k) + " (got " + std::to_string(sigma_h.degree()) + " and " +
                         std::to_string(sigma_v.degree()) + ")");
  }
  return Origami(std::move(sigma_h), std::move(sigma_v));
}

int Origami::vertex_at(int square, Corner corner) const {
  int anchor = square;
  switch (corner) {
    case Corner::UpperRight: break;
    case Corner::UpperLeft: anchor = sigma_h_inv_(square); break;
    case Corner::LowerRight: anchor = sigma_v_inv_(square); break;
    case Corner::LowerLeft: anchor = sigma_h_inv_(sigma_v_inv_(square)); break;
  }
  return vertex_of_square_[static_cast<std::size_t>(anchor - 1)];
}

Origami Origami::transpose() const { return Origami(sigma_v_, sigma_h_); }

Origami Origami::relabel(const Permutation& g) const {
  const Permutation g_inv = g.inverse();
  return Origami(g * sigma_h_ * g_inv, g * sigma_v_ * g_inv);
}

Origami Origami::component(std::size_t index) const {
  const auto& members = components_.at(index);
  std::vector<int> local(static_cast<std::size_t>(squares()) + 1, 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i) + 1;
  std::vector<int> h, v;
  for (int s : members) {
    h.push_back(local[static_cast<std::size_t>(sigma_h_(s))]);
    v.push_back(local[static_cast<std::size_t>(sigma_v_(s))]);
  }
  return Origami(Permutation::from_images(h), Permutation::from_images(v));
}

namespace {

Stratum connected_stratum(const Origami& o) {
  Stratum s;
  s.squares = o.squares();
  s.vertex_count = static_cast<int>(o.vertices().size());
  // Euler characteristic: k faces, 2k edges, V vertices.
  s.genus = (s.squares - s.vertex_count) / 2 + 1;
  for (std::size_t id = 0; id < o.vertices().size(); ++id) {
    const auto& vertex = o.vertices()[id];
    if (vertex.regular()) {
      s.regular_vertices.push_back(static_cast<int>(id));
    } else {
      s.cone_angles.push_back(vertex.cone_angle_multiple);
    }
  }
  std::sort(s.cone_angles.begin(), s.cone_angles.end(), std::greater<>());
  return s;
}

}  // namespace

StratumReport stratum_report(const Origami& o) {
  StratumReport report;
  report.connected = o.connected();
  if (report.connected) {
    report.components.push_back(connected_stratum(o));
  } else {
    for (std::size_t c = 0; c < o.components().size(); ++c) {
      report.components.push_back(connected_stratum(o.component(c)));
    }
  }
  return report;
}

Stratum stratum(const Origami& o) {
  if (!o.connected()) {
    auto report = stratum_report(o);
    std::ostringstream msg;
    msg << "surface has " << report.components.size() << " connected components:";
    for (const auto& s : report.components) msg << ' ' << s.name() << "[genus " << s.genus << ']';
    throw DisconnectedSurface(msg.str());
  }
  return connected_stratum(o);
}

const std::vector<VertexOrbit>& integer_points(const Origami& o) { return o.vertices(); }

namespace fixtures {

Origami unit_torus() { return Origami::build(1, Permutation::identity(1), Permutation::identity(1)); }

Origami two_square_torus() {
  return Origami::build(2, Permutation::parse("(1 2)", 2), Permutation::identity(2));
}

Origami wollmilchsau() {
  return Origami::build(8, Permutation::parse("(1 2 3 4)(5 6 7 8)", 8),
                        Permutation::parse("(1 8 3 6)(2 7 4 5)", 8));
}

Origami six_square_family(int n) {
  if (n < 1) throw std::invalid_argument("six-square family needs n >= 1");
  const int row = 2 * n + 1;
  const int k = 2 * row;
  std::vector<int> bottom, top;
  for (int i = 1; i <= row; ++i) bottom.push_back(i);
  for (int i = row + 1; i <= k; ++i) top.push_back(i);
  std::vector<std::vector<int>> vertical;
  // Square 2n+2 sits above square 2, ..., 4n+1 above 2n+1; 1 and 4n+2 are alone in their columns.
  for (int j = 2; j <= row; ++j) vertical.push_back({j, j + 2 * n});
  return Origami::build(k, Permutation::from_cycles(k, {bottom, top}), Permutation::from_cycles(k, vertical));
}

Origami five_square_h2_left() {
  return Origami::build(5, Permutation::parse("(1 2)(3 4 5)", 5), Permutation::parse("(1 3)(2 4)", 5));
}

Origami five_square_h2_right() {
  return Origami::build(5, Permutation::parse("(1 2)(3 4 5)", 5), Permutation::parse("(1 5)(2 3)", 5));
}

}  // namespace fixtures

}  // namespace stsurf
