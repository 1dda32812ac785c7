#include "stsurf/staircase.hpp"

#include <algorithm>
#include <map>

namespace stsurf {

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Corner corner_for(int sx, int sy) {
  if (sx > 0) return sy > 0 ? Corner::UpperRight : Corner::LowerRight;
  return sy > 0 ? Corner::UpperLeft : Corner::LowerLeft;
}

// Key identifying a point of the surface: vertex id for integer points.
struct PointKey {
  int vertex = -1;
  int square = 0;
  Rational x, y;

  bool operator<(const PointKey& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    if (square != o.square) return square < o.square;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

PointKey key_of(const CutEndpoint& e) {
  if (e.vertex >= 0) return PointKey{e.vertex, 0, 0, 0};
  return PointKey{-1, e.point.square, e.point.x, e.point.y};
}

// Splits one cut into per-square pieces, walking through edge identifications.
std::vector<CutPiece> decompose(const Origami& o, const Cut& cut, int index) {
  const Rational cx = cut.cx(), cy = cut.cy();
  const int sx = sign_of(cx), sy = sign_of(cy);
  int sq = cut.start.square;
  Rational x = cut.start.x, y = cut.start.y;

  // Leaving through the left or bottom side from x = 0 or y = 0 starts in the neighbour.
  if (x == 0 && sx < 0 && y == 0 && sy < 0) {
    sq = o.sigma_v_inv()(o.sigma_h_inv()(sq));
    x = 1;
    y = 1;
  } else {
    if (x == 0 && sx < 0) {
      sq = o.sigma_h_inv()(sq);
      x = 1;
    }
    if (y == 0 && sy < 0) {
      sq = o.sigma_v_inv()(sq);
      y = 1;
    }
  }

  std::vector<CutPiece> pieces;
  Rational s = 0;
  for (int guard = 0;; ++guard) {
    if (guard > 1'000'000) throw InvalidCut("cut " + std::to_string(index + 1) + " is too long to decompose");
    std::optional<Rational> tx, ty;
    if (sx > 0) tx = (1 - x) / cx;
    if (sx < 0) tx = -x / cx;
    if (sy > 0) ty = (1 - y) / cy;
    if (sy < 0) ty = -y / cy;
    Rational t = 1 - s;
    if (tx && *tx < t) t = *tx;
    if (ty && *ty < t) t = *ty;

    CutPiece piece;
    piece.cut = index;
    piece.square = sq;
    piece.x0 = x;
    piece.y0 = y;
    piece.x1 = x + t * cx;
    piece.y1 = y + t * cy;
    piece.starts_cut = s == 0;
    piece.ends_cut = s + t == 1;
    if (sx == 0 && x == 0) {
      piece.kind = CutPiece::Kind::RightEdge;
      piece.square = o.sigma_h_inv()(sq);
      piece.x0 = piece.x1 = 1;
    } else if (sx == 0 && x == 1) {
      piece.kind = CutPiece::Kind::RightEdge;
    } else if (sy == 0 && y == 0) {
      piece.kind = CutPiece::Kind::TopEdge;
      piece.square = o.sigma_v_inv()(sq);
      piece.y0 = piece.y1 = 1;
    } else if (sy == 0 && y == 1) {
      piece.kind = CutPiece::Kind::TopEdge;
    }
    if (t > 0) pieces.push_back(piece);

    s += t;
    x += t * cx;
    y += t * cy;
    if (s == 1) break;

    const bool hit_x = tx && *tx == t;
    const bool hit_y = ty && *ty == t;
    // Walking along an edge reaches a corner when the other coordinate hits 0 or 1.
    const bool on_vertical_edge = sx == 0 && (x == 0 || x == 1);
    const bool on_horizontal_edge = sy == 0 && (y == 0 || y == 1);
    if ((hit_x && hit_y) || (hit_y && on_vertical_edge) || (hit_x && on_horizontal_edge)) {
      const int csx = hit_x ? sx : (x == 1 ? 1 : -1);
      const int csy = hit_y ? sy : (y == 1 ? 1 : -1);
      const int vertex = o.vertex_at(sq, corner_for(csx, csy));
      if (o.singular_vertex(vertex)) {
        throw InvalidCut("cut " + std::to_string(index + 1) + " passes through a singular point in its interior");
      }
    }
    if (hit_x && hit_y) {
      sq = sx > 0 ? o.sigma_h()(sq) : o.sigma_h_inv()(sq);
      sq = sy > 0 ? o.sigma_v()(sq) : o.sigma_v_inv()(sq);
      x = sx > 0 ? 0 : 1;
      y = sy > 0 ? 0 : 1;
    } else if (hit_x) {
      sq = sx > 0 ? o.sigma_h()(sq) : o.sigma_h_inv()(sq);
      x = sx > 0 ? 0 : 1;
    } else {
      sq = sy > 0 ? o.sigma_v()(sq) : o.sigma_v_inv()(sq);
      y = sy > 0 ? 0 : 1;
    }
  }
  return pieces;
}

}  // namespace

std::string to_string(EndpointKind kind) {
  switch (kind) {
    case EndpointKind::Singular: return "singular";
    case EndpointKind::RegularInteger: return "regular-integer";
    case EndpointKind::Interior: return "interior";
  }
  return "interior";
}

Cut Cut::edge(const Origami& o, EdgeSide side, int square, GroupValue value) {
  if (square < 1 || square > o.squares()) throw InvalidCut("edge of nonexistent square " + std::to_string(square));
  Cut c;
  c.value = std::move(value);
  c.length = 1;
  switch (side) {
    case EdgeSide::Bottom: c.start = {square, 0, 0}; c.dx = 1; c.dy = 0; break;
    case EdgeSide::Left: c.start = {square, 0, 0}; c.dx = 0; c.dy = 1; break;
    case EdgeSide::Top: c.start = {o.sigma_v()(square), 0, 0}; c.dx = 1; c.dy = 0; break;
    case EdgeSide::Right: c.start = {o.sigma_h()(square), 0, 0}; c.dx = 0; c.dy = 1; break;
  }
  return c;
}

SurfacePoint normalize_point(const Origami& o, int square, Rational x, Rational y) {
  if (x < 0 || x > 1 || y < 0 || y > 1) throw std::invalid_argument("local coordinates must lie in [0,1]");
  if (x == 1) {
    square = o.sigma_h()(square);
    x = 0;
  }
  if (y == 1) {
    square = o.sigma_v()(square);
    y = 0;
  }
  return SurfacePoint{square, x, y};
}

CutEndpoint classify_point(const Origami& o, const SurfacePoint& p) {
  CutEndpoint e;
  e.point = p;
  if (p.integer()) {
    e.vertex = o.vertex_at(p.square, Corner::LowerLeft);
    e.kind = o.singular_vertex(e.vertex) ? EndpointKind::Singular : EndpointKind::RegularInteger;
  }
  return e;
}

StaircaseSpec StaircaseSpec::build(Origami o, GroupDescriptor group, std::vector<Cut> cuts) {
  StaircaseSpec spec(std::move(o), group);
  const Origami& org = spec.origami_;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Cut& c = cuts[i];
    const std::string name = "cut " + std::to_string(i + 1);
    if (c.start.square < 1 || c.start.square > org.squares()) throw InvalidCut(name + ": square out of range");
    if (c.start.x < 0 || c.start.x >= 1 || c.start.y < 0 || c.start.y >= 1) {
      throw InvalidCut(name + ": start offset must lie in [0,1)^2");
    }
    if (c.length <= 0) throw InvalidCut(name + ": length must be positive");
    if (c.dx == 0 && c.dy == 0) throw InvalidCut(name + ": zero direction");
    if (!(c.value.group() == group)) {
      if (c.value.components().size() == static_cast<std::size_t>(group.rank)) {
        c.value = GroupValue::make(group, c.value.components());
      } else {
        throw InvalidCut(name + ": value does not belong to " + group.to_string());
      }
    }
    auto pieces = decompose(org, c, static_cast<int>(i));
    spec.pieces_.insert(spec.pieces_.end(), pieces.begin(), pieces.end());
    spec.endpoints_.push_back(classify_point(org, c.start));
    const CutPiece& last = pieces.back();
    spec.endpoints_.push_back(classify_point(org, normalize_point(org, last.square, last.x1, last.y1)));
  }
  spec.cuts_ = std::move(cuts);

  // Boundary of the chain.
  std::map<PointKey, std::size_t> slot;
  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < spec.cuts_.size(); ++i) {
    for (int end = 0; end < 2; ++end) {
      const CutEndpoint& e = spec.endpoints_[2 * i + static_cast<std::size_t>(end)];
      auto [it, fresh] = slot.emplace(key_of(e), jumps.size());
      if (fresh) jumps.push_back(Jump{e, GroupValue::zero(group)});
      Jump& j = jumps[it->second];
      j.value += end == 1 ? spec.cuts_[i].value : -spec.cuts_[i].value;
    }
  }
  for (auto& j : jumps) {
    if (!j.value.is_zero()) spec.jumps_.push_back(std::move(j));
  }

  bool natural = true;
  for (std::size_t i = 0; i < spec.cuts_.size() && natural; ++i) {
    const Cut& c = spec.cuts_[i];
    const Rational cx = c.cx(), cy = c.cy();
    const bool unit_axis = (abs(cx) == 1 && cy == 0) || (cx == 0 && abs(cy) == 1);
    natural = unit_axis && spec.start_of(i).point.integer() && spec.end_of(i).point.integer();
  }
  if (natural) {
    // Unit edge cuts meet away from endpoints only when they share an edge.
    std::map<std::pair<int, int>, int> used;
    for (const auto& p : spec.pieces_) {
      if (p.kind == CutPiece::Kind::Interior || ++used[{p.square, static_cast<int>(p.kind)}] > 1) natural = false;
    }
  }
  spec.natural_ = natural;
  return spec;
}

long long StaircaseSpec::total_value_norm() const {
  long long total = 0;
  for (const auto& c : cuts_) total += c.value.norm();
  return total;
}

Rational transverse_extent(const Slope& s, const Cut& c) {
  return Rational(s.run) * c.cy() - Rational(s.rise) * c.cx();
}

ZeroIntegralResult zero_integral_check(const StaircaseSpec& spec, const Slope& s) {
  ZeroIntegralResult r{RationalCombination::zero(spec.group()), false};
  for (const auto& c : spec.cuts()) r.residual.add(transverse_extent(s, c), c.value);
  r.zero = r.residual.is_zero();
  return r;
}

namespace fixtures {

namespace {
StaircaseSpec z_edges(const Origami& o, const std::vector<std::tuple<EdgeSide, int, int>>& edges) {
  const auto g = GroupDescriptor::free(1);
  std::vector<Cut> cuts;
  for (const auto& [side, square, value] : edges) cuts.push_back(Cut::edge(o, side, square, GroupValue::make(g, {value})));
  return StaircaseSpec::build(o, g, std::move(cuts));
}
}  // namespace

StaircaseSpec six_square_staircase(int n) {
  const auto o = stsurf::fixtures::six_square_family(n);
  return z_edges(o, {{EdgeSide::Left, 2 * n + 2, -1},
                     {EdgeSide::Right, 2, 1},
                     {EdgeSide::Left, 4 * n + 1, 1},
                     {EdgeSide::Right, 2 * n + 1, -1}});
}

StaircaseSpec five_square_left_staircase() {
  return z_edges(stsurf::fixtures::five_square_h2_left(), {{EdgeSide::Right, 5, 1}, {EdgeSide::Left, 1, -1}});
}

StaircaseSpec five_square_right_staircase() {
  return z_edges(stsurf::fixtures::five_square_h2_right(), {{EdgeSide::Top, 5, 1}, {EdgeSide::Top, 1, -1}});
}

StaircaseSpec two_square_staircase() {
  return z_edges(stsurf::fixtures::two_square_torus(), {{EdgeSide::Right, 1, 1}, {EdgeSide::Right, 2, -1}});
}

StaircaseSpec five_square_drifting_spec() {
  const auto o = stsurf::fixtures::five_square_h2_right();
  const auto g = GroupDescriptor::free(2);
  std::vector<Cut> cuts;
  for (int i = 1; i <= o.squares(); ++i) {
    cuts.push_back(Cut::edge(o, EdgeSide::Top, i, GroupValue::unit(g, 1)));
    cuts.push_back(Cut::edge(o, EdgeSide::Right, i, GroupValue::unit(g, 2)));
  }
  return StaircaseSpec::build(o, g, std::move(cuts));
}

}  // namespace fixtures

}  // namespace stsurf
