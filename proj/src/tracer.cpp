#include "stsurf/tracer.hpp"

#include <algorithm>
#include <optional>

namespace stsurf {

namespace {

template <class Num>
Num convert(const Rational& r) {
  if constexpr (std::is_same_v<Num, Rational>) {
    return r;
  } else if constexpr (std::is_same_v<Num, Real>) {
    return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
  } else {
    return static_cast<Num>(static_cast<long double>(r));
  }
}

template <class Num>
Num abs_of(const Num& v) {
  return v < 0 ? Num(-v) : v;
}

template <class Num>
int sign_with(const Num& v, const Num& tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

Corner corner_for(int sx, int sy) {
  if (sx > 0) return sy > 0 ? Corner::UpperRight : Corner::LowerRight;
  return sy > 0 ? Corner::UpperLeft : Corner::LowerLeft;
}

}  // namespace

std::string to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::Complete: return "complete";
    case TraceStatus::HitSingularity: return "hit-singularity";
    case TraceStatus::HitCutEndpoint: return "hit-cut-endpoint";
  }
  return "complete";
}

template <class Num>
Tracer<Num>::Tracer(const StaircaseSpec& spec, Num dx, Num dy, Num tolerance)
    : spec_(&spec), dx_(std::move(dx)), dy_(std::move(dy)), tol_(std::move(tolerance)) {
  if (dx_ == 0 && dy_ == 0) throw std::invalid_argument("flow direction must be nonzero");
  const auto k = static_cast<std::size_t>(spec.origami().squares()) + 1;
  interior_.resize(k);
  right_.resize(k);
  top_.resize(k);
  for (const auto& c : spec.cuts()) {
    const Num cx = convert<Num>(c.cx()), cy = convert<Num>(c.cy());
    const Num det = dx_ * cy - dy_ * cx;
    const int s = sign_with(det, Num(tol_ * (abs_of(cx) + abs_of(cy)) * (abs_of(dx_) + abs_of(dy_))));
    if (s == 0) throw ParallelCut("flow direction is parallel to cut " + std::to_string(sign_.size() + 1));
    sign_.push_back(s);
  }
  for (const auto& p : spec.pieces()) {
    Piece q{p.cut, convert<Num>(p.x0), convert<Num>(p.y0), convert<Num>(p.x1), convert<Num>(p.y1), p.starts_cut,
            p.ends_cut};
    auto& bucket = p.kind == CutPiece::Kind::Interior ? interior_ : (p.kind == CutPiece::Kind::RightEdge ? right_ : top_);
    bucket[static_cast<std::size_t>(p.square)].push_back(std::move(q));
  }
}

template <class Num>
bool Tracer<Num>::near(const Num& a, const Num& b) const {
  if constexpr (std::is_same_v<Num, Rational>) {
    return a == b;
  } else {
    return abs_of(Num(a - b)) <= tol_;
  }
}

template <class Num>
void Tracer<Num>::collect(int square, const Num& x, const Num& y, PointHits& hits) const {
  auto test = [&](const std::vector<Piece>& pieces) {
    for (const auto& p : pieces) {
      const Num ex = p.x1 - p.x0, ey = p.y1 - p.y0;
      const Num len2 = ex * ex + ey * ey;
      const Num cross = (x - p.x0) * ey - (y - p.y0) * ex;
      // distance to the line is |cross| / |e|
      if (cross * cross > tol_ * tol_ * len2) continue;
      const Num u = ((x - p.x0) * ex + (y - p.y0) * ey) / len2;
      if (u < -tol_ || u > 1 + tol_) continue;
      if ((near(u, Num(0)) && p.starts_cut) || (near(u, Num(1)) && p.ends_cut)) hits.endpoint = true;
      if (std::find(hits.cuts.begin(), hits.cuts.end(), p.cut) == hits.cuts.end()) hits.cuts.push_back(p.cut);
    }
  };
  const auto s = static_cast<std::size_t>(square);
  test(interior_[s]);
  test(right_[s]);
  test(top_[s]);
}

template <class Num>
typename Tracer<Num>::PointHits Tracer<Num>::cuts_through(int sq, const Num& x, const Num& y) const {
  const Origami& o = spec_->origami();
  PointHits hits;
  const bool left = near(x, Num(0)), right = near(x, Num(1));
  const bool bottom = near(y, Num(0)), top = near(y, Num(1));
  if ((left || right) && (bottom || top)) {
    const int sx = right ? 1 : -1, sy = top ? 1 : -1;
    const int vertex = o.vertex_at(sq, corner_for(sx, sy));
    if (o.singular_vertex(vertex)) {
      hits.singular = true;
      return hits;
    }
    // the square whose upper-right corner is this vertex
    int sw = sq;
    if (sx < 0) sw = o.sigma_h_inv()(sw);
    if (sy < 0) sw = o.sigma_v_inv()(sw);
    const int se = o.sigma_h()(sw), nw = o.sigma_v()(sw), ne = o.sigma_v()(se);
    collect(sw, Num(1), Num(1), hits);
    collect(se, Num(0), Num(1), hits);
    collect(nw, Num(1), Num(0), hits);
    collect(ne, Num(0), Num(0), hits);
  } else if (left || right) {
    collect(sq, right ? Num(1) : Num(0), y, hits);
    if (right) collect(o.sigma_h()(sq), Num(0), y, hits);
    else collect(o.sigma_h_inv()(sq), Num(1), y, hits);
  } else if (bottom || top) {
    collect(sq, x, top ? Num(1) : Num(0), hits);
    if (top) collect(o.sigma_v()(sq), x, Num(0), hits);
    else collect(o.sigma_v_inv()(sq), x, Num(1), hits);
  } else {
    collect(sq, x, y, hits);
  }
  return hits;
}

template <class Num>
TraceOutcome<Num> Tracer<Num>::run(TracePoint<Num> start, const Num& T, bool include_start,
                                   const Callback& on_cross) const {
  const Origami& o = spec_->origami();
  if (start.square < 1 || start.square > o.squares()) throw std::invalid_argument("start square out of range");
  if (start.x < 0 || start.x > 1 || start.y < 0 || start.y > 1) {
    throw std::invalid_argument("start offset must lie in [0,1]^2");
  }
  const int sx = sign_with(dx_, Num(0)), sy = sign_with(dy_, Num(0));
  if ((sx == 0 && (near(start.x, Num(0)) || near(start.x, Num(1)))) ||
      (sy == 0 && (near(start.y, Num(0)) || near(start.y, Num(1))))) {
    throw std::invalid_argument("orbit runs along an edge of the square grid; start it off the edge");
  }

  TraceOutcome<Num> out;
  int sq = start.square;
  Num x = start.x, y = start.y;

  auto fail = [&](TraceStatus status, const std::string& what) {
    if constexpr (!std::is_same_v<Num, Rational>) {
      throw AmbiguousCrossing(what + " within tolerance of the orbit");
    }
    out.status = status;
    out.end = {sq, x, y};
    return out;
  };

  {
    const PointHits here = cuts_through(sq, x, y);
    if (here.singular) {
      if constexpr (std::is_same_v<Num, Rational>) throw std::invalid_argument("start point is a singularity");
      throw AmbiguousCrossing("start point within tolerance of a singularity");
    }
    if (include_start) {
      if (here.endpoint) return fail(TraceStatus::HitCutEndpoint, "cut endpoint");
      for (int c : here.cuts) on_cross(c, sign_[static_cast<std::size_t>(c)], Num(0));
    }
  }

  // Move into the square the flow actually enters.
  if (sx < 0 && near(x, Num(0))) {
    sq = o.sigma_h_inv()(sq);
    x = 1;
  } else if (sx > 0 && near(x, Num(1))) {
    sq = o.sigma_h()(sq);
    x = 0;
  }
  if (sy < 0 && near(y, Num(0))) {
    sq = o.sigma_v_inv()(sq);
    y = 1;
  } else if (sy > 0 && near(y, Num(1))) {
    sq = o.sigma_v()(sq);
    y = 0;
  }

  Num elapsed = 0;
  struct Hit {
    Num t;
    int cut;
  };
  std::vector<Hit> hits;
  for (;;) {
    std::optional<Num> tx, ty;
    if (sx > 0) tx = Num((1 - x) / dx_);
    if (sx < 0) tx = Num(-x / dx_);
    if (sy > 0) ty = Num((1 - y) / dy_);
    if (sy < 0) ty = Num(-y / dy_);
    const bool corner = tx && ty && near(Num(*tx * (abs_of(dx_) + abs_of(dy_))), Num(*ty * (abs_of(dx_) + abs_of(dy_))));
    const bool exit_x = tx && (!ty || *tx <= *ty);
    const Num texit = exit_x ? *tx : *ty;
    const Num remaining = T - elapsed;
    const bool finish = remaining <= texit;
    const Num tend = finish ? remaining : texit;

    hits.clear();
    for (const auto& p : interior_[static_cast<std::size_t>(sq)]) {
      const Num ex = p.x1 - p.x0, ey = p.y1 - p.y0;
      const Num d = dx_ * ey - dy_ * ex;
      if (d == 0) continue;
      const Num rx = p.x0 - x, ry = p.y0 - y;
      const Num t = (rx * ey - ry * ex) / d;
      const Num u = (rx * dy_ - ry * dx_) / d;
      if (u < -tol_ || u > 1 + tol_) continue;
      if (t < -tol_ || t > tend + tol_) continue;
      // boundary points of the segment are handled at the transitions
      if (near(t, Num(0))) continue;
      if (near(t, texit)) continue;
      if (finish && t >= tend) continue;
      if ((near(u, Num(0)) && p.starts_cut) || (near(u, Num(1)) && p.ends_cut)) {
        if constexpr (!std::is_same_v<Num, Rational>) throw AmbiguousCrossing("cut endpoint within tolerance of the orbit");
        // stop at the endpoint, reporting the crossings before it
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
        for (const auto& h : hits) {
          if (h.t < t) on_cross(h.cut, sign_[static_cast<std::size_t>(h.cut)], Num(elapsed + h.t));
        }
        out.status = TraceStatus::HitCutEndpoint;
        out.elapsed = elapsed + t;
        out.end = {sq, Num(x + t * dx_), Num(y + t * dy_)};
        return out;
      }
      hits.push_back({t, p.cut});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    for (const auto& h : hits) on_cross(h.cut, sign_[static_cast<std::size_t>(h.cut)], Num(elapsed + h.t));

    if (finish) {
      out.status = TraceStatus::Complete;
      out.elapsed = T;
      out.end = {sq, Num(x + tend * dx_), Num(y + tend * dy_)};
      return out;
    }

    elapsed += texit;
    Num ex, ey;
    if (corner) {
      ex = sx > 0 ? Num(1) : Num(0);
      ey = sy > 0 ? Num(1) : Num(0);
    } else if (exit_x) {
      ex = sx > 0 ? Num(1) : Num(0);
      ey = y + texit * dy_;
    } else {
      ex = x + texit * dx_;
      ey = sy > 0 ? Num(1) : Num(0);
    }
    x = ex;
    y = ey;
    const PointHits at = cuts_through(sq, x, y);
    if (at.singular) {
      out.elapsed = elapsed;
      return fail(TraceStatus::HitSingularity, "singular point");
    }
    if (at.endpoint) {
      out.elapsed = elapsed;
      return fail(TraceStatus::HitCutEndpoint, "cut endpoint");
    }
    if (elapsed < T) {
      for (int c : at.cuts) on_cross(c, sign_[static_cast<std::size_t>(c)], elapsed);
    }

    if (corner) {
      sq = sx > 0 ? o.sigma_h()(sq) : o.sigma_h_inv()(sq);
      sq = sy > 0 ? o.sigma_v()(sq) : o.sigma_v_inv()(sq);
      x = sx > 0 ? Num(0) : Num(1);
      y = sy > 0 ? Num(0) : Num(1);
    } else if (exit_x) {
      sq = sx > 0 ? o.sigma_h()(sq) : o.sigma_h_inv()(sq);
      x = sx > 0 ? Num(0) : Num(1);
    } else {
      sq = sy > 0 ? o.sigma_v()(sq) : o.sigma_v_inv()(sq);
      y = sy > 0 ? Num(0) : Num(1);
    }
  }
}

template class Tracer<Rational>;
template class Tracer<long double>;
template class Tracer<Real>;

}  // namespace stsurf
