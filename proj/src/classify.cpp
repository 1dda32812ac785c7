#include "stsurf/classify.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>

#include "stsurf/skew.hpp"

namespace stsurf {

namespace {

bool in_h2(const Origami& o) { return stratum(o).cone_angles == std::vector<int>{3}; }

std::vector<int> endpoint_vertices(const StaircaseSpec& spec, std::size_t j) {
  std::vector<int> out;
  for (const CutEndpoint* e : {&spec.start_of(j), &spec.end_of(j)}) {
    if (e->vertex >= 0) out.push_back(e->vertex);
  }
  return out;
}

std::optional<TwoCylinderZeroSum> two_cylinder_zero_sum(const StaircaseSpec& spec) {
  for (const Slope& s : enumerate_slopes(6)) {
    CylinderSums sums;
    try {
      sums = cylinder_sums(spec, s);
    } catch (const ParallelCut&) {
      continue;
    }
    if (sums.cylinders.size() != 2) continue;
    bool zero = true;
    TwoCylinderZeroSum rep;
    rep.slope = s;
    std::map<std::string, Rational> pieces[2];
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& cyl = sums.cylinders[c];
      zero = zero && cyl.integral.is_zero();
      rep.strips.push_back(cyl.strips);
      rep.integrals.push_back(cyl.integral.to_string());
      for (const auto& iv : cyl.intervals) pieces[c][iv.sum.to_string()] += iv.hi - iv.lo;
    }
    if (!zero) continue;
    rep.profiles_equal = pieces[0] == pieces[1];
    return rep;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ErgodicAE: return "ErgodicAE";
    case Verdict::NotErgodicAE: return "NotErgodicAE";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Classification classify_staircase(const StaircaseSpec& spec, long long q_max) {
  const Origami& o = spec.origami();
  if (!o.connected()) throw DisconnectedSurface("classification needs a connected surface");
  Classification out;
  auto& why = out.justification;
  if (spec.cuts().empty()) {
    why.push_back("no cuts: the cover is a disjoint union of copies of the base");
    return out;
  }

  bool all_singular = true;
  for (std::size_t j = 0; j < spec.cuts().size(); ++j) {
    for (const CutEndpoint* e : {&spec.start_of(j), &spec.end_of(j)}) {
      if (e->kind != EndpointKind::Singular) all_singular = false;
    }
  }
  const bool h2 = in_h2(o);
  if (spec.natural() && h2 && all_singular) {
    out.verdict = Verdict::NotErgodicAE;
    why.push_back("surface is in H(2) and every cut endpoint is a singularity (unramified cover)");
    return out;
  }

  if (!spec.natural()) {
    why.push_back("cut system is not natural; the automatic tests need unit axis-parallel cuts with integer endpoints");
  } else if (spec.group().is_cyclic()) {
    why.push_back("group " + spec.group().to_string() + " is not free; the generator test needs Z^d");
  } else {
    // (a) each generator has a cut with value e_i and a regular endpoint no other cut touches
    bool all_generators = true;
    for (int i = 1; i <= spec.group().rank; ++i) {
      const GroupValue e = GroupValue::unit(spec.group(), i);
      std::optional<std::string> found;
      for (std::size_t j = 0; j < spec.cuts().size() && !found; ++j) {
        if (!(spec.cuts()[j].value == e)) continue;
        for (const CutEndpoint* end : {&spec.start_of(j), &spec.end_of(j)}) {
          if (end->kind != EndpointKind::RegularInteger) continue;
          bool shared = false;
          for (std::size_t other = 0; other < spec.cuts().size(); ++other) {
            if (other == j) continue;
            const auto vs = endpoint_vertices(spec, other);
            if (std::find(vs.begin(), vs.end(), end->vertex) != vs.end()) shared = true;
          }
          if (!shared) {
            found = "cut " + std::to_string(j + 1) + " carries " + e.to_string() + " and ends at regular vertex " +
                    std::to_string(end->vertex + 1) + ", touched by no other cut";
            break;
          }
        }
      }
      if (found) {
        why.push_back(*found);
      } else {
        all_generators = false;
        why.push_back("no cut carrying " + e.to_string() + " has a regular endpoint free of other cuts");
      }
    }
    // (b) single-cylinder direction
    const auto search = find_single_cylinder_direction(o, q_max);
    out.single_cylinder = search.slope;
    if (search.slope) {
      why.push_back("single-cylinder direction " + search.slope->to_string());
    } else if (search.parity_obstruction) {
      why.push_back("no single-cylinder direction: both generators even and k even (parity obstruction)");
    } else {
      why.push_back("no single-cylinder direction with max(rise, run) <= " + std::to_string(q_max));
    }
    if (all_generators && search.slope) {
      out.verdict = Verdict::ErgodicAE;
      return out;
    }
  }

  if (h2 && !all_singular) why.push_back("surface is in H(2) but some cut endpoint is not singular");
  out.supplementary = two_cylinder_zero_sum(spec);
  if (out.supplementary) {
    why.push_back("supplementary: direction " + out.supplementary->slope.to_string() +
                  " has two cylinders, each with total sum zero");
  }
  return out;
}

Proposal propose_staircase(const Origami& o, int d, long long q_max) {
  if (!o.connected()) throw DisconnectedSurface("proposal needs a connected surface");
  if (d < 1 || d > 8) throw std::invalid_argument("rank must be between 1 and 8");
  Proposal out;
  const Stratum st = stratum(o);
  const auto fixed = static_cast<int>(st.regular_vertices.size());
  if (fixed == 0 && in_h2(o)) {
    out.warnings.push_back("no regular vertices and the surface is in H(2): every natural staircase is NotErgodicAE");
  }
  if (fixed < d) {
    out.reason = "commutator has " + std::to_string(fixed) + " fixed point(s), fewer than d = " + std::to_string(d);
    return out;
  }

  struct Edge {
    EdgeSide side;
    int square;
    int a, b;  // endpoint vertices
  };
  std::vector<Edge> edges;
  for (int i = 1; i <= o.squares(); ++i) {
    edges.push_back({EdgeSide::Right, i, o.vertex_at(i, Corner::LowerRight), o.vertex_at(i, Corner::UpperRight)});
  }
  for (int i = 1; i <= o.squares(); ++i) {
    edges.push_back({EdgeSide::Top, i, o.vertex_at(i, Corner::UpperLeft), o.vertex_at(i, Corner::UpperRight)});
  }
  auto touches = [&](const Edge& e, int v) { return e.a == v || e.b == v; };
  auto regular = [&](int v) { return !o.singular_vertex(v); };

  std::vector<std::size_t> plus(static_cast<std::size_t>(d)), minus(static_cast<std::size_t>(d));
  std::vector<int> owned(static_cast<std::size_t>(d));
  std::vector<bool> used(edges.size(), false);

  auto fits = [&](const Edge& e, int level, int extra) {
    for (int j = 0; j < level; ++j) {
      if (touches(e, owned[static_cast<std::size_t>(j)])) return false;
    }
    return extra < 0 || !touches(e, extra);
  };

  std::function<bool(int)> place = [&](int level) {
    if (level == d) return true;
    for (std::size_t p = 0; p < edges.size(); ++p) {
      if (used[p] || !fits(edges[p], level, -1)) continue;
      for (int v : {edges[p].a, edges[p].b}) {
        if (!regular(v)) continue;
        // earlier edges must not touch the new owned vertex
        bool clash = false;
        for (int j = 0; j < level; ++j) {
          clash = clash || touches(edges[plus[static_cast<std::size_t>(j)]], v) ||
                  touches(edges[minus[static_cast<std::size_t>(j)]], v);
        }
        if (clash) continue;
        used[p] = true;
        for (std::size_t m = 0; m < edges.size(); ++m) {
          if (used[m] || edges[m].side != edges[p].side || !fits(edges[m], level, v)) continue;
          used[m] = true;
          plus[static_cast<std::size_t>(level)] = p;
          minus[static_cast<std::size_t>(level)] = m;
          owned[static_cast<std::size_t>(level)] = v;
          if (place(level + 1)) return true;
          used[m] = false;
        }
        used[p] = false;
      }
    }
    return false;
  };

  if (!place(0)) {
    out.reason = "no placement of " + std::to_string(d) +
                 " parallel unit-edge pairs with distinct regular endpoints free of other cuts";
    return out;
  }
  const auto g = GroupDescriptor::free(d);
  std::vector<Cut> cuts;
  for (int i = 0; i < d; ++i) {
    const Edge& p = edges[plus[static_cast<std::size_t>(i)]];
    const Edge& m = edges[minus[static_cast<std::size_t>(i)]];
    cuts.push_back(Cut::edge(o, p.side, p.square, GroupValue::unit(g, i + 1)));
    cuts.push_back(Cut::edge(o, m.side, m.square, -GroupValue::unit(g, i + 1)));
  }
  out.spec = StaircaseSpec::build(o, g, std::move(cuts));
  out.feasible = true;
  out.classification = classify_staircase(*out.spec, q_max);
  if (out.classification->verdict != Verdict::ErgodicAE) {
    out.warnings.push_back("no single-cylinder direction found; the proposal is not certified ErgodicAE");
  }
  return out;
}

}  // namespace stsurf
