#include "stsurf/directions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace stsurf {

namespace {

// Retiling builds permutations on k*q points; beyond this only the word route runs.
constexpr long long kRetileLimit = 2'000'000;

void require_connected(const Origami& o) {
  if (!o.connected()) {
    throw DisconnectedSurface("surface has " + std::to_string(o.components().size()) +
                              " components; direction queries need a connected surface");
  }
}

void require_steep(const Slope& s) {
  if (!s.steep()) throw ShallowSlope("slope " + s.to_string() + " is shallow; transpose the surface first");
}

// Walks the Stern-Brocot tree from 0/1 and 1/1 to ones/length, combining the
// words of the two ancestors. concat(u, v) is the element for the word uv;
// power(x, t) is x repeated t times.
template <class T, class Concat, class Power>
T farey_descent(long long ones, long long length, T zero, T one, Concat concat, Power power) {
  if (length < 1 || ones < 0 || ones > length || std::gcd(ones, length) != 1) {
    throw std::invalid_argument("word parameters " + std::to_string(ones) + "/" + std::to_string(length) +
                                " must be reduced with 0 <= p <= q, q >= 1");
  }
  if (ones == 0) return zero;
  if (ones == length) return one;
  using Wide = __int128;  // cross products reach length^2
  const Wide p = ones, q = length;
  long long pl = 0, ql = 1, pr = 1, qr = 1;
  T left = std::move(zero), right = std::move(one);
  for (;;) {
    const long long pm = pl + pr, qm = ql + qr;
    if (pm == ones && qm == length) return concat(left, right);
    const Wide a = p * ql - q * pl;  // > 0: target right of left ancestor
    const Wide b = q * pr - p * qr;  // > 0: target left of right ancestor
    if (p * qm < q * pm) {
      // Target left of the mediant: the right ancestor becomes left^t right.
      const long long t = static_cast<long long>((b - 1) / a);
      right = concat(power(left, t), right);
      pr += t * pl;
      qr += t * ql;
    } else {
      const long long t = static_cast<long long>((a - 1) / b);
      left = concat(left, power(right, t));
      pl += t * pr;
      ql += t * qr;
    }
  }
}

}  // namespace

Slope Slope::make(long long run, long long rise) {
  if (run < 0 || rise < 0 || (run == 0 && rise == 0)) {
    throw std::invalid_argument("slope needs a nonzero direction in the closed first quadrant");
  }
  if (std::gcd(run, rise) != 1) {
    throw std::invalid_argument("slope " + std::to_string(rise) + "/" + std::to_string(run) + " is not reduced");
  }
  return Slope{run, rise};
}

Slope Slope::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make(1, std::stoll(text));
    return make(std::stoll(text.substr(slash + 1)), std::stoll(text.substr(0, slash)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse slope '" + text + "' (expected rise/run)");
  }
}

SturmianWord sturmian_lyndon(long long ones, long long length) {
  SturmianWord word;
  word.ones = ones;
  word.length = length;
  word.letters = farey_descent<std::string>(
      ones, length, "0", "1", [](const std::string& u, const std::string& v) { return u + v; },
      [](const std::string& u, long long t) {
        std::string out;
        out.reserve(u.size() * static_cast<std::size_t>(t));
        for (long long i = 0; i < t; ++i) out += u;
        return out;
      });
  return word;
}

bool is_lyndon(const std::string& word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    const std::string rotation = word.substr(r) + word.substr(0, r);
    if (!(word < rotation)) return false;
  }
  return true;
}

Retiling retile(const Origami& o, const Slope& s) {
  require_steep(s);
  const long long k = o.squares();
  const long long q = s.rise;
  const long long p = s.run;
  if (q > kRetileLimit / k) throw std::invalid_argument("retiling too large: k=" + std::to_string(k) + ", q=" + std::to_string(q));
  std::vector<int> h(static_cast<std::size_t>(k * q)), v(static_cast<std::size_t>(k * q));
  for (int i = 1; i <= k; ++i) {
    for (long long j = 1; j <= q; ++j) {
      const long long idx = (i - 1) * q + j;
      h[static_cast<std::size_t>(idx - 1)] =
          static_cast<int>(j < q ? idx + 1 : (o.sigma_h()(i) - 1) * q + 1);
      // Flowing one unit up shifts the base interval by p/q; it stays over
      // square i iff j + p <= q, else it first crosses the right edge.
      v[static_cast<std::size_t>(idx - 1)] = static_cast<int>(
          j + p <= q ? (o.sigma_v()(i) - 1) * q + j + p
                     : (o.sigma_v()(o.sigma_h()(i)) - 1) * q + j + p - q);
    }
  }
  return Retiling{Permutation::from_images(std::move(h)), Permutation::from_images(std::move(v)), q};
}

Permutation sigma_hat_retile(const Origami& o, const Slope& s) {
  const Retiling tiles = retile(o, s);
  const long long q = s.rise;
  std::vector<int> images(static_cast<std::size_t>(o.squares()));
  for (int i = 1; i <= o.squares(); ++i) {
    long long t = tiles.tile_index(i, 1);
    for (long long step = 0; step < q; ++step) t = tiles.sigma_v(static_cast<int>(t));
    if ((t - 1) % q != 0) throw InternalConsistencyError("retiled strip did not return to a base interval start");
    images[static_cast<std::size_t>(i - 1)] = static_cast<int>((t - 1) / q + 1);
  }
  return Permutation::from_images(std::move(images));
}

Permutation sigma_hat_word(const Origami& o, const Slope& s) {
  require_steep(s);
  const Permutation up = o.sigma_v();
  const Permutation across_then_up = o.sigma_v() * o.sigma_h();
  // Word uv acts as u first: perm(uv) = perm(v) o perm(u).
  return farey_descent<Permutation>(
      s.run, s.rise, up, across_then_up,
      [](const Permutation& u, const Permutation& v) { return v * u; },
      [](const Permutation& u, long long t) { return u.pow(t); });
}

Permutation sigma_hat(const Origami& o, const Slope& s) {
  require_steep(s);
  Permutation by_word = sigma_hat_word(o, s);
  if (s.rise > kRetileLimit / o.squares()) return by_word;
  Permutation by_tiles = sigma_hat_retile(o, s);
  if (by_tiles.cycle_type() != by_word.cycle_type()) {
    throw InternalConsistencyError("sigma-hat routes disagree for slope " + s.to_string() + ": retiling " +
                                   to_string(by_tiles.cycle_type()) + " vs word " +
                                   to_string(by_word.cycle_type()));
  }
  return by_tiles;
}

SteepFrame steep_frame(const Origami& o, const Slope& s) {
  if (s.steep()) return SteepFrame{o, s, false};
  return SteepFrame{o.transpose(), s.transposed(), true};
}

bool is_single_cylinder(const Origami& o, const Slope& s) {
  require_connected(o);
  const SteepFrame frame = steep_frame(o, s);
  const CycleType type = sigma_hat(frame.origami, frame.slope).cycle_type();
  return type.cycle_count() == 1;
}

std::string NoSingleCylinderCertificate::describe() const {
  switch (kind) {
    case Kind::ParityObstruction:
      return "ParityObstruction: both generators are even and k is even, so the generated group has no k-cycle";
    case Kind::ExhaustedSearch:
      return "ExhaustedSearch: no single-cylinder slope with max(rise, run) <= " + std::to_string(bound);
    case Kind::None:
      return witness ? "None: single-cylinder slope " + witness->to_string() : "None";
  }
  return "None";
}

NoSingleCylinderCertificate no_single_cylinder_certificate(const Origami& o, long long q_max) {
  require_connected(o);
  NoSingleCylinderCertificate cert;
  if (o.squares() % 2 == 0 && o.sigma_h().is_even() && o.sigma_v().is_even()) {
    cert.kind = NoSingleCylinderCertificate::Kind::ParityObstruction;
    return cert;
  }
  const auto search = find_single_cylinder_direction(o, q_max);
  if (search.slope) {
    cert.kind = NoSingleCylinderCertificate::Kind::None;
    cert.witness = search.slope;
  } else {
    cert.kind = NoSingleCylinderCertificate::Kind::ExhaustedSearch;
    cert.bound = q_max;
  }
  return cert;
}

std::vector<Slope> enumerate_slopes(long long q_max) {
  std::vector<Slope> out;
  if (q_max < 1) return out;
  struct Node {
    long long lrun, lrise, rrun, rrise;
  };
  // Ancestors of the root 1/1 are 0/1 (run 1, rise 0) and 1/0 (run 0, rise 1).
  std::deque<Node> queue{{1, 0, 0, 1}};
  while (!queue.empty()) {
    const Node n = queue.front();
    queue.pop_front();
    const long long run = n.lrun + n.rrun, rise = n.lrise + n.rrise;
    if (std::max(run, rise) > q_max) continue;
    out.push_back(Slope{run, rise});
    queue.push_back({n.lrun, n.lrise, run, rise});
    queue.push_back({run, rise, n.rrun, n.rrise});
  }
  out.push_back(Slope{1, 0});
  out.push_back(Slope{0, 1});
  return out;
}

SingleCylinderSearch find_single_cylinder_direction(const Origami& o, long long q_max) {
  require_connected(o);
  SingleCylinderSearch result;
  result.parity_obstruction = o.squares() % 2 == 0 && o.sigma_h().is_even() && o.sigma_v().is_even();
  for (const Slope& s : enumerate_slopes(q_max)) {
    ++result.examined;
    if (is_single_cylinder(o, s)) {
      result.slope = s;
      break;
    }
  }
  return result;
}

long long CylinderDecomposition::total_area() const {
  long long total = 0;
  for (const auto& c : cylinders) total += c.area();
  return total;
}

double CylinderDecomposition::height(std::size_t i) const {
  return static_cast<double>(cylinders.at(i).strips) * std::sqrt(static_cast<double>(norm2()));
}

double CylinderDecomposition::width() const { return 1.0 / std::sqrt(static_cast<double>(norm2())); }

CylinderDecomposition cylinder_decomposition(const Origami& o, const Slope& s) {
  require_connected(o);
  const SteepFrame frame = steep_frame(o, s);
  const Permutation hat = sigma_hat(frame.origami, frame.slope);
  CylinderDecomposition dec;
  dec.slope = s;
  dec.transposed = frame.transposed;
  const bool track_squares = frame.slope.rise <= kRetileLimit / o.squares();
  const std::string word =
      track_squares ? sturmian_lyndon(frame.slope.run, frame.slope.rise).letters : std::string();
  for (auto& cycle : hat.cycles(true)) {
    Cylinder cyl;
    cyl.strips = static_cast<long long>(cycle.size());
    if (track_squares) {
      std::set<int> visited;
      for (int start : cycle) {
        int cur = start;
        for (char letter : word) {
          visited.insert(cur);
          if (letter == '1') {
            cur = frame.origami.sigma_h()(cur);
            visited.insert(cur);
          }
          cur = frame.origami.sigma_v()(cur);
        }
      }
      cyl.squares.assign(visited.begin(), visited.end());
    }
    cyl.cycle = std::move(cycle);
    dec.cylinders.push_back(std::move(cyl));
  }
  return dec;
}

}  // namespace stsurf
