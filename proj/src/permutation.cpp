#include "stsurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace stsurf {

int CycleType::fixed_point_count() const {
  return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
}

int CycleType::degree() const {
  int total = 0;
  for (int len : lengths) total += len;
  return total;
}

std::string to_string(const CycleType& type) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < type.lengths.size(); ++i) {
    if (i) out << ',';
    out << type.lengths[i];
  }
  out << ']';
  return out.str();
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  const int k = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int& v : images) {
    if (v < 1 || v > k) {
      throw NotABijection("image " + std::to_string(v) + " outside 1.." + std::to_string(k));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw NotABijection("value " + std::to_string(v) + " appears twice");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    v -= 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int a = cycle[j];
      if (a < 1 || a > degree) {
        throw NotABijection("point " + std::to_string(a) + " outside 1.." + std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(a - 1)]) {
        throw NotABijection("point " + std::to_string(a) + " appears in more than one cycle position; cycles must be disjoint");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      const int b = cycle[(j + 1) % cycle.size()];
      images[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
    }
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument(std::string("unexpected character '") + text[pos] +
                                    "' at offset " + std::to_string(pos));
      }
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000'000) throw std::invalid_argument("point label too large");
        ++pos;
      }
      cycle.push_back(static_cast<int>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1ULL) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      cycle.push_back(static_cast<int>(i) + 1);
      i = static_cast<std::size_t>(images_[i]);
    }
    if (include_fixed || cycle.size() > 1) result.push_back(std::move(cycle));
  }
  return result;
}

CycleType Permutation::cycle_type() const {
  CycleType type;
  for (const auto& c : cycles(true)) type.lengths.push_back(static_cast<int>(c.size()));
  std::sort(type.lengths.begin(), type.lengths.end(), std::greater<>());
  return type;
}

std::vector<int> Permutation::cycle_index() const {
  std::vector<int> index(images_.size(), -1);
  int next = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (index[start] >= 0) continue;
    std::size_t i = start;
    while (index[i] < 0) {
      index[i] = next;
      i = static_cast<std::size_t>(images_[i]);
    }
    ++next;
  }
  return index;
}

std::string Permutation::to_cycle_string(bool show_fixed) const {
  std::ostringstream out;
  const auto cs = cycles(show_fixed);
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ' ';
      out << c[j];
    }
    out << ')';
  }
  return out.str();
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& v : out) v += 1;
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  }
  return Permutation(std::move(out));
}

Permutation commutator(const Permutation& v, const Permutation& h) {
  if (v.degree() != h.degree()) throw DegreeMismatch("commutator of permutations of different degree");
  return v.inverse() * h.inverse() * v * h;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("orbit computation needs at least one generator");
  const int k = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != k) throw DegreeMismatch("generators have different degrees");
  }
  std::vector<Permutation> inverses;
  for (const auto& g : gens) inverses.push_back(g.inverse());
  std::vector<int> label(static_cast<std::size_t>(k), -1);
  std::vector<std::vector<int>> result;
  for (int start = 1; start <= k; ++start) {
    if (label[static_cast<std::size_t>(start - 1)] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<int> orbit;
    std::deque<int> queue{start};
    label[static_cast<std::size_t>(start - 1)] = id;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      orbit.push_back(x);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (int y : {gens[g](x), inverses[g](x)}) {
          if (label[static_cast<std::size_t>(y - 1)] < 0) {
            label[static_cast<std::size_t>(y - 1)] = id;
            queue.push_back(y);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool orbit_transitive(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("orbit computation needs at least one generator");
  const int k = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != k) throw DegreeMismatch("generators have different degrees");
  }
  // Finite group: closure under forward images alone reaches the whole orbit.
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::deque<int> queue{1};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const int y = g(x);
      if (!seen[static_cast<std::size_t>(y - 1)]) {
        seen[static_cast<std::size_t>(y - 1)] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == k;
}

}  // namespace stsurf
