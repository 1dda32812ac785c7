#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stsurf {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotABijection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cycle lengths of a permutation, sorted descending (fixed points included).
struct CycleType {
  std::vector<int> lengths;

  int cycle_count() const { return static_cast<int>(lengths.size()); }
  int fixed_point_count() const;
  int degree() const;
  /// Even iff degree - cycle_count is even.
  bool is_even() const { return (degree() - cycle_count()) % 2 == 0; }

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

std::string to_string(const CycleType& type);

/// A bijection of {1..k}. Labels are 1-based at every interface; storage is
/// 0-based. Immutable once built.
class Permutation {
 public:
  Permutation() : Permutation(identity(1)) {}

  static Permutation identity(int degree);
  /// images[i-1] = sigma(i).
  static Permutation from_images(std::vector<int> images);
  /// Disjoint cycles over {1..degree}; unmentioned points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  /// Parses disjoint-cycle notation such as "(1 2 3)(4,5)" or "()".
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  bool is_identity() const;
  bool is_even() const { return cycle_type().is_even(); }

  /// Cycles in order of their smallest element, each starting at that element.
  std::vector<std::vector<int>> cycles(bool include_fixed = true) const;
  CycleType cycle_type() const;
  /// For every point, the index of its cycle in cycles(true).
  std::vector<int> cycle_index() const;

  std::string to_cycle_string(bool show_fixed = false) const;
  std::vector<int> images() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation& a, const Permutation& b);
};

/// (a o b)(i) = a(b(i)): the right-hand permutation acts first.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// [v, h] = v^-1 o h^-1 o v o h.
Permutation commutator(const Permutation& v, const Permutation& h);

/// Orbits of the group generated by gens, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits(std::span<const Permutation> gens);

/// True iff the generated group has a single orbit on {1..k}.
bool orbit_transitive(std::span<const Permutation> gens);

}  // namespace stsurf
