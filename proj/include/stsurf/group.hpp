#pragma once

#include <string>
#include <vector>

#include "stsurf/numeric.hpp"

namespace stsurf {

/// Z^d with 1 <= d <= 8, or Z/m with m >= 2.
struct GroupDescriptor {
  int rank = 1;            ///< d for Z^d; 1 for Z/m
  long long modulus = 0;   ///< 0 for Z^d

  static GroupDescriptor free(int d);
  static GroupDescriptor cyclic(long long m);
  /// "Z", "Z^3", "Z/5"
  static GroupDescriptor parse(const std::string& text);

  bool is_cyclic() const { return modulus != 0; }
  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

class GroupValue {
 public:
  GroupValue() = default;
  static GroupValue zero(const GroupDescriptor& g);
  static GroupValue make(const GroupDescriptor& g, std::vector<long long> components);
  /// Unit vector e_i (1-based) of Z^d, or 1 in Z/m when i == 1.
  static GroupValue unit(const GroupDescriptor& g, int i);
  /// "[1,-2]" or "3"; checked against g.
  static GroupValue parse(const GroupDescriptor& g, const std::string& text);

  const GroupDescriptor& group() const { return group_; }
  const std::vector<long long>& components() const { return c_; }
  bool is_zero() const;
  /// L1 norm on Z^d, distance to 0 on the cycle for Z/m.
  long long norm() const;
  std::string to_string() const;

  GroupValue operator+(const GroupValue& o) const;
  GroupValue operator-(const GroupValue& o) const;
  GroupValue operator-() const;
  GroupValue operator*(long long n) const;
  GroupValue& operator+=(const GroupValue& o) { return *this = *this + o; }
  GroupValue& operator-=(const GroupValue& o) { return *this = *this - o; }

  friend bool operator==(const GroupValue&, const GroupValue&) = default;

 private:
  GroupValue(GroupDescriptor g, std::vector<long long> c);
  void check_same(const GroupValue& o) const;

  GroupDescriptor group_;
  std::vector<long long> c_{0};
};

/// Exact rational combination sum_j r_j f_j, one rational per component.
/// For Z/m the residues are lifted to 0..m-1 and the result is zero iff it is
/// an integer multiple of m.
struct RationalCombination {
  GroupDescriptor group;
  std::vector<Rational> components;

  static RationalCombination zero(const GroupDescriptor& g);
  void add(const Rational& r, const GroupValue& f);
  bool is_zero() const;
  std::string to_string() const;
};

}  // namespace stsurf
