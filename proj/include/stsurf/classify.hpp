#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stsurf/directions.hpp"
#include "stsurf/staircase.hpp"

namespace stsurf {

enum class Verdict { ErgodicAE, NotErgodicAE, Unknown };
std::string to_string(Verdict v);

/// A direction with exactly two cylinders in which every cylinder sees total
/// sum zero. Reported as evidence only.
struct TwoCylinderZeroSum {
  Slope slope;
  std::vector<long long> strips;
  std::vector<std::string> integrals;
  bool profiles_equal = false;  ///< same multiset of (length, value) pieces
};

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> justification;
  std::optional<Slope> single_cylinder;
  std::optional<TwoCylinderZeroSum> supplementary;
};

/// Applies the two automatic tests: a regular unshared endpoint on a cut of
/// every generator plus a single-cylinder direction gives ErgodicAE; a surface
/// in H(2) whose cut endpoints are all singular gives NotErgodicAE.
Classification classify_staircase(const StaircaseSpec& spec, long long q_max = 50);

struct Proposal {
  bool feasible = false;
  std::optional<StaircaseSpec> spec;
  std::string reason;
  std::vector<std::string> warnings;
  std::optional<Classification> classification;
};

/// Natural Z^d staircase with one +e_i / -e_i pair of parallel unit edges per
/// generator, each +e_i edge owning a regular vertex no other cut touches.
/// Throws DisconnectedSurface.
Proposal propose_staircase(const Origami& o, int d, long long q_max = 50);

}  // namespace stsurf
