#pragma once

#include <random>
#include <string>
#include <vector>

#include "bogomolov/group.hpp"

namespace bogo::testing {

using Action = std::vector<std::vector<Elem>>;

/// C_m with the generator of C_n acting by x -> r x.
Action cyclic_action(std::uint32_t m, std::uint32_t n, std::uint32_t r);
/// Inversion on C3 x C3 (index a + 3b) by C2.
Action inversion33();
/// C3 cycling the three involutions of C2 x C2 (index a + 2b): (a, b) -> (b, a + b).
Action klein_c3();

struct Instance {
  std::string name;
  GroupPtr n;
  GroupPtr g0;
  Action action;
  bool frobenius;
};

/// Semidirect products N : G0 with gcd(|N|, |G0|) = 1.
std::vector<Instance> coprime_instances();

/// Same group with the non-identity labels shuffled.
GroupPtr relabel(const GroupPtr& g, std::mt19937& rng);

}  // namespace bogo::testing
