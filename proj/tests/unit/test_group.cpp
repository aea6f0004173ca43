#include <map>

#include "bogomolov/errors.hpp"
#include "bogomolov/group.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace bogo;
using namespace bogo::testing;

namespace {

std::map<std::uint64_t, std::size_t> census(const GroupPtr& g) {
  std::map<std::uint64_t, std::size_t> m;
  for (Elem x = 0; x < g->order(); ++x) ++m[g->element_order(x)];
  return m;
}

}  // namespace

TEST_CASE("permutation closure") {
  GroupPtr s3 = from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  CHECK(census(s3) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(symmetric(4)->order() == 24);
  CHECK(alternating4()->order() == 12);
  CHECK_THROWS_AS(from_permutations({{0, 0, 2}}), InputError);
  CHECK_THROWS_AS(from_permutations({{1, 0, 2}}, 1), SizeError);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), InputError);
  // Identity not at 0 gets relabelled.
  GroupPtr g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  CHECK(g->order() == 2);
  CHECK(g->mul(0, 1) == 1);
}

TEST_CASE("group axioms on corpus constructions") {
  for (const auto& [name, g] : b0_corpus()) {
    CAPTURE(name);
    const std::size_t n = g->order();
    for (Elem a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(0, a) == a);
    }
    CHECK(n % g->exponent() == 0);
  }
  CHECK(census(dicyclic(2)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(census(dihedral(4)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(census(metacyclic(8, 2, 0, 3)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 5}, {4, 6}, {8, 4}});
  CHECK(heisenberg(3)->exponent() == 3);
  CHECK(metacyclic(9, 3, 0, 4)->exponent() == 9);
}

TEST_CASE("center, derived subgroup and abelianization") {
  GroupPtr d4 = dihedral(4);
  CHECK(center(d4).order() == 2);
  CHECK(derived_subgroup(d4).order() == 2);
  CHECK(abelianization(d4).invariants.factors() == std::vector<std::uint64_t>{2, 2});
  CHECK(abelianization(symmetric(3)).invariants.factors() == std::vector<std::uint64_t>{2});
  CHECK(abelianization(alternating4()).invariants.factors() == std::vector<std::uint64_t>{3});
  CHECK(abelianization(abelian({4, 6})).invariants.factors() == std::vector<std::uint64_t>{2, 12});
  CHECK(center(heisenberg(3)).order() == 3);
  CHECK(derived_subgroup(symmetric(4)).order() == 12);
  // Coordinates are a homomorphism onto the invariants.
  GroupPtr g = metacyclic(8, 2, 0, 5);
  Abelianization ab = abelianization(g);
  const auto& d = ab.invariants.factors();
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem y = 0; y < g->order(); ++y)
      for (std::size_t i = 0; i < d.size(); ++i)
        CHECK((ab.coords[x][i] + ab.coords[y][i]) % d[i] == ab.coords[g->mul(x, y)][i]);
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(dihedral(4)).size() == 10);
  CHECK(all_subgroups(dicyclic(2)).size() == 6);
  CHECK(all_subgroups(alternating4()).size() == 10);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(conjugacy_representatives(all_subgroups(symmetric(4))).size() == 11);
  CHECK(conjugacy_representatives(all_subgroups(dihedral(4))).size() == 8);
}

TEST_CASE("normality, quotients and Sylow subgroups") {
  GroupPtr s4 = symmetric(4);
  Subgroup a4 = derived_subgroup(s4);
  CHECK(is_normal(a4));
  Quotient q = quotient_group(s4, a4);
  CHECK(q.group->order() == 2);
  for (Elem x = 0; x < s4->order(); ++x)
    for (Elem y = 0; y < s4->order(); ++y) CHECK(q.projection[s4->mul(x, y)] == q.group->mul(q.projection[x], q.projection[y]));
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(!is_normal(sylow_subgroup(s4, 3)));
  Subgroup c = subgroup_generated(s4, {1});
  CHECK(conjugate(c, 2).order() == c.order());
}

TEST_CASE("bicyclic subgroups") {
  // C2^3: the maximal bicyclic subgroups are the seven Klein four-subgroups.
  auto b = bicyclic_subgroups(abelian({2, 2, 2}));
  CHECK(b.size() == 7);
  for (const auto& s : b) CHECK(s.order() == 4);
  // Q8 is covered by its three cyclic subgroups of order 4, each normal.
  auto q = bicyclic_subgroups(dicyclic(2));
  CHECK(q.size() == 3);
  // Abelian bicyclic groups are their own unique maximal bicyclic subgroup.
  CHECK(bicyclic_subgroups(abelian({4, 2})).size() == 1);
  // Without reduction every distinct bicyclic subgroup is listed.
  CHECK(bicyclic_subgroups(abelian({2, 2}), false).size() == 5);
}

TEST_CASE("direct and semidirect products") {
  Product p = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(p.group->order() == 6);
  CHECK(p.group->is_abelian());
  GroupPtr c3 = cyclic_group(3), c2 = cyclic_group(2);
  Product s = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(!s.group->is_abelian());
  CHECK_THROWS_AS(semidirect_product(c3, c2, {{0, 1, 2}, {0, 1, 1}}), InputError);
  CHECK_THROWS_AS(extend_action(c3, cyclic_group(4), {1}, {{0, 2, 1, 0}}), InputError);
  auto act = extend_action(c3, cyclic_group(4), {1}, {{0, 2, 1}});
  CHECK(act[2] == std::vector<Elem>{0, 1, 2});
}
