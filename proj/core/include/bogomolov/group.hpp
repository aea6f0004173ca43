#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bogomolov/finab.hpp"

namespace bogo {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 5000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by its Cayley table. Elements are dense indices
/// 0..order-1; the identity is always element 0.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, associativity: exhaustive
  /// up to order 64, a fixed pseudo-random sample beyond) and relabels so
  /// the identity becomes 0, keeping the relative order of the others.
  static GroupPtr from_table(const std::vector<std::vector<Elem>>& rows, std::size_t cap = kDefaultOrderCap);

  /// Table assumed valid with identity 0 (used by internal constructions).
  static GroupPtr trusted(std::size_t order, std::vector<Elem> table);

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// g h g^-1 h^-1
  Elem commutator(Elem g, Elem h) const { return mul(mul(g, h), mul(inv(g), inv(h))); }
  std::uint64_t element_order(Elem a) const { return orders_[a]; }
  std::uint64_t exponent() const;
  bool is_abelian() const;

  /// Greedy generating set: repeatedly adds the element of largest order
  /// (smallest index on ties) outside the current subgroup.
  const std::vector<Elem>& generators() const { return gens_; }

  /// Sorted census of element orders; used as an isomorphism surrogate.
  std::vector<std::uint64_t> order_census() const;

  const std::vector<Elem>& table() const { return table_; }

 private:
  FiniteGroup(std::size_t n, std::vector<Elem> table);

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<Elem> gens_;
};

/// Subgroup of a table group: sorted element list plus generators.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elements;
  std::vector<Elem> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// A subgroup materialized as a group of its own, with the embedding
/// local index -> parent element (local order follows `elements`).
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Elem> embedding;
};

/// Permutations are 0-based image vectors of equal degree.
GroupPtr from_permutations(const std::vector<std::vector<std::uint32_t>>& gens, std::size_t cap = kDefaultOrderCap);

GroupPtr cyclic_group(std::size_t n);
GroupPtr trivial_group();

struct Product {
  GroupPtr group;
  Subgroup left;   // first factor (or N for semidirect products)
  Subgroup right;  // second factor (or the complement G0)
};

/// Element (a, b) has index a + |G1| * b.
Product direct_product(const GroupPtr& g1, const GroupPtr& g2, std::size_t cap = kDefaultOrderCap);

/// action[g] is the automorphism x -> ^g x of N for every g in G0.
/// Element (s, g) has index s + |N| * g and (s1,g1)(s2,g2) = (s1 ^g1 s2, g1 g2).
Product semidirect_product(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action,
                           std::size_t cap = kDefaultOrderCap);

/// Extends automorphisms given on a generating list of G0 to all of G0.
/// Throws InputError when the assignment does not define a homomorphism.
std::vector<std::vector<Elem>> extend_action(const GroupPtr& n, const GroupPtr& g0, const std::vector<Elem>& gens,
                                             const std::vector<std::vector<Elem>>& gen_auts);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& s);
Subgroup whole_group(const GroupPtr& g);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
bool is_normal(const Subgroup& h);
Subgroup conjugate(const Subgroup& h, Elem g);
EmbeddedGroup as_group(const Subgroup& h);

/// Coordinates of G^ab = Z/d_1 + ... + Z/d_r (d_i as in `invariants`).
struct Abelianization {
  FinAbGroup invariants;
  std::vector<std::vector<std::uint64_t>> coords;  // per element of G, one entry per factor
};
Abelianization abelianization(const GroupPtr& g);

struct GroupInvariants {
  Subgroup center;
  Subgroup derived;
  std::uint64_t exponent;
  FinAbGroup abelianization;
};
GroupInvariants group_invariants(const GroupPtr& g);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;  // element of G -> coset index
  std::vector<Elem> representatives;  // coset index -> least element
};
/// Cosets are labeled by their least element, in increasing order.
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

/// Maximal bicyclic subgroups up to conjugacy (or all distinct bicyclic
/// subgroups when `reduce` is false), sorted by decreasing order then
/// element list.
std::vector<Subgroup> bicyclic_subgroups(const GroupPtr& g, bool reduce = true);

Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p);

/// Every subgroup of G, sorted by order then element list.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// One representative (the first in input order) per conjugacy class.
std::vector<Subgroup> conjugacy_representatives(const std::vector<Subgroup>& subgroups);

}  // namespace bogo
