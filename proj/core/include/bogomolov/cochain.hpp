#pragma once

#include <cstdint>
#include <vector>

#include "bogomolov/group.hpp"

namespace bogo {

/// Normalized cochain of degree 1, 2 or 3 with values in Z/m (trivial
/// action). Values are stored for non-identity tuples only, row-major in
/// (g-1, h-1, ...).
class Cochain {
 public:
  Cochain(GroupPtr group, unsigned degree, std::uint64_t modulus);

  const GroupPtr& group() const { return group_; }
  unsigned degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  std::vector<std::uint64_t>& data() { return values_; }

  std::uint64_t operator()(Elem g) const;
  std::uint64_t operator()(Elem g, Elem h) const;
  std::uint64_t operator()(Elem g, Elem h, Elem k) const;

  void set(Elem g, std::uint64_t v);
  void set(Elem g, Elem h, std::uint64_t v);

  bool is_zero() const;
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(std::uint64_t k) const;
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.group_ == b.group_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  std::size_t index(Elem g, Elem h = 1, Elem k = 1) const;

  GroupPtr group_;
  unsigned degree_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> values_;
};

/// Bar differential for degree 1 or 2.
Cochain differential(const Cochain& f);

/// Restriction to a subgroup materialized with as_group().
Cochain restrict_to(const Cochain& c, const EmbeddedGroup& a);

/// Pullback along a surjection G -> Q given elementwise.
Cochain inflate(const Cochain& c, const GroupPtr& g, const std::vector<Elem>& projection);

/// Transfer from H (materialized with as_group, parent G) to G using the
/// right transversal of least coset elements.
Cochain corestrict(const Cochain& c, const EmbeddedGroup& h, const GroupPtr& g);

/// (^g a)(t1, t2) = a(g^-1 t1 g, g^-1 t2 g) for a cochain on a normal
/// subgroup N (materialized with as_group) and g in the parent group.
Cochain conj_action(const Cochain& c, const EmbeddedGroup& n, const GroupPtr& parent, Elem g);

}  // namespace bogo
