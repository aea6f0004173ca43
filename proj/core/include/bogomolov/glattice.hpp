#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "bogomolov/group.hpp"

namespace bogo {

/// Square integer matrix, row-major rows. Acts on column vectors.
using LatticeMatrix = std::vector<std::vector<std::int64_t>>;

LatticeMatrix identity_matrix(std::size_t r);
/// Throws SizeError on int64 overflow.
LatticeMatrix mat_mul(const LatticeMatrix& a, const LatticeMatrix& b);

/// Z^r with a left action of a table group: g . v = action(g) v.
class GLattice {
 public:
  GLattice() = default;

  /// Extends the generator matrices to every element and checks that the
  /// result is a homomorphism into GL_r(Z) (exhaustively over G x G).
  static GLattice from_generators(GroupPtr g, std::size_t rank, const std::vector<Elem>& gens,
                                  const std::vector<LatticeMatrix>& mats);
  /// One matrix per element; same checks.
  static GLattice from_element_map(GroupPtr g, std::size_t rank, std::vector<LatticeMatrix> all);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const LatticeMatrix& action(Elem g) const { return action_[g]; }

  nlohmann::json to_json() const;

 private:
  GLattice(GroupPtr g, std::size_t rank, std::vector<LatticeMatrix> all);

  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<LatticeMatrix> action_;
};

/// Z[G0/H], basis the left cosets xH ordered by least element.
GLattice perm_lattice(const GroupPtr& g0, const Subgroup& h);
GLattice regular_lattice(const GroupPtr& g0);
GLattice trivial_lattice(const GroupPtr& g0, std::size_t rank = 1);
/// Rank one, g acting by sign(g) in {+1, -1}; throws InputError unless sign is a homomorphism.
GLattice character_lattice(const GroupPtr& g0, const std::vector<int>& sign);

}  // namespace bogo
