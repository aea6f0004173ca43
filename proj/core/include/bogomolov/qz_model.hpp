#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bogomolov/cochain.hpp"
#include "bogomolov/group.hpp"
#include "bogomolov/howell.hpp"

namespace bogo {

/// Edge coordinates for normalized 2-cocycles over Z/m.
///
/// Fix the greedy generating set S of G and the breadth-first tree from the
/// identity. A normalized cocycle f is determined by its edge values
/// f(g, s), g != 1, s in S, through f(g, hs) = f(g, h) + f(gh, s) - f(h, s).
/// Edge vectors of cocycles are exactly the solutions of the same identity
/// along the non-tree edges (h, s).
class EdgeModel {
 public:
  EdgeModel(GroupPtr group, std::uint64_t modulus);

  const GroupPtr& group() const { return group_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<Elem>& generators() const { return gens_; }
  std::size_t unknowns() const { return unknowns_; }
  std::size_t edge(Elem g, std::size_t s) const { return (g - 1) * gens_.size() + s; }

  /// f(g, h) as a linear form in the edge values.
  const std::uint32_t* expression(Elem g, Elem h) const { return &expr_[(g * n_ + h) * unknowns_]; }
  std::uint64_t evaluate(Elem g, Elem h, const linalg::ModRow& z) const;

  /// Howell basis of the cocycle edge vectors.
  std::vector<linalg::ModRow> cocycles() const;
  /// delta of the indicator 1-cochains.
  std::vector<linalg::ModRow> coboundaries() const;
  /// Carry cocycles of a generating set of Hom(G, Z/m).
  std::vector<linalg::ModRow> bocksteins() const;

  linalg::ModRow edge_vector(const Cochain& c) const;
  Cochain expand(const linalg::ModRow& z) const;

 private:
  GroupPtr group_;
  std::uint64_t modulus_;
  std::size_t n_;
  std::vector<Elem> gens_;
  std::size_t unknowns_;
  std::vector<Elem> parent_;
  std::vector<std::size_t> via_;
  std::vector<std::uint32_t> expr_;
};

/// A linear map on row vectors together with a target submodule.
struct LinearCondition {
  std::function<linalg::ModRow(const linalg::ModRow&)> map;
  std::size_t target_dim;
  std::vector<linalg::ModRow> target;
};

/// Generators of { x in span(start) : map_i(x) in span(target_i) for all i }.
std::vector<linalg::ModRow> pullback_intersection(std::vector<linalg::ModRow> start,
                                                  const std::vector<LinearCondition>& conditions,
                                                  std::size_t dim, std::uint64_t modulus);

/// Carry cocycle of chi: (rep chi(g) + rep chi(h) - rep chi(gh)) / m.
Cochain bockstein(const GroupPtr& g, const std::vector<std::uint64_t>& chi, std::uint64_t modulus);

/// Hom(G, Z/m) generators as value vectors indexed by element.
std::vector<std::vector<std::uint64_t>> hom_generators(const GroupPtr& g, std::uint64_t modulus);

}  // namespace bogo
