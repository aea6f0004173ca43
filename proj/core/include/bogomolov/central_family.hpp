#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bogomolov/finab.hpp"
#include "bogomolov/group.hpp"
#include "bogomolov/howell.hpp"

namespace bogo {

inline constexpr std::uint64_t kDefaultPairCap = 1ULL << 24;

/// Quotient G = G~/H of the Schur cover G~ of Z/p^n1 + ... + Z/p^nt
/// (n1 >= ... >= nt) by a central subgroup H.
///
/// Elements are pairs (a; c): a holds abelian coordinates a_i mod p^{n_i};
/// c is a central vector over the pairs i<j (lexicographic), coordinate
/// (i,j) mod p^{n_j}. Central vectors are stored embedded in (Z/p^{n1})^K
/// (coordinate scaled by p^{n1-nj}) and reduced modulo H, which makes them
/// canonical.
class CentralFamily {
 public:
  using Abelian = std::vector<std::uint64_t>;
  using Central = linalg::ModRow;

  struct Element {
    Abelian a;
    Central c;
    friend bool operator==(const Element&, const Element&) = default;
  };

  /// `h` lists generators of H in unembedded central coordinates.
  CentralFamily(std::uint64_t p, std::vector<unsigned> exponents, std::vector<std::vector<std::uint64_t>> h,
                std::string name = "central_quotient", unsigned parameter = 0);

  static CentralFamily schur_cover(std::uint64_t p, std::vector<unsigned> exponents);
  /// H = <[s1,s2][s3,s4], [s1,s3][s4,s5], ..., [s1,s_{n+1}][s_{n+2},s_{n+3}]>, t = n+3, exponents 1.
  static CentralFamily saltman(std::uint64_t p, unsigned n);
  /// t = 4, exponents n, H = <[s1,s2][s3,s4]>.
  static CentralFamily thm54(std::uint64_t p, unsigned n);

  const std::string& name() const { return name_; }
  unsigned parameter() const { return parameter_; }
  std::uint64_t p() const { return p_; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  std::size_t rank() const { return exps_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  std::uint64_t pair_modulus(std::size_t k) const { return pair_mod_[k]; }
  std::uint64_t coordinate_modulus(std::size_t i) const { return coord_mod_[i]; }
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  /// Howell basis of the embedded H.
  const std::vector<linalg::ModRow>& h_basis() const { return h_span_.basis(); }
  /// Generators of H as given, unembedded.
  const std::vector<std::vector<std::uint64_t>>& h_generators() const { return h_gens_; }
  std::uint64_t ambient_modulus() const { return ambient_; }

  /// p-adic logarithm of |G| (|G| itself may exceed 64 bits).
  unsigned log_order() const;
  linalg::BigInt order() const;
  /// Order of the abelian quotient G/Zbar = prod p^{n_i}.
  std::uint64_t abelian_size() const { return abelian_size_; }

  /// Zbar = (central module) / H.
  FinAbGroup central_invariants() const;
  /// Gamma = G / Zbar.
  FinAbGroup quotient_invariants() const;
  /// H in its own right.
  FinAbGroup h_invariants() const;

  /// Coordinate (i,j) = -a_j b_i mod p^{n_j}, unembedded.
  std::vector<std::uint64_t> cover_cocycle(const Abelian& a, const Abelian& b) const;
  /// eps(a,b) - eps(b,a) as a canonical central element.
  Central commutator_form(const Abelian& a, const Abelian& b) const;

  Central embed(const std::vector<std::uint64_t>& unembedded) const;
  Central reduce(Central c) const;
  bool central_is_zero(const Central& c) const;

  Element identity() const;
  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element commutator(const Element& x, const Element& y) const;
  Element generator(std::size_t i) const;

  /// Little-endian mixed-radix index of abelian coordinates (a_1 least significant).
  std::uint64_t abelian_index(const Abelian& a) const;
  Abelian abelian_from_index(std::uint64_t idx) const;
  Abelian add(const Abelian& a, const Abelian& b) const;
  Abelian scale(const Abelian& a, std::uint64_t k) const;

  /// Radical {a : beta(a, e_k) = 0 for all k}; the center is radical x Zbar.
  std::vector<Abelian> radical() const;

  /// Canonical central elements, sorted, starting with zero.
  std::vector<Central> central_elements() const;

  struct Table {
    GroupPtr group;
    std::vector<Element> elements;  // index = abelian_index + abelian_size * central position
  };
  /// Materializes the Cayley table; throws SizeError beyond the cap.
  Table to_table(std::size_t cap = kDefaultOrderCap) const;

 private:
  std::uint64_t p_;
  std::vector<unsigned> exps_;
  std::vector<std::vector<std::uint64_t>> h_gens_;
  std::string name_;
  unsigned parameter_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::uint64_t> pair_mod_, coord_mod_, scale_;
  std::uint64_t ambient_;
  std::uint64_t abelian_size_;
  linalg::ModSpan h_span_;
};

/// Outcome of the exhaustive commuting-pair search.
struct WedgeSearch {
  std::uint64_t pairs_enumerated = 0;
  std::uint64_t commuting_pairs = 0;
  std::optional<std::pair<CentralFamily::Abelian, CentralFamily::Abelian>> witness;
};

/// Enumerates all pairs (a, b) of abelian coordinates in little-endian
/// index order and returns the first pair with beta(a, b) = 0 in Zbar
/// generating a non-cyclic subgroup of G/Zbar.
WedgeSearch wedge_commuting_search(const CentralFamily& f, std::uint64_t pair_cap = kDefaultPairCap);

/// Whether <a, b> is cyclic in the abelian quotient.
bool cyclic_pair(const CentralFamily& f, const CentralFamily::Abelian& a, const CentralFamily::Abelian& b);

}  // namespace bogo
