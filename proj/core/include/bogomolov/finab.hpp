#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace bogo {

/// Finite(ly generated) abelian group in invariant-factor form
/// Z/d1 + ... + Z/dr + Z^f with 2 <= d1 | d2 | ... | dr.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Canonicalizes an arbitrary list of cyclic orders; entries 0 count as
  /// free summands, entries 1 are dropped.
  static FinAbGroup from_cyclic_orders(const std::vector<std::uint64_t>& orders);
  static FinAbGroup trivial() { return {}; }
  static FinAbGroup cyclic(std::uint64_t n) { return from_cyclic_orders({n}); }
  static FinAbGroup power(std::uint64_t n, std::size_t times);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }

  /// Order of the torsion part.
  std::uint64_t torsion_order() const;

  /// Elementary divisors (prime powers), sorted.
  std::vector<std::uint64_t> elementary_divisors() const;

  FinAbGroup direct_sum(const FinAbGroup& other) const;

  /// Drops the free part.
  FinAbGroup torsion() const;

  /// Hom(this, Z/m) for a finite group.
  FinAbGroup hom_to_cyclic(std::uint64_t m) const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::size_t free_rank_ = 0;
};

void to_json(nlohmann::json& j, const FinAbGroup& g);

/// Prime factorization of small positive integers, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace bogo
