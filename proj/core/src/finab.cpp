#include "bogomolov/finab.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bogo {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // Split into elementary divisors per prime, then rebuild the chain.
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  FinAbGroup g;
  for (auto d : orders) {
    if (d == 0) {
      ++g.free_rank_;
      continue;
    }
    for (auto [p, e] : factorize(d)) by_prime[p].push_back(e);
  }
  std::size_t len = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.rbegin(), exps.rend());
    len = std::max(len, exps.size());
  }
  // factors_[len-1] is the largest; the k-th largest factor collects the
  // k-th largest exponent of every prime.
  std::vector<std::uint64_t> chain(len, 1);
  for (auto& [p, exps] : by_prime)
    for (std::size_t k = 0; k < exps.size(); ++k) chain[len - 1 - k] *= ipow(p, exps[k]);
  g.factors_ = std::move(chain);
  return g;
}

FinAbGroup FinAbGroup::power(std::uint64_t n, std::size_t times) {
  return from_cyclic_orders(std::vector<std::uint64_t>(times, n));
}

std::uint64_t FinAbGroup::torsion_order() const {
  std::uint64_t r = 1;
  for (auto d : factors_) r *= d;
  return r;
}

std::vector<std::uint64_t> FinAbGroup::elementary_divisors() const {
  std::vector<std::uint64_t> out;
  for (auto d : factors_)
    for (auto [p, e] : factorize(d)) out.push_back(ipow(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<std::uint64_t> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  auto g = from_cyclic_orders(all);
  g.free_rank_ = free_rank_ + other.free_rank_;
  return g;
}

FinAbGroup FinAbGroup::torsion() const {
  FinAbGroup g = *this;
  g.free_rank_ = 0;
  return g;
}

FinAbGroup FinAbGroup::hom_to_cyclic(std::uint64_t m) const {
  std::vector<std::uint64_t> out;
  for (auto d : factors_) out.push_back(std::gcd(d, m));
  for (std::size_t i = 0; i < free_rank_; ++i) out.push_back(m);
  return from_cyclic_orders(out);
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  for (auto d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  if (free_rank_) {
    if (!s.empty()) s += " + ";
    s += "Z^" + std::to_string(free_rank_);
  }
  return s;
}

void to_json(nlohmann::json& j, const FinAbGroup& g) {
  j = nlohmann::json{{"invariant_factors", g.factors()}};
  if (g.free_rank()) j["free_rank"] = g.free_rank();
}

}  // namespace bogo
