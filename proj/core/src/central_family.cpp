#include "bogomolov/central_family.hpp"

#include <algorithm>
#include <map>

#include "bogomolov/errors.hpp"

namespace bogo {

using linalg::ModRow;

namespace {

std::size_t pair_count(std::size_t t) { return t * (t - 1) / 2; }

}  // namespace

CentralFamily::CentralFamily(std::uint64_t p, std::vector<unsigned> exponents,
                             std::vector<std::vector<std::uint64_t>> h, std::string name, unsigned parameter)
    : p_(p),
      exps_(std::move(exponents)),
      h_gens_(std::move(h)),
      name_(std::move(name)),
      parameter_(parameter),
      ambient_(exps_.empty() ? 2 : ipow(p, exps_.empty() ? 1 : exps_[0])),
      h_span_(pair_count(exps_.size()), ambient_ < 2 ? 2 : ambient_) {
  if (!is_prime(p_)) throw InputError("central family: p must be prime");
  if (exps_.empty()) throw InputError("central family: at least one exponent required");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 1) throw InputError("central family: exponents must be positive");
    if (i && exps_[i] > exps_[i - 1]) throw InputError("central family: exponents must be non-increasing");
  }
  if (ambient_ > (1ULL << 31)) throw SizeError("central family: p^n1 exceeds 2^31");
  abelian_size_ = 1;
  for (auto e : exps_) {
    coord_mod_.push_back(ipow(p_, e));
    if (abelian_size_ > (1ULL << 40)) throw SizeError("central family: abelian part too large");
    abelian_size_ *= coord_mod_.back();
  }
  for (std::size_t i = 0; i < exps_.size(); ++i)
    for (std::size_t j = i + 1; j < exps_.size(); ++j) {
      pairs_.emplace_back(i, j);
      pair_mod_.push_back(ipow(p_, exps_[j]));
      scale_.push_back(ipow(p_, exps_[0] - exps_[j]));
    }
  for (const auto& g : h_gens_) {
    if (g.size() != pairs_.size()) throw InputError("central family: H generator has wrong length");
    h_span_.insert(embed(g));
  }
}

CentralFamily CentralFamily::schur_cover(std::uint64_t p, std::vector<unsigned> exponents) {
  return CentralFamily(p, std::move(exponents), {}, "schur_cover");
}

CentralFamily CentralFamily::saltman(std::uint64_t p, unsigned n) {
  if (n < 1) throw InputError("saltman family: n must be positive");
  const std::size_t t = n + 3;
  std::vector<unsigned> exps(t, 1);
  CentralFamily probe(p, exps, {});
  std::vector<std::vector<std::uint64_t>> h;
  for (std::size_t s = 2; s <= n + 1; ++s) {
    std::vector<std::uint64_t> v(probe.pairs().size(), 0);
    v[probe.pair_index(0, s - 1)] = 1;
    v[probe.pair_index(s, s + 1)] = 1;
    h.push_back(std::move(v));
  }
  return CentralFamily(p, exps, h, "saltman", n);
}

CentralFamily CentralFamily::thm54(std::uint64_t p, unsigned n) {
  if (n < 1) throw InputError("thm54 family: n must be positive");
  std::vector<unsigned> exps(4, n);
  CentralFamily probe(p, exps, {});
  std::vector<std::uint64_t> v(6, 0);
  v[probe.pair_index(0, 1)] = 1;
  v[probe.pair_index(2, 3)] = 1;
  return CentralFamily(p, exps, {v}, "thm54", n);
}

std::size_t CentralFamily::pair_index(std::size_t i, std::size_t j) const {
  const std::size_t t = exps_.size();
  if (!(i < j && j < t)) throw InputError("pair_index: need i < j < t");
  // Pairs (i, j) lexicographic: rows 0..i-1 contribute (t-1) + ... + (t-i).
  return i * (2 * t - i - 1) / 2 + (j - i - 1);
}

unsigned CentralFamily::log_order() const {
  unsigned s = 0;
  for (auto e : exps_) s += e;
  for (auto [i, j] : pairs_) s += exps_[j];
  return s - h_span_.order_valuation(p_);
}

linalg::BigInt CentralFamily::order() const {
  linalg::BigInt r = 1;
  for (unsigned i = 0; i < log_order(); ++i) r *= p_;
  return r;
}

FinAbGroup CentralFamily::central_invariants() const {
  std::vector<ModRow> units;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    ModRow v(pairs_.size(), 0);
    v[k] = scale_[k] % ambient_;
    units.push_back(std::move(v));
  }
  return linalg::subquotient_invariants(units, h_basis(), pairs_.size(), ambient_);
}

FinAbGroup CentralFamily::quotient_invariants() const { return FinAbGroup::from_cyclic_orders(coord_mod_); }

FinAbGroup CentralFamily::h_invariants() const {
  return linalg::subquotient_invariants(h_basis(), {}, pairs_.size(), ambient_);
}

std::vector<std::uint64_t> CentralFamily::cover_cocycle(const Abelian& a, const Abelian& b) const {
  std::vector<std::uint64_t> e(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    auto [i, j] = pairs_[k];
    const std::uint64_t m = pair_mod_[k];
    e[k] = (m - (a[j] % m) * (b[i] % m) % m) % m;
  }
  return e;
}

CentralFamily::Central CentralFamily::commutator_form(const Abelian& a, const Abelian& b) const {
  std::vector<std::uint64_t> v(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    auto [i, j] = pairs_[k];
    const std::uint64_t m = pair_mod_[k];
    v[k] = ((a[i] % m) * (b[j] % m) % m + m - (a[j] % m) * (b[i] % m) % m) % m;
  }
  return reduce(embed(v));
}

CentralFamily::Central CentralFamily::embed(const std::vector<std::uint64_t>& u) const {
  if (u.size() != pairs_.size()) throw InputError("central vector has wrong length");
  Central c(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) c[k] = (u[k] % pair_mod_[k]) * scale_[k] % ambient_;
  return c;
}

CentralFamily::Central CentralFamily::reduce(Central c) const {
  if (pairs_.empty()) return c;
  return h_span_.reduce(std::move(c));
}

bool CentralFamily::central_is_zero(const Central& c) const {
  for (auto x : reduce(c))
    if (x) return false;
  return true;
}

CentralFamily::Element CentralFamily::identity() const {
  return {Abelian(exps_.size(), 0), Central(pairs_.size(), 0)};
}

CentralFamily::Abelian CentralFamily::add(const Abelian& a, const Abelian& b) const {
  Abelian r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % coord_mod_[i];
  return r;
}

CentralFamily::Abelian CentralFamily::scale(const Abelian& a, std::uint64_t k) const {
  Abelian r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * (k % coord_mod_[i])) % coord_mod_[i];
  return r;
}

CentralFamily::Element CentralFamily::mul(const Element& x, const Element& y) const {
  Central c = embed(cover_cocycle(x.a, y.a));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (c[k] + x.c[k] + y.c[k]) % ambient_;
  return {add(x.a, y.a), reduce(std::move(c))};
}

CentralFamily::Element CentralFamily::inv(const Element& x) const {
  Abelian na(x.a.size());
  for (std::size_t i = 0; i < na.size(); ++i) na[i] = (coord_mod_[i] - x.a[i]) % coord_mod_[i];
  Central e = embed(cover_cocycle(x.a, na));
  Central c(pairs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (2 * ambient_ - x.c[k] - e[k]) % ambient_;
  return {na, reduce(std::move(c))};
}

CentralFamily::Element CentralFamily::commutator(const Element& x, const Element& y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

CentralFamily::Element CentralFamily::generator(std::size_t i) const {
  Element e = identity();
  e.a.at(i) = 1;
  return e;
}

std::uint64_t CentralFamily::abelian_index(const Abelian& a) const {
  std::uint64_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx += (a[i] % coord_mod_[i]) * radix;
    radix *= coord_mod_[i];
  }
  return idx;
}

CentralFamily::Abelian CentralFamily::abelian_from_index(std::uint64_t idx) const {
  Abelian a(exps_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = idx % coord_mod_[i];
    idx /= coord_mod_[i];
  }
  return a;
}

std::vector<CentralFamily::Abelian> CentralFamily::radical() const {
  std::vector<Abelian> out;
  std::vector<Abelian> basis;
  for (std::size_t k = 0; k < exps_.size(); ++k) basis.push_back(generator(k).a);
  for (std::uint64_t idx = 0; idx < abelian_size_; ++idx) {
    Abelian a = abelian_from_index(idx);
    bool central = true;
    for (const auto& e : basis)
      if (!central_is_zero(commutator_form(a, e))) {
        central = false;
        break;
      }
    if (central) out.push_back(std::move(a));
  }
  return out;
}

std::vector<CentralFamily::Central> CentralFamily::central_elements() const {
  std::map<Central, int> seen;
  std::vector<std::uint64_t> u(pairs_.size(), 0);
  for (;;) {
    seen.emplace(reduce(embed(u)), 0);
    std::size_t k = 0;
    while (k < u.size() && ++u[k] == pair_mod_[k]) u[k++] = 0;
    if (k == u.size()) break;
  }
  std::vector<Central> out;
  for (auto& [c, unused] : seen) out.push_back(c);
  return out;
}

CentralFamily::Table CentralFamily::to_table(std::size_t cap) const {
  if (log_order() > 40 || order() > cap)
    throw SizeError("central family of order " + order().str() + " exceeds the table cap " + std::to_string(cap));
  auto zs = central_elements();
  std::map<Central, std::size_t> zindex;
  for (std::size_t i = 0; i < zs.size(); ++i) zindex.emplace(zs[i], i);
  const std::size_t na = abelian_size_, nz = zs.size(), n = na * nz;
  std::vector<Abelian> as(na);
  for (std::size_t i = 0; i < na; ++i) as[i] = abelian_from_index(i);
  std::vector<std::size_t> zadd(nz * nz), eps(na * na);
  for (std::size_t i = 0; i < nz; ++i)
    for (std::size_t j = 0; j < nz; ++j) {
      Central c(pairs_.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = (zs[i][k] + zs[j][k]) % ambient_;
      zadd[i * nz + j] = zindex.at(reduce(std::move(c)));
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) eps[i * na + j] = zindex.at(reduce(embed(cover_cocycle(as[i], as[j]))));
  std::vector<std::size_t> aadd(na * na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) aadd[i * na + j] = abelian_index(add(as[i], as[j]));
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xa = x % na, xz = x / na;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t ya = y % na, yz = y / na;
      std::size_t z = zadd[zadd[xz * nz + yz] * nz + eps[xa * na + ya]];
      t[x * n + y] = static_cast<Elem>(aadd[xa * na + ya] + na * z);
    }
  }
  Table out;
  out.group = FiniteGroup::trusted(n, std::move(t));
  out.elements.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.elements[x] = {as[x % na], zs[x / na]};
  return out;
}

bool cyclic_pair(const CentralFamily& f, const CentralFamily::Abelian& a, const CentralFamily::Abelian& b) {
  auto in_span = [&](const CentralFamily::Abelian& x, const CentralFamily::Abelian& g) {
    CentralFamily::Abelian cur(g.size(), 0);
    do {
      if (cur == x) return true;
      cur = f.add(cur, g);
    } while (std::any_of(cur.begin(), cur.end(), [](auto v) { return v != 0; }));
    return false;
  };
  return in_span(a, b) || in_span(b, a);
}

WedgeSearch wedge_commuting_search(const CentralFamily& f, std::uint64_t pair_cap) {
  const std::uint64_t s = f.abelian_size();
  if (s > (1ULL << 32) || s * s > pair_cap)
    throw SizeError("wedge search: " + std::to_string(s) + "^2 pairs exceed the cap " + std::to_string(pair_cap));
  std::vector<CentralFamily::Abelian> as(s);
  for (std::uint64_t i = 0; i < s; ++i) as[i] = f.abelian_from_index(i);
  WedgeSearch w;
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j) {
      ++w.pairs_enumerated;
      if (!f.central_is_zero(f.commutator_form(as[i], as[j]))) continue;
      ++w.commuting_pairs;
      if (!w.witness && !cyclic_pair(f, as[i], as[j])) w.witness = std::make_pair(as[i], as[j]);
    }
  return w;
}

}  // namespace bogo
