#include "bogomolov/qz_model.hpp"

#include <numeric>

#include "bogomolov/errors.hpp"

namespace bogo {

using linalg::ModRow;
using linalg::ModSpan;

EdgeModel::EdgeModel(GroupPtr group, std::uint64_t modulus)
    : group_(std::move(group)), modulus_(modulus), n_(group_->order()), gens_(group_->generators()) {
  if (modulus_ < 2 || modulus_ > (1ULL << 31)) throw InputError("cohomology modulus must lie in [2, 2^31]");
  unknowns_ = (n_ - 1) * gens_.size();
  const auto& g = *group_;
  parent_.assign(n_, 0);
  via_.assign(n_, 0);
  std::vector<Elem> order{0};
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Elem y = g.mul(order[i], gens_[s]);
      if (!seen[y]) {
        seen[y] = 1;
        parent_[y] = order[i];
        via_[y] = s;
        order.push_back(y);
      }
    }
  expr_.assign(n_ * n_ * unknowns_, 0);
  const std::uint64_t m = modulus_;
  for (Elem a = 1; a < n_; ++a)
    for (std::size_t i = 1; i < order.size(); ++i) {
      Elem h = order[i], p = parent_[h];
      std::size_t s = via_[h];
      std::uint32_t* dst = &expr_[(a * n_ + h) * unknowns_];
      const std::uint32_t* src = &expr_[(a * n_ + p) * unknowns_];
      std::copy(src, src + unknowns_, dst);
      Elem ap = g.mul(a, p);
      if (ap != 0) dst[edge(ap, s)] = static_cast<std::uint32_t>((dst[edge(ap, s)] + 1) % m);
      if (p != 0) dst[edge(p, s)] = static_cast<std::uint32_t>((dst[edge(p, s)] + m - 1) % m);
    }
}

std::uint64_t EdgeModel::evaluate(Elem g, Elem h, const ModRow& z) const {
  if (g == 0 || h == 0) return 0;
  const std::uint32_t* e = expression(g, h);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < unknowns_; ++i)
    if (e[i] && z[i]) acc = (acc + e[i] * z[i]) % modulus_;
  return acc;
}

std::vector<ModRow> EdgeModel::cocycles() const {
  if (unknowns_ == 0) return {};
  const auto& g = *group_;
  const std::uint64_t m = modulus_;
  ModSpan constraints(unknowns_, m);
  ModRow row(unknowns_);
  for (Elem h = 0; h < n_; ++h)
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Elem hs = g.mul(h, gens_[s]);
      if (hs != 0 && parent_[hs] == h && via_[hs] == s) continue;
      for (Elem a = 1; a < n_; ++a) {
        // f(a, hs) - f(a, h) - f(ah, s) + f(h, s) = 0
        const std::uint32_t* lhs = expression(a, hs);
        const std::uint32_t* base = expression(a, h);
        for (std::size_t i = 0; i < unknowns_; ++i) row[i] = (lhs[i] + m - base[i]) % m;
        Elem ah = g.mul(a, h);
        if (ah != 0) row[edge(ah, s)] = (row[edge(ah, s)] + m - 1) % m;
        if (h != 0) row[edge(h, s)] = (row[edge(h, s)] + 1) % m;
        bool all_zero = true;
        for (auto x : row)
          if (x) {
            all_zero = false;
            break;
          }
        if (!all_zero) constraints.insert(row);
      }
    }
  return linalg::right_kernel(constraints.basis(), unknowns_, m);
}

std::vector<ModRow> EdgeModel::coboundaries() const {
  const auto& g = *group_;
  std::vector<ModRow> out;
  for (Elem x = 1; x < n_; ++x) {
    ModRow v(unknowns_, 0);
    for (Elem a = 1; a < n_; ++a)
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        std::int64_t val = (a == x) + (gens_[s] == x) - (g.mul(a, gens_[s]) == x);
        v[edge(a, s)] = linalg::mod_reduce(val, modulus_);
      }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ModRow> EdgeModel::bocksteins() const {
  std::vector<ModRow> out;
  for (const auto& chi : hom_generators(group_, modulus_)) out.push_back(edge_vector(bockstein(group_, chi, modulus_)));
  return out;
}

ModRow EdgeModel::edge_vector(const Cochain& c) const {
  if (c.group() != group_ && c.group()->order() != n_) throw InputError("edge_vector: cochain on another group");
  ModRow z(unknowns_, 0);
  for (Elem a = 1; a < n_; ++a)
    for (std::size_t s = 0; s < gens_.size(); ++s) z[edge(a, s)] = c(a, gens_[s]) % modulus_;
  return z;
}

Cochain EdgeModel::expand(const ModRow& z) const {
  Cochain c(group_, 2, modulus_);
  for (Elem a = 1; a < n_; ++a)
    for (Elem b = 1; b < n_; ++b) c.set(a, b, evaluate(a, b, z));
  return c;
}

std::vector<ModRow> pullback_intersection(std::vector<ModRow> start, const std::vector<LinearCondition>& conditions,
                                          std::size_t dim, std::uint64_t modulus) {
  auto canonical = [&](const std::vector<ModRow>& rows) {
    if (dim == 0) return std::vector<ModRow>{};
    ModSpan s(dim, modulus);
    s.insert_all(rows);
    return s.basis();
  };
  std::vector<ModRow> k = canonical(start);
  for (const auto& cond : conditions) {
    if (k.empty()) break;
    if (cond.target_dim == 0) continue;
    std::vector<ModRow> stacked;
    for (const auto& v : k) stacked.push_back(cond.map(v));
    for (const auto& t : cond.target) stacked.push_back(t);
    auto lk = linalg::left_kernel(stacked, cond.target_dim, modulus);
    std::vector<ModRow> next;
    for (const auto& x : lk) {
      ModRow v(dim, 0);
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t c = 0; c < dim; ++c) v[c] = (v[c] + x[i] * k[i][c]) % modulus;
      }
      next.push_back(std::move(v));
    }
    k = canonical(next);
  }
  return k;
}

std::vector<std::vector<std::uint64_t>> hom_generators(const GroupPtr& g, std::uint64_t m) {
  Abelianization ab = abelianization(g);
  std::vector<std::vector<std::uint64_t>> out;
  const auto& f = ab.invariants.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint64_t scale = m / std::gcd(m, f[i]);
    if (scale == m) continue;
    std::vector<std::uint64_t> chi(g->order());
    for (Elem x = 0; x < g->order(); ++x) chi[x] = scale * ab.coords[x][i] % m;
    out.push_back(std::move(chi));
  }
  return out;
}

Cochain bockstein(const GroupPtr& gp, const std::vector<std::uint64_t>& chi, std::uint64_t m) {
  const auto& g = *gp;
  Cochain c(gp, 2, m);
  for (Elem a = 1; a < g.order(); ++a)
    for (Elem b = 1; b < g.order(); ++b) {
      std::uint64_t s = chi[a] + chi[b], t = chi[g.mul(a, b)];
      if (t > s || (s - t) % m != 0) throw InputError("bockstein: map is not a homomorphism into Z/m");
      c.set(a, b, (s - t) / m);
    }
  return c;
}

}  // namespace bogo
