#include "bogomolov/cochain.hpp"

#include <algorithm>

#include "bogomolov/errors.hpp"

namespace bogo {

Cochain::Cochain(GroupPtr group, unsigned degree, std::uint64_t modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (degree_ < 1 || degree_ > 3) throw InputError("cochain degree must be 1, 2 or 3");
  if (modulus_ < 1) throw InputError("cochain modulus must be positive");
  std::size_t n = group_->order() - 1, size = 1;
  for (unsigned i = 0; i < degree_; ++i) size *= n;
  values_.assign(size, 0);
}

std::size_t Cochain::index(Elem g, Elem h, Elem k) const {
  const std::size_t n = group_->order() - 1;
  switch (degree_) {
    case 1:
      return g - 1;
    case 2:
      return (g - 1) * n + (h - 1);
    default:
      return ((g - 1) * n + (h - 1)) * n + (k - 1);
  }
}

std::uint64_t Cochain::operator()(Elem g) const { return g == 0 ? 0 : values_[index(g)]; }
std::uint64_t Cochain::operator()(Elem g, Elem h) const { return g == 0 || h == 0 ? 0 : values_[index(g, h)]; }
std::uint64_t Cochain::operator()(Elem g, Elem h, Elem k) const {
  return g == 0 || h == 0 || k == 0 ? 0 : values_[index(g, h, k)];
}

void Cochain::set(Elem g, std::uint64_t v) {
  if (g != 0) values_[index(g)] = v % modulus_;
}
void Cochain::set(Elem g, Elem h, std::uint64_t v) {
  if (g != 0 && h != 0) values_[index(g, h)] = v % modulus_;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = (values_[i] + o.values_[i]) % modulus_;
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i)
    r.values_[i] = (values_[i] + modulus_ - o.values_[i]) % modulus_;
  return r;
}

Cochain Cochain::scaled(std::uint64_t k) const {
  Cochain r = *this;
  k %= modulus_;
  for (auto& v : r.values_) v = v * k % modulus_;
  return r;
}

Cochain differential(const Cochain& f) {
  const auto& g = *f.group();
  const std::uint64_t m = f.modulus();
  const Elem n = static_cast<Elem>(g.order());
  if (f.degree() == 1) {
    Cochain d(f.group(), 2, m);
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) d.set(a, b, (f(a) + f(b) + m - f(g.mul(a, b))) % m);
    return d;
  }
  if (f.degree() != 2) throw InputError("differential: degree must be 1 or 2");
  Cochain d(f.group(), 3, m);
  auto& vals = d.data();
  std::size_t i = 0;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 1; c < n; ++c, ++i)
        vals[i] = (f(b, c) + m - f(ab, c) + f(a, g.mul(b, c)) + m - f(a, b)) % m;
    }
  return d;
}

Cochain restrict_to(const Cochain& c, const EmbeddedGroup& a) {
  const auto& emb = a.embedding;
  const Elem n = static_cast<Elem>(a.group->order());
  Cochain r(a.group, c.degree(), c.modulus());
  if (c.degree() == 1) {
    for (Elem x = 1; x < n; ++x) r.set(x, c(emb[x]));
  } else if (c.degree() == 2) {
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) r.set(x, y, c(emb[x], emb[y]));
  } else {
    throw InputError("restrict_to: degree must be 1 or 2");
  }
  return r;
}

Cochain inflate(const Cochain& c, const GroupPtr& g, const std::vector<Elem>& projection) {
  if (projection.size() != g->order()) throw InputError("inflate: projection has wrong size");
  const Elem n = static_cast<Elem>(g->order());
  Cochain r(g, c.degree(), c.modulus());
  if (c.degree() == 1) {
    for (Elem x = 1; x < n; ++x) r.set(x, c(projection[x]));
  } else if (c.degree() == 2) {
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) r.set(x, y, c(projection[x], projection[y]));
  } else {
    throw InputError("inflate: degree must be 1 or 2");
  }
  return r;
}

namespace {

struct Transversal {
  std::vector<Elem> reps;     // least element of each right coset Hx
  std::vector<std::size_t> coset;  // element -> coset index
  std::vector<Elem> h_part;   // element x = h * rep(x); local index of h in H
};

Transversal right_transversal(const EmbeddedGroup& h, const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<Elem> local(n, ~Elem{0});
  for (std::size_t i = 0; i < h.embedding.size(); ++i) local[h.embedding[i]] = static_cast<Elem>(i);
  Transversal t;
  t.coset.assign(n, kUnset);
  t.h_part.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (t.coset[x] != kUnset) continue;
    std::size_t idx = t.reps.size();
    t.reps.push_back(x);
    for (std::size_t i = 0; i < h.embedding.size(); ++i) {
      Elem y = g.mul(h.embedding[i], x);
      t.coset[y] = idx;
      t.h_part[y] = static_cast<Elem>(i);
    }
  }
  return t;
}

}  // namespace

Cochain corestrict(const Cochain& c, const EmbeddedGroup& h, const GroupPtr& gp) {
  const auto& g = *gp;
  const std::uint64_t m = c.modulus();
  const Elem n = static_cast<Elem>(g.order());
  Transversal t = right_transversal(h, g);
  // t * x = h(t, x) * rep(t x)
  auto hpart = [&](Elem rep, Elem x) { return t.h_part[g.mul(rep, x)]; };
  auto next = [&](Elem rep, Elem x) { return t.reps[t.coset[g.mul(rep, x)]]; };
  Cochain r(gp, c.degree(), m);
  if (c.degree() == 1) {
    for (Elem x = 1; x < n; ++x) {
      std::uint64_t s = 0;
      for (Elem rep : t.reps) s += c(hpart(rep, x));
      r.set(x, s % m);
    }
  } else if (c.degree() == 2) {
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) {
        std::uint64_t s = 0;
        for (Elem rep : t.reps) s += c(hpart(rep, x), hpart(next(rep, x), y));
        r.set(x, y, s % m);
      }
  } else {
    throw InputError("corestrict: degree must be 1 or 2");
  }
  return r;
}

Cochain conj_action(const Cochain& c, const EmbeddedGroup& nsub, const GroupPtr& parent, Elem g) {
  const auto& big = *parent;
  const std::size_t n = nsub.group->order();
  std::vector<Elem> local(big.order(), ~Elem{0});
  for (std::size_t i = 0; i < n; ++i) local[nsub.embedding[i]] = static_cast<Elem>(i);
  const Elem gi = big.inv(g);
  std::vector<Elem> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem y = local[big.conj(gi, nsub.embedding[i])];
    if (y == ~Elem{0}) throw InputError("conj_action: subgroup is not normal");
    image[i] = y;
  }
  Cochain r(nsub.group, c.degree(), c.modulus());
  if (c.degree() == 1) {
    for (Elem x = 1; x < n; ++x) r.set(x, c(image[x]));
  } else if (c.degree() == 2) {
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) r.set(x, y, c(image[x], image[y]));
  } else {
    throw InputError("conj_action: degree must be 1 or 2");
  }
  return r;
}

}  // namespace bogo
