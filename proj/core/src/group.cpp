#include "bogomolov/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "bogomolov/errors.hpp"

namespace bogo {

namespace {

std::vector<Elem> closure_of(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw SizeError("group order " + std::to_string(order) + " exceeds the table cap " + std::to_string(cap));
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> table) : n_(n), table_(std::move(table)), inv_(n), orders_(n) {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  for (Elem a = 0; a < n_; ++a) {
    std::uint64_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    orders_[a] = a == 0 ? 1 : k;
  }
  std::vector<char> in(n_, 0);
  in[0] = 1;
  std::size_t covered = 1;
  while (covered < n_) {
    Elem best = 0;
    for (Elem a = 1; a < n_; ++a)
      if (!in[a] && (best == 0 || orders_[a] > orders_[best])) best = a;
    gens_.push_back(best);
    auto cl = closure_of(*this, gens_);
    for (Elem x : cl) in[x] = 1;
    covered = cl.size();
  }
}

GroupPtr FiniteGroup::trusted(std::size_t order, std::vector<Elem> table) {
  if (table.size() != order * order) throw InternalError("FiniteGroup::trusted: table size mismatch");
  return GroupPtr(new FiniteGroup(order, std::move(table)));
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Elem>>& rows, std::size_t cap) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("group table is empty");
  check_cap(n, cap);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("group table is not square");
    std::vector<char> seen(n, 0);
    for (Elem x : r) {
      if (x >= n || seen[x]) throw InputError("group table row is not a permutation");
      seen[x] = 1;
    }
  }
  std::optional<Elem> e;
  for (Elem a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b) ok = rows[a][b] == b && rows[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InputError("group table has no identity");
  auto assoc = [&](Elem a, Elem b, Elem c) { return rows[rows[a][b]][c] == rows[a][rows[b][c]]; };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InputError("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n - 1));
    for (int i = 0; i < 200000; ++i)
      if (!assoc(d(rng), d(rng), d(rng))) throw InputError("group table is not associative");
  }
  // Columns are permutations too (Latin square), so with an identity and
  // associativity every element has a two-sided inverse.
  std::vector<Elem> relabel(n), back(n);
  relabel[*e] = 0;
  Elem next = 1;
  for (Elem a = 0; a < n; ++a)
    if (a != *e) relabel[a] = next++;
  for (Elem a = 0; a < n; ++a) back[relabel[a]] = a;
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = relabel[rows[back[a]][back[b]]];
  return GroupPtr(new FiniteGroup(n, std::move(t)));
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  std::int64_t o = static_cast<std::int64_t>(orders_[a]);
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : gens_)
    for (Elem b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::uint64_t> FiniteGroup::order_census() const {
  auto c = orders_;
  std::sort(c.begin(), c.end());
  return c;
}

GroupPtr from_permutations(const std::vector<std::vector<std::uint32_t>>& gens, std::size_t cap) {
  const std::size_t degree = gens.empty() ? 0 : gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != degree) throw InputError("permutations have different degrees");
    std::vector<char> seen(degree, 0);
    for (auto x : g) {
      if (x >= degree || seen[x]) throw InputError("generator is not a bijection");
      seen[x] = 1;
    }
  }
  using Perm = std::vector<std::uint32_t>;
  struct Hash {
    std::size_t operator()(const Perm& p) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : p) h = (h ^ x) * 1099511628211ULL;
      return h;
    }
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::unordered_map<Perm, Elem, Hash> index{{id, 0}};
  std::vector<Elem> parent{0}, via{0};
  std::vector<std::vector<Elem>> right(gens.size());  // right[s][x] = x * gen_s
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm q(degree);
      for (std::size_t x = 0; x < degree; ++x) q[x] = elems[i][gens[s][x]];  // (p s)(x) = p(s(x))
      auto it = index.find(q);
      Elem j;
      if (it == index.end()) {
        j = static_cast<Elem>(elems.size());
        check_cap(elems.size() + 1, cap);
        index.emplace(q, j);
        elems.push_back(std::move(q));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<Elem>(s));
      } else {
        j = it->second;
      }
      right[s].resize(elems.size());
      right[s][i] = j;
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a) {
    t[a * n] = a;
    for (Elem b = 1; b < n; ++b) t[a * n + b] = right[via[b]][t[a * n + parent[b]]];
  }
  return FiniteGroup::trusted(n, std::move(t));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::trusted(n, std::move(t));
}

GroupPtr trivial_group() { return cyclic_group(1); }

Product direct_product(const GroupPtr& g1, const GroupPtr& g2, std::size_t cap) {
  std::vector<std::vector<Elem>> action(g2->order());
  for (auto& a : action) {
    a.resize(g1->order());
    std::iota(a.begin(), a.end(), 0);
  }
  return semidirect_product(g1, g2, action, cap);
}

Product semidirect_product(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action,
                           std::size_t cap) {
  const std::size_t a = n->order(), b = g0->order();
  check_cap(a * b, cap);
  if (action.size() != b) throw InputError("semidirect product: action must list one automorphism per element");
  for (const auto& f : action) {
    if (f.size() != a) throw InputError("semidirect product: automorphism has wrong size");
    std::vector<char> seen(a, 0);
    for (Elem x : f) {
      if (x >= a || seen[x]) throw InputError("semidirect product: action map is not a bijection");
      seen[x] = 1;
    }
    for (Elem x = 0; x < a; ++x)
      for (Elem y = 0; y < a; ++y)
        if (f[n->mul(x, y)] != n->mul(f[x], f[y]))
          throw InputError("semidirect product: action map is not an automorphism");
  }
  for (Elem x = 0; x < a; ++x)
    if (action[0][x] != x) throw InputError("semidirect product: identity acts nontrivially");
  for (Elem g = 0; g < b; ++g)
    for (Elem h = 0; h < b; ++h)
      for (Elem x = 0; x < a; ++x)
        if (action[g0->mul(g, h)][x] != action[g][action[h][x]])
          throw InputError("semidirect product: action is not a homomorphism");
  const std::size_t m = a * b;
  std::vector<Elem> t(m * m);
  for (Elem g1 = 0; g1 < b; ++g1)
    for (Elem s1 = 0; s1 < a; ++s1)
      for (Elem g2 = 0; g2 < b; ++g2)
        for (Elem s2 = 0; s2 < a; ++s2) {
          Elem s = n->mul(s1, action[g1][s2]);
          Elem g = g0->mul(g1, g2);
          t[(s1 + a * g1) * m + s2 + a * g2] = static_cast<Elem>(s + a * g);
        }
  Product p;
  p.group = FiniteGroup::trusted(m, std::move(t));
  std::vector<Elem> left, right;
  for (Elem s : n->generators()) left.push_back(s);
  for (Elem g : g0->generators()) right.push_back(static_cast<Elem>(a * g));
  p.left = subgroup_generated(p.group, left);
  p.right = subgroup_generated(p.group, right);
  return p;
}

std::vector<std::vector<Elem>> extend_action(const GroupPtr& n, const GroupPtr& g0, const std::vector<Elem>& gens,
                                             const std::vector<std::vector<Elem>>& gen_auts) {
  if (gens.size() != gen_auts.size()) throw InputError("action: one automorphism per generator required");
  const std::size_t a = n->order();
  for (const auto& f : gen_auts)
    if (f.size() != a) throw InputError("action: automorphism has wrong size");
  std::vector<std::vector<Elem>> act(g0->order());
  act[0].resize(a);
  std::iota(act[0].begin(), act[0].end(), 0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Elem y = g0->mul(x, gens[s]);
      std::vector<Elem> f(a);
      for (Elem v = 0; v < a; ++v) {
        if (gen_auts[s][v] >= a) throw InputError("action: automorphism entry out of range");
        f[v] = act[x][gen_auts[s][v]];
      }
      if (act[y].empty()) {
        act[y] = std::move(f);
        queue.push_back(y);
      } else if (act[y] != f) {
        throw InputError("action: generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != g0->order()) throw InputError("action: listed elements do not generate the acting group");
  return act;
}

}  // namespace bogo
