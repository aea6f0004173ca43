#include <algorithm>
#include <map>
#include <set>

#include "bogomolov/errors.hpp"
#include "bogomolov/group.hpp"
#include "bogomolov/smith.hpp"

namespace bogo {

namespace {

std::vector<Elem> sorted_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
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
  std::sort(out.begin(), out.end());
  return out;
}

// Generators with redundant entries dropped.
std::vector<Elem> prune(const FiniteGroup& g, const std::vector<Elem>& s) {
  std::vector<Elem> gens;
  std::size_t size = 1;
  for (Elem x : s) {
    if (x >= g.order()) throw InputError("element index out of range");
    auto trial = gens;
    trial.push_back(x);
    auto cl = sorted_closure(g, trial);
    if (cl.size() > size) {
      gens = std::move(trial);
      size = cl.size();
    }
  }
  return gens;
}

bool subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool order_then_elements(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

}  // namespace

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& s) {
  Subgroup h;
  h.parent = g;
  h.generators = prune(*g, s);
  h.elements = sorted_closure(*g, h.generators);
  return h;
}

Subgroup whole_group(const GroupPtr& g) { return subgroup_generated(g, g->generators()); }

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem s : g->generators())
      if (g->mul(x, s) != g->mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return subgroup_generated(g, z);
}

Subgroup derived_subgroup(const GroupPtr& g) {
  // Normal closure of the generator commutators equals [G,G].
  std::vector<Elem> c;
  for (Elem a : g->generators())
    for (Elem b : g->generators()) {
      Elem x = g->commutator(a, b);
      if (x != 0) c.push_back(x);
    }
  Subgroup h = subgroup_generated(g, c);
  for (;;) {
    std::vector<Elem> more = h.generators;
    for (Elem s : g->generators())
      for (Elem x : h.generators) {
        Elem y = g->conj(s, x);
        if (!h.contains(y)) more.push_back(y);
      }
    if (more.size() == h.generators.size()) return h;
    h = subgroup_generated(g, more);
  }
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent;
  for (Elem s : g.generators())
    for (Elem x : h.generators)
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

Subgroup conjugate(const Subgroup& h, Elem x) {
  const auto& g = *h.parent;
  Subgroup c;
  c.parent = h.parent;
  for (Elem y : h.elements) c.elements.push_back(g.conj(x, y));
  std::sort(c.elements.begin(), c.elements.end());
  for (Elem y : h.generators) c.generators.push_back(g.conj(x, y));
  return c;
}

EmbeddedGroup as_group(const Subgroup& h) {
  const auto& g = *h.parent;
  const std::size_t n = h.order();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[h.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = local[g.mul(h.elements[i], h.elements[j])];
  return {FiniteGroup::trusted(n, std::move(t)), h.elements};
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent != g) throw InputError("quotient: subgroup of a different group");
  if (!is_normal(n)) throw InputError("quotient: subgroup is not normal");
  const std::size_t order = g->order();
  constexpr Elem kUnset = ~Elem{0};
  Quotient q;
  q.projection.assign(order, kUnset);
  for (Elem x = 0; x < order; ++x) {
    if (q.projection[x] != kUnset) continue;
    Elem label = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(x);
    for (Elem y : n.elements) q.projection[g->mul(x, y)] = label;
  }
  const std::size_t k = q.representatives.size();
  std::vector<Elem> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      t[i * k + j] = q.projection[g->mul(q.representatives[i], q.representatives[j])];
  q.group = FiniteGroup::trusted(k, std::move(t));
  return q;
}

Abelianization abelianization(const GroupPtr& g) {
  Quotient q = quotient_group(g, derived_subgroup(g));
  const auto& a = *q.group;
  const auto& gens = a.generators();
  const std::size_t k = gens.size();
  // Words by breadth-first search; Cayley-graph cycles give the relations.
  std::vector<std::vector<std::int64_t>> word(a.order());
  word[0].assign(k, 0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = a.mul(queue[i], gens[s]);
      if (word[y].empty()) {
        word[y] = word[queue[i]];
        word[y][s] += 1;
        queue.push_back(y);
      }
    }
  std::vector<std::vector<std::int64_t>> rel;
  for (Elem x = 0; x < a.order(); ++x)
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = a.mul(x, gens[s]);
      std::vector<std::int64_t> r(k);
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        r[j] = word[x][j] + (j == s ? 1 : 0) - word[y][j];
        zero = zero && r[j] == 0;
      }
      if (!zero) rel.push_back(std::move(r));
    }
  Abelianization out;
  out.coords.assign(g->order(), {});
  if (k == 0) return out;
  auto h = linalg::hermite_normal_form(linalg::to_big(rel), k);
  auto snf = linalg::smith_normal_form(h);
  std::vector<std::uint64_t> factors;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    auto d = linalg::to_int64(snf.diagonal[i]);
    if (d == 0) throw InternalError("abelianization: finite group with free part");
    if (d > 1) {
      factors.push_back(static_cast<std::uint64_t>(d));
      cols.push_back(i);
    }
  }
  if (snf.diagonal.size() < k) throw InternalError("abelianization: relation matrix is rank deficient");
  out.invariants = FinAbGroup::from_cyclic_orders(factors);
  if (out.invariants.factors() != factors) throw InternalError("abelianization: factors out of order");
  std::vector<std::vector<std::uint64_t>> qcoords(a.order());
  for (Elem x = 0; x < a.order(); ++x)
    for (std::size_t t = 0; t < cols.size(); ++t) {
      linalg::BigInt v = 0;
      for (std::size_t j = 0; j < k; ++j) v += word[x][j] * snf.right[j][cols[t]];
      linalg::BigInt d = factors[t];
      v %= d;
      if (v < 0) v += d;
      qcoords[x].push_back(static_cast<std::uint64_t>(linalg::to_int64(v)));
    }
  for (Elem x = 0; x < g->order(); ++x) out.coords[x] = qcoords[q.projection[x]];
  return out;
}

GroupInvariants group_invariants(const GroupPtr& g) {
  return {center(g), derived_subgroup(g), g->exponent(), abelianization(g).invariants};
}

std::vector<Subgroup> conjugacy_representatives(const std::vector<Subgroup>& subgroups) {
  std::vector<Subgroup> reps;
  std::set<std::vector<Elem>> covered;
  for (const auto& h : subgroups) {
    if (covered.count(h.elements)) continue;
    reps.push_back(h);
    for (Elem x = 0; x < h.parent->order(); ++x) covered.insert(conjugate(h, x).elements);
  }
  return reps;
}

std::vector<Subgroup> bicyclic_subgroups(const GroupPtr& g, bool reduce) {
  // Cyclic subgroups first; a bicyclic subgroup only depends on <x> and <y>.
  std::map<std::vector<Elem>, Elem> cyclic;
  for (Elem x = 0; x < g->order(); ++x) cyclic.emplace(sorted_closure(*g, {x}), x);
  std::vector<Elem> reps;
  for (const auto& [els, x] : cyclic) reps.push_back(x);
  std::sort(reps.begin(), reps.end());
  std::map<std::vector<Elem>, Subgroup> found;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      Elem x = reps[i], y = reps[j];
      if (g->mul(x, y) != g->mul(y, x)) continue;
      Subgroup h = subgroup_generated(g, {x, y});
      found.emplace(h.elements, std::move(h));
    }
  std::vector<Subgroup> all;
  for (auto& [els, h] : found) all.push_back(std::move(h));
  auto sorter = [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.elements < b.elements;
  };
  std::sort(all.begin(), all.end(), sorter);
  if (!reduce) return all;
  std::vector<Subgroup> maximal;
  for (const auto& h : all) {
    bool contained = false;
    for (const auto& m : maximal)
      if (m.order() > h.order() && subset(h.elements, m.elements)) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(h);
  }
  return conjugacy_representatives(maximal);
}

Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("sylow_subgroup: p must be prime");
  std::uint64_t target = 1;
  for (std::uint64_t n = g->order(); n % p == 0; n /= p) target *= p;
  auto is_p_power = [p](std::uint64_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  Subgroup h = subgroup_generated(g, {});
  while (h.order() < target) {
    bool grown = false;
    for (Elem x = 1; x < g->order() && !grown; ++x) {
      if (h.contains(x) || !is_p_power(g->element_order(x))) continue;
      auto gens = h.generators;
      gens.push_back(x);
      auto cl = sorted_closure(*g, gens);
      if (is_p_power(cl.size())) {
        h = subgroup_generated(g, gens);
        grown = true;
      }
    }
    if (!grown) throw InternalError("sylow_subgroup: greedy growth stalled");
  }
  return h;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::map<std::vector<Elem>, Subgroup> found;
  std::vector<Elem> cyc;
  {
    std::set<std::vector<Elem>> seen;
    for (Elem x = 0; x < g->order(); ++x)
      if (seen.insert(sorted_closure(*g, {x})).second) cyc.push_back(x);
  }
  std::vector<std::vector<Elem>> queue;
  for (Elem x : cyc) {
    Subgroup h = subgroup_generated(g, {x});
    if (found.emplace(h.elements, h).second) queue.push_back(h.elements);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup h = found.at(queue[i]);
    for (Elem x : cyc) {
      if (h.contains(x)) continue;
      auto gens = h.generators;
      gens.push_back(x);
      Subgroup k = subgroup_generated(g, gens);
      if (found.emplace(k.elements, k).second) queue.push_back(k.elements);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [els, h] : found) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), order_then_elements);
  return out;
}

}  // namespace bogo
