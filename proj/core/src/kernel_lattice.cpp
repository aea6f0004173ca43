#include "bogomolov/kernel_lattice.hpp"

#include <map>

#include "bogomolov/errors.hpp"
#include "bogomolov/smith.hpp"

namespace bogo {

using linalg::BigInt;
using linalg::BigMatrix;

namespace {

void check_action(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action) {
  if (!n->is_abelian()) throw InputError("kernel lattice: N must be abelian");
  if (action.size() != g0->order()) throw InputError("kernel lattice: one automorphism per element of G0 required");
  for (Elem g = 0; g < g0->order(); ++g) {
    const auto& a = action[g];
    if (a.size() != n->order()) throw InputError("kernel lattice: automorphism " + std::to_string(g) + " has wrong size");
    std::vector<bool> hit(n->order(), false);
    for (Elem x : a) {
      if (x >= n->order() || hit[x]) throw InputError("kernel lattice: automorphism " + std::to_string(g) + " is not a bijection");
      hit[x] = true;
    }
    for (Elem x = 0; x < n->order(); ++x)
      for (Elem y = 0; y < n->order(); ++y)
        if (a[n->mul(x, y)] != n->mul(a[x], a[y]))
          throw InputError("kernel lattice: map " + std::to_string(g) + " is not an automorphism");
  }
  for (Elem g = 0; g < g0->order(); ++g)
    for (Elem h = 0; h < g0->order(); ++h)
      for (Elem x = 0; x < n->order(); ++x)
        if (action[g0->mul(g, h)][x] != action[g][action[h][x]])
          throw InputError("kernel lattice: action is not a homomorphism");
}

struct Kernel {
  GLattice m;
  LatticeMatrix basis;
  std::uint64_t index = 0;
  FinAbGroup quotient;
};

/// M = ker(P -> N*), where basis vector k of P maps to character phi[k].
Kernel kernel_of(const GLattice& p, const DualGroup& d, const std::vector<std::uint32_t>& phi) {
  const std::size_t r = p.rank();
  const auto& orders = d.invariants.factors();
  std::vector<std::vector<std::int64_t>> cons(orders.size(), std::vector<std::int64_t>(r, 0));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < orders.size(); ++i) cons[i][k] = static_cast<std::int64_t>(d.chars[phi[k]][i]);
  BigMatrix b = linalg::congruence_kernel(cons, orders, r);
  if (b.size() != r) throw InternalError("kernel lattice: kernel has the wrong rank");
  Kernel out;
  for (const auto& row : b) {
    std::vector<std::int64_t> v;
    for (const auto& x : row) v.push_back(linalg::to_int64(x));
    out.basis.push_back(std::move(v));
  }
  std::vector<LatticeMatrix> all;
  for (Elem h = 0; h < p.group()->order(); ++h) {
    LatticeMatrix mh(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<BigInt> img(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < r; ++c) img[i] += BigInt(p.action(h)[i][c]) * b[k][c];
      auto coord = linalg::coordinates_in_hermite(b, img);
      if (!coord) throw InternalError("kernel lattice: M is not G0-stable");
      for (std::size_t l = 0; l < r; ++l) mh[l][k] = linalg::to_int64((*coord)[l]);
    }
    all.push_back(std::move(mh));
  }
  out.m = GLattice::from_element_map(p.group(), r, std::move(all));
  out.index = static_cast<std::uint64_t>(linalg::to_int64(abs(linalg::determinant(b))));
  std::vector<std::vector<std::int64_t>> rel = out.basis;
  out.quotient = linalg::abelian_invariants(rel, r);
  return out;
}

bool all_sylows_cyclic(const GroupPtr& q) {
  for (auto [prime, e] : factorize(q->order())) {
    (void)e;
    Subgroup s = sylow_subgroup(q, prime);
    bool cyclic = false;
    for (Elem x : s.elements) cyclic = cyclic || q->element_order(x) == s.order();
    if (!cyclic) return false;
  }
  return true;
}

}  // namespace

DualGroup dual_group(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action,
                     const std::vector<Elem>& subset) {
  check_action(n, g0, action);
  EmbeddedGroup sub = as_group(subgroup_generated(n, subset.empty() ? n->generators() : subset));
  const GroupPtr& a = sub.group;
  Abelianization ab = abelianization(a);
  DualGroup d;
  d.invariants = ab.invariants;
  d.exponent = std::max<std::uint64_t>(1, a->exponent());
  const auto& orders = d.invariants.factors();
  std::map<Elem, Elem> local;
  for (Elem i = 0; i < sub.embedding.size(); ++i) local.emplace(sub.embedding[i], i);
  std::uint64_t count = 1;
  for (auto o : orders) count *= o;
  std::map<std::vector<std::uint64_t>, std::uint32_t> index;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint64_t> coords;
    std::uint64_t rest = c;
    for (auto o : orders) {
      coords.push_back(rest % o);
      rest /= o;
    }
    std::vector<std::uint64_t> vals(a->order(), 0);
    for (Elem t = 0; t < a->order(); ++t)
      for (std::size_t i = 0; i < orders.size(); ++i)
        vals[t] = (vals[t] + coords[i] * ab.coords[t][i] % orders[i] * (d.exponent / orders[i])) % d.exponent;
    index.emplace(vals, static_cast<std::uint32_t>(d.chars.size()));
    d.chars.push_back(std::move(coords));
    d.values.push_back(std::move(vals));
  }
  d.act.assign(g0->order(), std::vector<std::uint32_t>(d.chars.size()));
  for (Elem g = 0; g < g0->order(); ++g) {
    const auto& ginv = action[g0->inv(g)];
    for (std::size_t chi = 0; chi < d.chars.size(); ++chi) {
      std::vector<std::uint64_t> vals(a->order());
      for (Elem t = 0; t < a->order(); ++t) {
        auto it = local.find(ginv[sub.embedding[t]]);
        if (it == local.end()) throw InputError("kernel lattice: the subgroup of N is not G0-stable");
        vals[t] = d.values[chi][it->second];
      }
      d.act[g][chi] = index.at(vals);
    }
  }
  return d;
}

KernelLattice saltman_kernel_lattice(const GroupPtr& n, const GroupPtr& g0,
                                     const std::vector<std::vector<Elem>>& action) {
  DualGroup d = dual_group(n, g0, action);
  const std::size_t q = g0->order(), r = d.chars.size() * q;
  // Basis w(chi).g at chi * |G0| + g; h . (w(chi).g) = w(h chi).hg.
  std::vector<LatticeMatrix> all;
  for (Elem h = 0; h < q; ++h) {
    LatticeMatrix m(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t chi = 0; chi < d.chars.size(); ++chi)
      for (Elem g = 0; g < q; ++g) m[d.act[h][chi] * q + g0->mul(h, g)][chi * q + g] = 1;
    all.push_back(std::move(m));
  }
  GLattice p = GLattice::from_element_map(g0, r, std::move(all));
  std::vector<std::uint32_t> phi(r);
  for (std::size_t k = 0; k < r; ++k) phi[k] = static_cast<std::uint32_t>(k / q);
  Kernel k = kernel_of(p, d, phi);
  return KernelLattice{std::move(p), std::move(k.m), k.index, std::move(k.quotient), std::move(k.basis)};
}

std::string to_string(KernelBranch b) {
  switch (b) {
    case KernelBranch::coprime_index: return "coprime-index";
    case KernelBranch::cyclic_sylow: return "cyclic-sylow";
    case KernelBranch::no_claim: return "no-claim";
  }
  return "?";
}

PrimeKernelLattice thm19_kernel_lattice(const GroupPtr& n, const GroupPtr& g0,
                                        const std::vector<std::vector<Elem>>& action, std::uint64_t p,
                                        unsigned threads) {
  check_action(n, g0, action);
  if (p < 2 || !is_prime(p) || n->order() % p != 0)
    throw InputError("kernel lattice: " + std::to_string(p) + " is not a prime divisor of |N|");
  PrimeKernelLattice out;
  out.p = p;
  out.n_p = sylow_subgroup(n, p);
  std::vector<Elem> fixing;
  for (Elem g = 0; g < g0->order(); ++g) {
    bool fixes = true;
    for (Elem t : out.n_p.elements) fixes = fixes && action[g][t] == t;
    if (fixes) fixing.push_back(g);
  }
  out.h_p = subgroup_generated(g0, fixing);
  if (out.h_p.elements != fixing) throw InternalError("kernel lattice: H_p is not closed");

  const std::size_t s = out.h_p.order(), q = g0->order();
  std::vector<Elem> reps;
  std::vector<std::size_t> label(q, SIZE_MAX);
  for (Elem x = 0; x < q; ++x) {
    if (label[x] != SIZE_MAX) continue;
    for (Elem y : out.h_p.elements) label[g0->mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t t = reps.size();
  DualGroup d = dual_group(n, g0, action, out.n_p.elements);
  const std::size_t nc = d.chars.size(), r = nc * t * s;
  auto idx = [&](std::size_t chi, std::size_t j, std::size_t i) { return (chi * t + j) * s + i; };

  // h . u_ij(chi) = u_ij'(chi) where h h_j lies in h_j' H_p.
  std::vector<LatticeMatrix> all;
  for (Elem h = 0; h < q; ++h) {
    LatticeMatrix m(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t chi = 0; chi < nc; ++chi)
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < s; ++i) m[idx(chi, label[g0->mul(h, reps[j])], i)][idx(chi, j, i)] = 1;
    all.push_back(std::move(m));
  }
  out.f_p = GLattice::from_element_map(g0, r, std::move(all));
  std::vector<std::uint32_t> phi(r);
  for (std::size_t chi = 0; chi < nc; ++chi)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < s; ++i) phi[idx(chi, j, i)] = d.act[reps[j]][chi];
  Kernel k = kernel_of(out.f_p, d, phi);
  out.m_p = std::move(k.m);
  out.index = k.index;

  out.phi_equivariant = true;
  for (Elem h = 0; h < q; ++h)
    for (std::size_t b = 0; b < r; ++b) {
      std::size_t img = 0;
      while (out.f_p.action(h)[img][b] == 0) ++img;
      out.phi_equivariant = out.phi_equivariant && phi[img] == d.act[h][phi[b]];
    }
  const LatticeMatrix id = identity_matrix(r);
  out.h_p_trivial_on_f = out.h_p_trivial_on_m = out.h_p_trivial_on_dual = true;
  for (Elem h : out.h_p.elements) {
    out.h_p_trivial_on_f = out.h_p_trivial_on_f && out.f_p.action(h) == id;
    out.h_p_trivial_on_m = out.h_p_trivial_on_m && out.m_p.action(h) == id;
    for (std::size_t chi = 0; chi < nc; ++chi) out.h_p_trivial_on_dual = out.h_p_trivial_on_dual && d.act[h][chi] == chi;
  }
  if (!out.h_p_trivial_on_m || !is_normal(out.h_p))
    throw InternalError("kernel lattice: M_p does not descend to G0 / H_p");

  Quotient quo = quotient_group(g0, out.h_p);
  std::vector<LatticeMatrix> qall;
  for (Elem c = 0; c < quo.group->order(); ++c) qall.push_back(out.m_p.action(quo.representatives[c]));
  out.m_p_quotient = GLattice::from_element_map(quo.group, r, std::move(qall));

  if (t % p != 0)
    out.branch = KernelBranch::coprime_index;
  else if (all_sylows_cyclic(quo.group))
    out.branch = KernelBranch::cyclic_sylow;
  else
    out.branch = KernelBranch::no_claim;
  out.vacuous = t == 1;
  if (out.branch != KernelBranch::no_claim) {
    out.evidence = flabby_report(out.m_p_quotient, kDefaultTateGroupCap, threads);
    out.evidence_pass = out.branch == KernelBranch::coprime_index && out.evidence.coh_trivial_evidence;
  }
  return out;
}

nlohmann::json to_json(const KernelLattice& k) {
  return {{"rank_p", k.p.rank()},
          {"rank_m", k.m.rank()},
          {"index", k.index},
          {"quotient", nlohmann::json(k.quotient)},
          {"m_basis", k.basis},
          {"m_action", k.m.to_json()}};
}

nlohmann::json to_json(const PrimeKernelLattice& k) {
  nlohmann::json j = {{"p", k.p},
                      {"n_p_order", k.n_p.order()},
                      {"h_p_elements", k.h_p.elements},
                      {"h_p_index", k.f_p.group()->order() / k.h_p.order()},
                      {"rank_f_p", k.f_p.rank()},
                      {"rank_m_p", k.m_p.rank()},
                      {"index", k.index},
                      {"h_p_trivial_on_f_p", k.h_p_trivial_on_f},
                      {"h_p_trivial_on_m_p", k.h_p_trivial_on_m},
                      {"h_p_trivial_on_dual", k.h_p_trivial_on_dual},
                      {"phi_equivariant", k.phi_equivariant},
                      {"branch", to_string(k.branch)},
                      {"vacuous", k.vacuous}};
  if (k.branch == KernelBranch::no_claim) {
    j["evidence"] = "no-claim";
    j["tate_report"] = nullptr;
  } else {
    if (k.branch == KernelBranch::cyclic_sylow) {
      j["evidence"] = "asserted";
      j["note"] = "[M_p]^fl invertible since all Sylow subgroups of G0/H_p are cyclic; Tate data not gated";
    } else {
      j["evidence"] = k.evidence_pass ? (k.vacuous ? "vacuous-pass" : "pass") : "fail";
    }
    nlohmann::json r;
    to_json(r, k.evidence);
    j["tate_report"] = r;
  }
  return j;
}

}  // namespace bogo
