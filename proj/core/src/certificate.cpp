#include "bogomolov/certificate.hpp"

#include <algorithm>
#include <map>

#include "bogomolov/errors.hpp"

namespace bogo {

using linalg::ModRow;
using linalg::ModSpan;
using Abelian = CentralFamily::Abelian;

std::uint64_t fij_eval(const CentralFamily& f, std::size_t i, std::size_t j, const Abelian& x, const Abelian& y) {
  const std::uint64_t m = f.pair_modulus(f.pair_index(i, j));
  return (m - (x[j] % m) * (y[i] % m) % m) % m;
}

std::uint64_t fij_eval_pair(const CentralFamily& f, std::size_t i, std::size_t j, const Abelian& I, const Abelian& J,
                            std::uint64_t c1, std::uint64_t c2, std::uint64_t d1, std::uint64_t d2) {
  Abelian x = f.add(f.scale(I, c1), f.scale(J, c2));
  Abelian y = f.add(f.scale(I, d1), f.scale(J, d2));
  return fij_eval(f, i, j, x, y);
}

TransgressionImage transgression_image(const CentralFamily& f) {
  const std::size_t k = f.pairs().size();
  const std::uint64_t big = f.ambient_modulus();
  TransgressionImage t;
  std::vector<std::uint64_t> orders;
  for (std::size_t q = 0; q < k; ++q) orders.push_back(f.pair_modulus(q));
  t.h2_quotient = FinAbGroup::from_cyclic_orders(orders);
  t.h1_fixed = f.central_invariants();
  if (k == 0) {
    t.psi_prime = t.psi = FinAbGroup::trivial();
    return t;
  }
  // chi(e_ij) = x_ij / p^{n_j}; chi vanishes on H iff x is orthogonal to the
  // embedded generators of H modulo p^{n1}. Then chi o eps = sum x_ij f_ij.
  std::vector<ModRow> chars = linalg::right_kernel(f.h_basis(), k, big);
  std::vector<ModRow> image, full;
  for (const auto& x : chars) {
    ModRow u(k);
    for (std::size_t q = 0; q < k; ++q) u[q] = x[q] % f.pair_modulus(q) * (big / f.pair_modulus(q)) % big;
    image.push_back(std::move(u));
  }
  for (std::size_t q = 0; q < k; ++q) {
    ModRow u(k, 0);
    u[q] = big / f.pair_modulus(q);
    full.push_back(std::move(u));
  }
  ModSpan s(k, big);
  s.insert_all(image);
  t.image_basis = s.basis();
  t.psi_prime = linalg::subquotient_invariants(t.image_basis, {}, k, big);
  t.psi = linalg::subquotient_invariants(full, t.image_basis, k, big);
  return t;
}

namespace {

struct ImageGroup {
  std::vector<std::uint64_t> elements;  // sorted abelian indices
  GroupPtr group;
};

std::vector<std::uint64_t> span_indices(const CentralFamily& f, const Abelian& I, const Abelian& J) {
  std::vector<std::uint64_t> out;
  std::vector<Abelian> queue{Abelian(I.size(), 0)};
  std::map<std::uint64_t, int> seen{{0, 0}};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const Abelian* g : {&I, &J}) {
      Abelian y = f.add(queue[q], *g);
      if (seen.emplace(f.abelian_index(y), 0).second) queue.push_back(std::move(y));
    }
  for (auto& [idx, unused] : seen) out.push_back(idx);
  return out;
}

GroupPtr image_group(const CentralFamily& f, const std::vector<std::uint64_t>& els) {
  const std::size_t n = els.size();
  std::map<std::uint64_t, Elem> local;
  for (std::size_t i = 0; i < n; ++i) local.emplace(els[i], static_cast<Elem>(i));
  std::vector<Abelian> as(n);
  for (std::size_t i = 0; i < n; ++i) as[i] = f.abelian_from_index(els[i]);
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = local.at(f.abelian_index(f.add(as[i], as[j])));
  return FiniteGroup::trusted(n, std::move(t));
}

ClassCheck check_image(const CentralFamily& f, const Abelian& I, const Abelian& J,
                       const std::vector<std::uint64_t>& els) {
  ClassCheck c;
  c.I = I;
  c.J = J;
  c.image_order = els.size();
  if (els.size() == 1) return c;
  GroupPtr b = image_group(f, els);
  const std::uint64_t m = std::max<std::uint64_t>(f.ambient_modulus(), els.size());
  EdgeModel model(b, m);
  ModSpan trivial(model.unknowns(), m);
  trivial.insert_all(model.coboundaries());
  trivial.insert_all(model.bocksteins());
  std::vector<Abelian> as(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) as[i] = f.abelian_from_index(els[i]);
  const auto& gens = model.generators();
  for (auto [i, j] : f.pairs()) {
    const std::uint64_t scale = m / f.pair_modulus(f.pair_index(i, j));
    ModRow z(model.unknowns(), 0);
    for (Elem a = 1; a < els.size(); ++a)
      for (std::size_t s = 0; s < gens.size(); ++s)
        z[model.edge(a, s)] = fij_eval(f, i, j, as[a], as[gens[s]]) * scale % m;
    if (!trivial.contains(z)) {
      c.pass = false;
      c.failing.emplace_back(i, j);
    }
  }
  return c;
}

}  // namespace

ClassCheck coboundary_check_54(const CentralFamily& f, const Abelian& I, const Abelian& J) {
  return check_image(f, I, J, span_indices(f, I, J));
}

RouteB route_b(const CentralFamily& f, bool dedupe, std::uint64_t pair_cap) {
  const std::uint64_t s = f.abelian_size();
  if (s > (1ULL << 32) || s * s > pair_cap)
    throw SizeError("route B: " + std::to_string(s) + "^2 pairs exceed the cap " + std::to_string(pair_cap));
  RouteB r;
  r.deduplicated = dedupe;
  std::vector<Abelian> as(s);
  for (std::uint64_t i = 0; i < s; ++i) as[i] = f.abelian_from_index(i);
  std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>> images;
  std::vector<std::vector<std::uint64_t>> order;
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j) {
      ++r.pairs_enumerated;
      if (!f.central_is_zero(f.commutator_form(as[i], as[j]))) continue;
      ++r.commuting_pairs;
      auto els = span_indices(f, as[i], as[j]);
      if (images.emplace(els, std::make_pair(i, j)).second) order.push_back(std::move(els));
    }
  r.distinct_images = images.size();
  std::vector<const std::vector<std::uint64_t>*> keep;
  if (dedupe) {
    std::vector<const std::vector<std::uint64_t>*> bysize;
    for (const auto& e : order) bysize.push_back(&e);
    std::stable_sort(bysize.begin(), bysize.end(), [](auto* a, auto* b) { return a->size() > b->size(); });
    for (auto* e : bysize) {
      bool contained = false;
      for (auto* k : keep)
        if (k->size() > e->size() && std::includes(k->begin(), k->end(), e->begin(), e->end())) {
          contained = true;
          break;
        }
      if (!contained) keep.push_back(e);
    }
    std::sort(keep.begin(), keep.end(), [&](auto* a, auto* b) { return images.at(*a) < images.at(*b); });
  } else {
    for (const auto& e : order) keep.push_back(&e);
  }
  for (auto* e : keep) {
    auto [i, j] = images.at(*e);
    ClassCheck c = check_image(f, as[i], as[j], *e);
    r.pass = r.pass && c.pass;
    r.classes.push_back(std::move(c));
  }
  r.checked_classes = r.classes.size();
  return r;
}

FamilyCertificate b0_lower_bound_certificate(const CentralFamily& f, const CertificateOptions& opt) {
  FamilyCertificate c;
  c.family = f.name();
  c.p = f.p();
  c.n = f.parameter();
  c.exponents = f.exponents();
  c.log_order = f.log_order();
  c.order = f.order().str();
  c.central = f.central_invariants();
  c.quotient = f.quotient_invariants();
  c.center_is_central_part = f.radical().size() == 1;
  c.transgression = transgression_image(f);
  c.transgression_injective = c.transgression.psi_prime == c.transgression.h1_fixed;
  if (f.abelian_size() <= opt.engine_cap) {
    std::vector<std::uint64_t> els(f.abelian_size());
    for (std::uint64_t i = 0; i < els.size(); ++i) els[i] = i;
    EngineOptions eo;
    eo.cap = opt.engine_cap;
    c.h2_quotient_engine = h2_qz(image_group(f, els), eo).h2_qz;
  }
  c.wedge = wedge_commuting_search(f, opt.pair_cap);
  c.expected_pairs = f.abelian_size() * f.abelian_size();
  c.route_a_pass = !c.wedge.witness;
  if (!c.route_a_pass || opt.force_route_b || f.name() == "thm54") c.route_b = route_b(f, true, opt.pair_cap);
  std::vector<std::string> routes;
  if (c.route_a_pass) routes.push_back("route-a");
  if (c.route_b && c.route_b->pass) routes.push_back("route-b");
  for (std::size_t i = 0; i < routes.size(); ++i) c.certified_by += (i ? "+" : "") + routes[i];
  bool engine_ok = !c.h2_quotient_engine || *c.h2_quotient_engine == c.transgression.h2_quotient;
  c.certified = !routes.empty() && engine_ok && c.transgression_injective &&
                c.wedge.pairs_enumerated == c.expected_pairs;
  return c;
}

void to_json(nlohmann::json& j, const WedgeSearch& w) {
  j = {{"pairs_enumerated", w.pairs_enumerated}, {"commuting_pairs", w.commuting_pairs}};
  if (w.witness)
    j["witness"] = {{"a", w.witness->first}, {"b", w.witness->second}};
  else
    j["witness"] = nullptr;
}

void to_json(nlohmann::json& j, const ClassCheck& c) {
  nlohmann::json failing = nlohmann::json::array();
  for (auto [a, b] : c.failing) failing.push_back({a + 1, b + 1});
  j = {{"I", c.I}, {"J", c.J}, {"image_order", c.image_order}, {"pass", c.pass}, {"failing_fij", failing}};
}

void to_json(nlohmann::json& j, const RouteB& r) {
  j = {{"deduplicated", r.deduplicated},
       {"pairs_enumerated", r.pairs_enumerated},
       {"commuting_pairs", r.commuting_pairs},
       {"distinct_images", r.distinct_images},
       {"checked_classes", r.checked_classes},
       {"pass", r.pass},
       {"classes", r.classes}};
}

void to_json(nlohmann::json& j, const FamilyCertificate& c) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : c.transgression.image_basis) basis.push_back(row);
  j = {{"family", c.family},
       {"p", c.p},
       {"n", c.n},
       {"exponents", c.exponents},
       {"log_p_order", c.log_order},
       {"order", c.order},
       {"central_part", c.central},
       {"abelian_quotient", c.quotient},
       {"center_is_central_part", c.center_is_central_part},
       {"h2_quotient", c.transgression.h2_quotient},
       {"h2_quotient_engine", c.h2_quotient_engine ? nlohmann::json(*c.h2_quotient_engine) : nlohmann::json(nullptr)},
       {"h1_fixed", c.transgression.h1_fixed},
       {"im_psi_prime", c.transgression.psi_prime},
       {"im_psi_prime_basis", basis},
       {"im_psi", c.transgression.psi},
       {"transgression_injective", c.transgression_injective},
       {"wedge_search", c.wedge},
       {"expected_pairs", c.expected_pairs},
       {"an_cyclic_check", c.route_a_pass ? "pass" : "fail"},
       {"route_b", c.route_b ? nlohmann::json(*c.route_b) : nlohmann::json(nullptr)},
       {"certified_by", c.certified_by},
       {"verdict", c.certified ? "certified" : "counterexample"}};
}

}  // namespace bogo
