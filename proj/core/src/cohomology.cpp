#include "bogomolov/cohomology.hpp"

#include "bogomolov/errors.hpp"
#include "parallel.hpp"

namespace bogo {

using linalg::ModRow;
using linalg::ModSpan;

namespace {

std::vector<ModRow> span_basis(const std::vector<ModRow>& rows, std::size_t dim, std::uint64_t m) {
  if (dim == 0) return {};
  ModSpan s(dim, m);
  s.insert_all(rows);
  return s.basis();
}

std::uint64_t pick_modulus(const GroupPtr& g, std::uint64_t requested) {
  std::uint64_t m = requested ? requested : g->order();
  if (m % g->order() != 0) throw InputError("cohomology modulus must be a multiple of the group order");
  return m < 2 ? 2 : m;
}

void check_engine_cap(const GroupPtr& g, std::size_t cap) {
  if (g->order() > cap)
    throw SizeError("group order " + std::to_string(g->order()) + " exceeds the engine cap " + std::to_string(cap));
}

struct LocalModel {
  EmbeddedGroup emb;
  std::shared_ptr<const EdgeModel> model;
  std::vector<ModRow> trivial;
};

LocalModel local_model(const Subgroup& a, std::uint64_t m) {
  LocalModel lm;
  lm.emb = as_group(a);
  lm.model = std::make_shared<EdgeModel>(lm.emb.group, m);
  auto w = lm.model->coboundaries();
  for (auto& b : lm.model->bocksteins()) w.push_back(std::move(b));
  lm.trivial = span_basis(w, lm.model->unknowns(), m);
  return lm;
}

}  // namespace

bool H2Data::order_identity() const {
  return h2_zm.torsion_order() == hom.torsion_order() * h2_qz.torsion_order();
}

bool H2Data::is_trivial_class(const ModRow& z) const {
  if (model->unknowns() == 0) return true;
  ModSpan s(model->unknowns(), modulus);
  s.insert_all(trivial);
  return s.contains(z);
}

FinAbGroup h1(const GroupPtr& g, std::uint64_t m) { return abelianization(g).invariants.hom_to_cyclic(m); }

H2Data h2_qz(const GroupPtr& g, const EngineOptions& opt) {
  check_engine_cap(g, opt.cap);
  H2Data h;
  h.group = g;
  h.modulus = pick_modulus(g, opt.modulus);
  h.model = std::make_shared<EdgeModel>(g, h.modulus);
  const std::size_t dim = h.model->unknowns();
  h.cocycles = h.model->cocycles();
  h.coboundaries = h.model->coboundaries();
  h.bocksteins = h.model->bocksteins();
  auto w = h.coboundaries;
  w.insert(w.end(), h.bocksteins.begin(), h.bocksteins.end());
  h.trivial = span_basis(w, dim, h.modulus);
  h.hom = h1(g, h.modulus);
  h.h2_zm = linalg::subquotient_invariants(h.cocycles, h.coboundaries, dim, h.modulus);
  h.h2_qz = linalg::subquotient_invariants(h.cocycles, h.trivial, dim, h.modulus);
  if (!h.order_identity()) throw InternalError("h2_qz: coefficient-sequence order identity fails");
  return h;
}

std::vector<ModRow> restriction_kernel(const H2Data& h, const std::vector<Subgroup>& subgroups, unsigned threads) {
  std::vector<LocalModel> locals(subgroups.size());
  for (const auto& a : subgroups)
    if (a.parent != h.group) throw InputError("restriction_kernel: subgroup of a different group");
  detail::parallel_for(subgroups.size(), threads, [&](std::size_t i) { locals[i] = local_model(subgroups[i], h.modulus); });
  std::vector<LinearCondition> conds;
  const EdgeModel& gm = *h.model;
  for (const auto& lm : locals) {
    const auto* l = &lm;
    LinearCondition c;
    c.target_dim = lm.model->unknowns();
    c.target = lm.trivial;
    c.map = [l, &gm](const ModRow& z) {
      const auto& gens = l->model->generators();
      const auto& emb = l->emb.embedding;
      ModRow v(l->model->unknowns(), 0);
      for (Elem a = 1; a < emb.size(); ++a)
        for (std::size_t s = 0; s < gens.size(); ++s)
          v[l->model->edge(a, s)] = gm.evaluate(emb[a], emb[gens[s]], z);
      return v;
    };
    conds.push_back(std::move(c));
  }
  return pullback_intersection(h.cocycles, conds, gm.unknowns(), h.modulus);
}

FinAbGroup restriction_kernel_invariants(const H2Data& h, const std::vector<Subgroup>& subgroups, unsigned threads) {
  auto k = restriction_kernel(h, subgroups, threads);
  return linalg::subquotient_invariants(k, h.trivial, h.model->unknowns(), h.modulus);
}

B0Result b0(const GroupPtr& g, const EngineOptions& opt) {
  B0Result r;
  r.group = g;
  r.h2 = h2_qz(g, opt);
  r.subgroups = bicyclic_subgroups(g, opt.reduce_subgroups);
  r.kernel = restriction_kernel(r.h2, r.subgroups, opt.threads);
  r.invariants = linalg::subquotient_invariants(r.kernel, r.h2.trivial, r.h2.model->unknowns(), r.h2.modulus);
  return r;
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
  if (c.degree() != 2) throw InputError("is_coboundary: expected a 2-cochain");
  if (!differential(c).is_zero()) throw InputError("is_coboundary: cochain is not a cocycle");
  const auto& g = *c.group();
  const std::size_t n = g.order();
  const std::uint64_t m = c.modulus();
  Cochain x(c.group(), 1, m);
  if (n == 1) return x;
  if (m == 1) return x;
  // Agreement on the edges (a, s) forces agreement of the cocycles.
  std::vector<ModRow> rows;
  ModRow rhs;
  for (Elem a = 1; a < n; ++a)
    for (Elem s : g.generators()) {
      ModRow r(n - 1, 0);
      r[a - 1] = (r[a - 1] + 1) % m;
      r[s - 1] = (r[s - 1] + 1) % m;
      Elem as = g.mul(a, s);
      if (as != 0) r[as - 1] = (r[as - 1] + m - 1) % m;
      rows.push_back(std::move(r));
      rhs.push_back(c(a, s));
    }
  auto sol = linalg::solve_mod(rows, n - 1, rhs, m);
  if (!sol) return std::nullopt;
  for (Elem a = 1; a < n; ++a) x.set(a, (*sol)[a - 1]);
  if (differential(x) != c) throw InternalError("is_coboundary: witness does not reproduce the cocycle");
  return x;
}

bool is_qz_trivial(const Cochain& c) {
  if (c.degree() != 2) throw InputError("is_qz_trivial: expected a 2-cochain");
  if (!differential(c).is_zero()) throw InputError("is_qz_trivial: cochain is not a cocycle");
  if (c.group()->order() == 1) return true;
  const std::uint64_t m = pick_modulus(c.group(), c.modulus());
  EdgeModel model(c.group(), m);
  auto w = model.coboundaries();
  for (auto& b : model.bocksteins()) w.push_back(std::move(b));
  ModSpan s(model.unknowns(), m);
  s.insert_all(w);
  return s.contains(model.edge_vector(c));
}

namespace {

std::vector<Elem> conjugation_image(const Subgroup& n, const EmbeddedGroup& emb, Elem g) {
  const auto& big = *n.parent;
  std::vector<Elem> local(big.order(), ~Elem{0});
  for (std::size_t i = 0; i < emb.embedding.size(); ++i) local[emb.embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> image(emb.embedding.size());
  const Elem gi = big.inv(g);
  for (std::size_t i = 0; i < image.size(); ++i) {
    Elem y = local[big.conj(gi, emb.embedding[i])];
    if (y == ~Elem{0}) throw InputError("fixed_subgroup: subgroup is not normal");
    image[i] = y;
  }
  return image;
}

}  // namespace

FinAbGroup fixed_subgroup(const Subgroup& n, const std::vector<Elem>& acting, FixedTarget target,
                          const EngineOptions& opt) {
  EmbeddedGroup emb = as_group(n);
  EngineOptions local = opt;
  local.modulus = opt.modulus ? opt.modulus : n.parent->order();
  H2Data h = h2_qz(emb.group, local);
  std::vector<ModRow> start = h.cocycles;
  if (target == FixedTarget::b0) start = restriction_kernel(h, bicyclic_subgroups(emb.group, opt.reduce_subgroups), opt.threads);
  const EdgeModel& model = *h.model;
  const std::uint64_t m = h.modulus;
  std::vector<LinearCondition> conds;
  for (Elem g : acting) {
    auto image = conjugation_image(n, emb, g);
    LinearCondition c;
    c.target_dim = model.unknowns();
    c.target = h.trivial;
    c.map = [image, &model, m](const ModRow& z) {
      const auto& gens = model.generators();
      ModRow v(model.unknowns(), 0);
      for (Elem a = 1; a < image.size(); ++a)
        for (std::size_t s = 0; s < gens.size(); ++s) {
          std::size_t e = model.edge(a, s);
          v[e] = (model.evaluate(image[a], image[gens[s]], z) + m - z[e]) % m;
        }
      return v;
    };
    conds.push_back(std::move(c));
  }
  auto fixed = pullback_intersection(start, conds, model.unknowns(), m);
  return linalg::subquotient_invariants(fixed, h.trivial, model.unknowns(), m);
}

FinAbGroup fixed_hom(const Subgroup& n, const std::vector<Elem>& acting, std::uint64_t m) {
  EmbeddedGroup emb = as_group(n);
  const std::size_t k = emb.group->order();
  if (k == 1) return FinAbGroup::trivial();
  std::vector<ModRow> start;
  for (const auto& chi : hom_generators(emb.group, m)) start.emplace_back(chi.begin() + 1, chi.end());
  std::vector<LinearCondition> conds;
  for (Elem g : acting) {
    auto image = conjugation_image(n, emb, g);
    LinearCondition c;
    c.target_dim = k - 1;
    c.map = [image, m](const ModRow& chi) {
      ModRow v(chi.size());
      for (std::size_t a = 1; a < image.size(); ++a) {
        std::uint64_t moved = image[a] == 0 ? 0 : chi[image[a] - 1];
        v[a - 1] = (moved + m - chi[a - 1]) % m;
      }
      return v;
    };
    conds.push_back(std::move(c));
  }
  auto fixed = pullback_intersection(start, conds, k - 1, m);
  return linalg::subquotient_invariants(fixed, {}, k - 1, m);
}

}  // namespace bogo
