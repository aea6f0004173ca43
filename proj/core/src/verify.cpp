#include "bogomolov/verify.hpp"

#include <numeric>

#include "bogomolov/errors.hpp"

namespace bogo {

using linalg::ModRow;
using linalg::ModSpan;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::vacuous_pass:
      return "vacuous-pass";
    default:
      return "fail";
  }
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check", r.check}, {"verdict", to_string(r.verdict)}, {"details", r.details}};
}

namespace {

Verdict compare(bool ok, bool all_trivial) {
  if (!ok) return Verdict::fail;
  return all_trivial ? Verdict::vacuous_pass : Verdict::pass;
}

// Edge vector (in the model of `local`) of the restriction of z.
ModRow restrict_edges(const EdgeModel& gm, const EdgeModel& local, const std::vector<Elem>& emb, const ModRow& z) {
  const auto& gens = local.generators();
  ModRow v(local.unknowns(), 0);
  for (Elem a = 1; a < emb.size(); ++a)
    for (std::size_t s = 0; s < gens.size(); ++s) v[local.edge(a, s)] = gm.evaluate(emb[a], emb[gens[s]], z);
  return v;
}

EngineOptions with_modulus(const EngineOptions& opt, std::uint64_t m) {
  EngineOptions o = opt;
  o.modulus = m;
  return o;
}

}  // namespace

VerificationReport verify_product(const GroupPtr& g1, const GroupPtr& g2, const EngineOptions& opt) {
  Product p = direct_product(g1, g2);
  const std::uint64_t m = p.group->order();
  B0Result whole = b0(p.group, opt);
  EngineOptions local = with_modulus(opt, m);
  VerificationReport r;
  r.check = "thm1.4";
  bool realized = true;
  FinAbGroup rhs;
  nlohmann::json factors = nlohmann::json::array();
  for (const Subgroup* f : {&p.left, &p.right}) {
    EmbeddedGroup emb = as_group(*f);
    B0Result part = b0(emb.group, local);
    rhs = rhs.direct_sum(part.invariants);
    factors.push_back(part.invariants);
    if (part.h2.model->unknowns() == 0) continue;
    ModSpan kernel(part.h2.model->unknowns(), m);
    kernel.insert_all(part.kernel);
    for (const auto& z : whole.kernel)
      if (!kernel.contains(restrict_edges(*whole.h2.model, *part.h2.model, emb.embedding, z))) realized = false;
  }
  bool equal = whole.invariants == rhs;
  r.details = {{"lhs", whole.invariants},
               {"rhs", rhs},
               {"rhs_factors", factors},
               {"restriction_realizes", realized},
               {"order", p.group->order()}};
  r.verdict = compare(equal && realized, whole.invariants.is_trivial() && rhs.is_trivial());
  return r;
}

VerificationReport verify_coprime_semidirect(const GroupPtr& n, const GroupPtr& g0,
                                             const std::vector<std::vector<Elem>>& action, unsigned q,
                                             const EngineOptions& opt) {
  if (q != 1 && q != 2) throw InputError("verify_coprime_semidirect: q must be 1 or 2");
  if (std::gcd(n->order(), g0->order()) != 1) throw InputError("verify_coprime_semidirect: |N| and |G0| are not coprime");
  Product s = semidirect_product(n, g0, action);
  const std::uint64_t m = s.group->order();
  if (m > opt.cap) throw SizeError("semidirect product exceeds the engine cap");
  EngineOptions local = with_modulus(opt, m);
  const auto& acting = s.right.generators;
  VerificationReport r;
  r.check = q == 1 ? "thm2.7[q=1]" : "thm2.7[q=2]";
  if (q == 1) {
    FinAbGroup lhs = h1(s.group, m);
    FinAbGroup fixed = fixed_hom(s.left, acting, m);
    FinAbGroup other = h1(g0, m);
    FinAbGroup rhs = fixed.direct_sum(other);
    r.details = {{"lhs", lhs}, {"rhs", rhs}, {"fixed_part", fixed}, {"complement_part", other}, {"modulus", m}};
    r.verdict = compare(lhs == rhs, lhs.is_trivial() && rhs.is_trivial());
    return r;
  }
  H2Data h = h2_qz(s.group, local);
  FinAbGroup fixed = fixed_subgroup(s.left, acting, FixedTarget::h2, local);
  FinAbGroup other = h2_qz(as_group(s.right).group, local).h2_qz;
  FinAbGroup rhs = fixed.direct_sum(other);
  FinAbGroup kernel = restriction_kernel_invariants(h, {s.left, s.right}, opt.threads);

  FinAbGroup b0_lhs = b0(s.group, local).invariants;
  FinAbGroup b0_fixed = fixed_subgroup(s.left, acting, FixedTarget::b0, local);
  FinAbGroup b0_other = b0(as_group(s.right).group, local).invariants;
  FinAbGroup b0_rhs = b0_fixed.direct_sum(b0_other);

  bool ok = h.h2_qz == rhs && kernel.is_trivial() && b0_lhs == b0_rhs;
  r.details = {{"lhs", h.h2_qz},
               {"rhs", rhs},
               {"fixed_part", fixed},
               {"complement_part", other},
               {"restriction_kernel", kernel},
               {"b0_lhs", b0_lhs},
               {"b0_rhs", b0_rhs},
               {"modulus", m}};
  r.verdict = compare(ok, h.h2_qz.is_trivial() && rhs.is_trivial());
  return r;
}

VerificationReport verify_frobenius(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action,
                                    const EngineOptions& opt) {
  if (action.size() != g0->order()) throw InputError("verify_frobenius: one automorphism per element required");
  for (Elem g = 1; g < g0->order(); ++g)
    for (Elem x = 1; x < n->order(); ++x)
      if (action[g][x] == x) throw InputError("verify_frobenius: action is not fixed-point-free");
  Product s = semidirect_product(n, g0, action);
  const std::uint64_t m = s.group->order();
  EngineOptions local = with_modulus(opt, m);
  FinAbGroup lhs = b0(s.group, local).invariants;
  FinAbGroup rhs = fixed_subgroup(s.left, s.right.generators, FixedTarget::b0, local);
  FinAbGroup h2_lhs = h2_qz(s.group, local).h2_qz;
  VerificationReport r;
  r.check = "thm2.8";
  r.details = {{"lhs", lhs}, {"rhs", rhs}, {"h2", h2_lhs}, {"order", m}};
  r.verdict = compare(lhs == rhs, lhs.is_trivial() && rhs.is_trivial());
  return r;
}

VerificationReport check_coprime_injectivity(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                             const EngineOptions& opt) {
  std::uint64_t d = 0;
  nlohmann::json indices = nlohmann::json::array();
  for (const auto& s : subgroups) {
    if (s.parent != g) throw InputError("check_coprime_injectivity: subgroup of a different group");
    std::uint64_t idx = g->order() / s.order();
    indices.push_back(idx);
    d = std::gcd(d, idx);
  }
  if (d != 1) throw InputError("check_coprime_injectivity: subgroup indices are not coprime");
  H2Data h = h2_qz(g, opt);
  FinAbGroup kernel = restriction_kernel_invariants(h, subgroups, opt.threads);
  VerificationReport r;
  r.check = "lemma2.1";
  r.details = {{"h2", h.h2_qz}, {"kernel", kernel}, {"indices", indices}};
  r.verdict = compare(kernel.is_trivial(), h.h2_qz.is_trivial());
  return r;
}

std::vector<Subgroup> sylow_family(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (auto [p, e] : factorize(g->order())) out.push_back(sylow_subgroup(g, p));
  if (out.empty()) out.push_back(whole_group(g));
  return out;
}

}  // namespace bogo
