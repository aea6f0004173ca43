#include "bogomolov/errors.hpp"
#include "bogomolov/kernel_lattice.hpp"
#include "bogomolov/tate.hpp"
#include "corpus.hpp"
#include "instances.hpp"
#include "doctest.h"

using namespace bogo;
using namespace bogo::testing;

namespace {

std::vector<int> parity(const GroupPtr& g) {
  Abelianization ab = abelianization(g);
  std::vector<int> s(g->order(), 1);
  for (Elem x = 0; x < g->order(); ++x)
    if (!ab.coords[x].empty() && ab.invariants.factors()[0] % 2 == 0 && ab.coords[x][0] % 2 == 1) s[x] = -1;
  return s;
}

bool is_cyclic(const Subgroup& h) { return as_group(h).group->exponent() == h.order(); }

struct KernelCase {
  const char* name;
  GroupPtr n, g0;
  Action action;
  std::uint64_t p;
};

std::vector<KernelCase> kernel_cases() {
  return {{"C3:C2", cyclic_group(3), cyclic_group(2), cyclic_action(3, 2, 2), 3},
          {"C5:C4", cyclic_group(5), cyclic_group(4), cyclic_action(5, 4, 2), 5},
          {"C7:C3", cyclic_group(7), cyclic_group(3), cyclic_action(7, 3, 2), 7},
          {"(C3xC3):C2", abelian({3, 3}), cyclic_group(2), inversion33(), 3},
          {"A4", abelian({2, 2}), cyclic_group(3), klein_c3(), 2}};
}

}  // namespace

TEST_CASE("tate groups of rank one lattices") {
  GroupPtr c2 = cyclic_group(2);
  Subgroup all = whole_group(c2);
  GLattice z = trivial_lattice(c2);
  CHECK(tate(-1, all, z).is_trivial());
  CHECK(tate(0, all, z) == FinAbGroup::cyclic(2));
  CHECK(h1_lattice(all, z).is_trivial());
  GLattice sign = character_lattice(c2, {1, -1});
  CHECK(tate(-1, all, sign) == FinAbGroup::cyclic(2));
  CHECK(tate(0, all, sign).is_trivial());
  CHECK(h1_lattice(all, sign) == FinAbGroup::cyclic(2));
  GroupPtr c6 = cyclic_group(6);
  CHECK(tate(0, whole_group(c6), trivial_lattice(c6)) == FinAbGroup::cyclic(6));
  CHECK(tate(0, whole_group(c6), trivial_lattice(c6, 2)) == FinAbGroup::power(6, 2));
}

TEST_CASE("regular lattices are flabby, coflabby and cohomologically trivial") {
  for (const auto& [name, g] : std::vector<Named>{{"S3", symmetric(3)}, {"D4", dihedral(4)}, {"C6", cyclic_group(6)},
                                                   {"Q8", dicyclic(2)}, {"A4", alternating4()}}) {
    CAPTURE(name);
    TateReport r = flabby_report(regular_lattice(g));
    CHECK(r.rank == g->order());
    CHECK(r.is_flabby);
    CHECK(r.is_coflabby);
    CHECK(r.coh_trivial_evidence);
    CHECK(r.rows.size() == conjugacy_representatives(all_subgroups(g)).size());
  }
}

TEST_CASE("permutation lattices are flabby and coflabby") {
  for (const auto& [name, g] : std::vector<Named>{{"S3", symmetric(3)}, {"D4", dihedral(4)}, {"C6", cyclic_group(6)}}) {
    for (const Subgroup& h : conjugacy_representatives(all_subgroups(g))) {
      CAPTURE(name);
      CAPTURE(h.order());
      GLattice m = perm_lattice(g, h);
      CHECK(m.rank() == g->order() / h.order());
      TateReport r = flabby_report(m);
      CHECK(r.is_flabby);
      CHECK(r.is_coflabby);
      // Tate H^0(G, Z[G/H]) = Z/|H|, so only H = 1 is cohomologically trivial.
      CHECK(r.coh_trivial_evidence == (h.order() == 1));
    }
  }
}

TEST_CASE("sign lattice of S3 is neither flabby nor coflabby") {
  GroupPtr s3 = symmetric(3);
  TateReport r = flabby_report(character_lattice(s3, parity(s3)));
  CHECK(!r.is_flabby);
  CHECK(!r.is_coflabby);
  CHECK(!r.coh_trivial_evidence);
}

TEST_CASE("periodicity for cyclic subgroups") {
  std::vector<GLattice> lattices;
  GroupPtr s3 = symmetric(3), d4 = dihedral(4);
  lattices.push_back(character_lattice(s3, parity(s3)));
  lattices.push_back(character_lattice(d4, parity(d4)));
  lattices.push_back(perm_lattice(d4, subgroup_generated(d4, {d4->generators().back()})));
  lattices.push_back(saltman_kernel_lattice(cyclic_group(3), cyclic_group(2), cyclic_action(3, 2, 2)).m);
  for (const GLattice& m : lattices)
    for (const TateRow& row : flabby_report(m).rows) {
      if (!is_cyclic(row.subgroup)) continue;
      CAPTURE(row.subgroup.order());
      CHECK(row.hm1 == row.h1);
    }
}

TEST_CASE("tate groups are invariant under conjugation") {
  GroupPtr s3 = symmetric(3);
  GLattice m = saltman_kernel_lattice(cyclic_group(3), cyclic_group(2), cyclic_action(3, 2, 2)).m;
  GroupPtr g0 = m.group();
  for (const Subgroup& h : all_subgroups(g0))
    for (Elem g = 0; g < g0->order(); ++g) {
      Subgroup c = conjugate(h, g);
      for (int d : {-1, 0}) CHECK(tate(d, c, m) == tate(d, h, m));
      CHECK(h1_lattice(c, m) == h1_lattice(h, m));
    }
  GLattice sign = character_lattice(s3, parity(s3));
  for (const Subgroup& h : all_subgroups(s3))
    for (Elem g = 0; g < s3->order(); ++g) CHECK(tate(0, conjugate(h, g), sign) == tate(0, h, sign));
}

TEST_CASE("lattice construction validates the action") {
  GroupPtr c2 = cyclic_group(2), c3 = cyclic_group(3);
  CHECK_THROWS_AS(GLattice::from_generators(c2, 1, {1}, {{{2}}}), InputError);
  CHECK_THROWS_AS(GLattice::from_generators(c3, 1, {1}, {{{-1}}}), InputError);
  CHECK_THROWS_AS(GLattice::from_generators(c2, 2, {1}, {{{0, 1}}}), InputError);
  CHECK_THROWS_AS(character_lattice(c3, {1, -1, -1}), InputError);
  GLattice swap = GLattice::from_generators(c2, 2, {1}, {{{0, 1}, {1, 0}}});
  CHECK(flabby_report(swap).coh_trivial_evidence);
  GLattice rot = GLattice::from_generators(c3, 2, {1}, {{{0, -1}, {1, -1}}});
  CHECK(rot.action(2) == mat_mul(rot.action(1), rot.action(1)));
}

TEST_CASE("saltman kernel lattices") {
  for (const KernelCase& c : kernel_cases()) {
    CAPTURE(c.name);
    KernelLattice k = saltman_kernel_lattice(c.n, c.g0, c.action);
    CHECK(k.p.rank() == c.n->order() * c.g0->order());
    CHECK(k.m.rank() == k.p.rank());
    CHECK(k.index == c.n->order());
    CHECK(k.quotient == abelianization(c.n).invariants);
    CHECK(k.m.group()->order() == c.g0->order());
    TateReport r = flabby_report(k.m);
    CHECK(r.coh_trivial_evidence);
  }
}

TEST_CASE("prime kernel lattices on the coprime-index branch") {
  for (const KernelCase& c : kernel_cases()) {
    CAPTURE(c.name);
    PrimeKernelLattice k = thm19_kernel_lattice(c.n, c.g0, c.action, c.p);
    CHECK(k.branch == KernelBranch::coprime_index);
    CHECK(!k.vacuous);
    CHECK(k.phi_equivariant);
    CHECK(k.h_p_trivial_on_f);
    CHECK(k.h_p_trivial_on_m);
    CHECK(k.h_p_trivial_on_dual);
    CHECK(k.evidence_pass);
    CHECK(k.evidence.coh_trivial_evidence);
    CHECK(k.f_p.rank() == k.m_p.rank());
  }
}

TEST_CASE("prime kernel lattice with trivial action is vacuous") {
  PrimeKernelLattice k = thm19_kernel_lattice(cyclic_group(3), cyclic_group(2), cyclic_action(3, 2, 1), 3);
  CHECK(k.vacuous);
  CHECK(k.h_p.order() == 2);
  CHECK(to_json(k)["evidence"] == "vacuous-pass");
}

TEST_CASE("prime kernel lattice branches") {
  // C3 acting unipotently on C3 x C3: p divides [G0 : H_p] and the Sylow subgroup is cyclic.
  GroupPtr n = abelian({3, 3});
  std::vector<Elem> u(9);
  for (Elem x = 0; x < 9; ++x) u[x] = x % 3 + 3 * ((x % 3 + x / 3) % 3);
  Action a = extend_action(n, cyclic_group(3), {1}, {u});
  PrimeKernelLattice k = thm19_kernel_lattice(n, cyclic_group(3), a, 3);
  CHECK(k.branch == KernelBranch::cyclic_sylow);
  CHECK(to_json(k)["evidence"] == "asserted");
  CHECK(!k.evidence.is_flabby);
  CHECK_THROWS_AS(thm19_kernel_lattice(cyclic_group(3), cyclic_group(2), cyclic_action(3, 2, 2), 5), InputError);
}
