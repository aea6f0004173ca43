#include <random>

#include "bogomolov/certificate.hpp"
#include "bogomolov/cochain.hpp"
#include "bogomolov/cohomology.hpp"
#include "doctest.h"

using namespace bogo;

namespace {

using Factors = std::vector<std::uint64_t>;

std::uint64_t ipow64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t order_of(const FinAbGroup& g) {
  std::uint64_t o = 1;
  for (auto f : g.factors()) o *= f;
  return o;
}

unsigned choose2(unsigned n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("family structure: orders, class two, center") {
  for (auto f : {CentralFamily::saltman(2, 1), CentralFamily::thm54(2, 1), CentralFamily::saltman(3, 1)}) {
    CAPTURE(f.name());
    CHECK(f.radical().size() == 1);
    std::mt19937 rng(3);
    auto rand_elem = [&] {
      CentralFamily::Element x = f.identity();
      for (std::size_t i = 0; i < f.rank(); ++i) x = f.mul(x, f.generator(i));
      for (int k = 0; k < 6; ++k) {
        auto g = f.generator(rng() % f.rank());
        x = rng() % 2 ? f.mul(x, g) : f.mul(x, f.inv(g));
      }
      return x;
    };
    for (int t = 0; t < 200; ++t) {
      auto x = rand_elem(), y = rand_elem(), z = rand_elem();
      CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      CHECK(f.mul(x, f.inv(x)) == f.identity());
      auto c = f.commutator(x, y);
      CHECK(c.a == CentralFamily::Abelian(f.rank(), 0));
      CHECK(f.commutator(c, z) == f.identity());
      // beta(a, b) realizes the commutator in the central part.
      CHECK(c.c == f.commutator_form(x.a, y.a));
    }
  }
  CentralFamily s = CentralFamily::saltman(2, 1);
  CHECK(s.log_order() == 9);
  CHECK(s.order() == 512);
  CHECK(order_of(s.central_invariants()) == 32);
}

TEST_CASE("materialized table of a small family") {
  CentralFamily s = CentralFamily::saltman(2, 1);
  auto t = s.to_table();
  REQUIRE(t.group->order() == 512);
  CHECK(center(t.group).order() == 32);
  CHECK(derived_subgroup(t.group).order() == 32);
  CHECK(t.group->exponent() == 4);
  // The Schur cover of C2 x C2 is a group of order 8 with H2 of its quotient Z/2.
  CentralFamily cover = CentralFamily::schur_cover(2, {1, 1});
  auto ct = cover.to_table();
  CHECK(ct.group->order() == 8);
  CHECK(!ct.group->is_abelian());
}

TEST_CASE("five-term orders for saltman families") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}, {5, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    TransgressionImage t = transgression_image(CentralFamily::saltman(p, n));
    CHECK(order_of(t.h2_quotient) == ipow64(p, choose2(n + 3)));
    CHECK(order_of(t.h1_fixed) == ipow64(p, choose2(n + 3) - n));
    CHECK(t.psi == FinAbGroup::from_cyclic_orders(Factors(n, p)));
    CHECK(t.psi_prime == t.h1_fixed);
  }
}

TEST_CASE("five-term orders for the second family") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    const std::uint64_t q = ipow64(p, n);
    TransgressionImage t = transgression_image(CentralFamily::thm54(p, n));
    CHECK(t.h2_quotient == FinAbGroup::from_cyclic_orders(Factors(6, q)));
    CHECK(t.h1_fixed == FinAbGroup::from_cyclic_orders(Factors(5, q)));
    CHECK(t.psi == FinAbGroup::from_cyclic_orders({q}));
  }
}

TEST_CASE("cover cocycle antisymmetrizes to the commutator form") {
  CentralFamily f = CentralFamily::thm54(2, 2);
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto a = f.abelian_from_index(rng() % f.abelian_size());
    auto b = f.abelian_from_index(rng() % f.abelian_size());
    std::vector<std::uint64_t> diff;
    for (auto [i, j] : f.pairs()) {
      const std::uint64_t m = f.pair_modulus(f.pair_index(i, j));
      diff.push_back((fij_eval(f, i, j, a, b) + m - fij_eval(f, i, j, b, a)) % m);
    }
    CHECK(f.reduce(f.embed(diff)) == f.commutator_form(a, b));
  }
}

TEST_CASE("saltman certificates") {
  struct Case {
    std::uint64_t p;
    unsigned n;
  };
  for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
    CAPTURE(c.p);
    CAPTURE(c.n);
    FamilyCertificate cert = b0_lower_bound_certificate(CentralFamily::saltman(c.p, c.n));
    CHECK(cert.certified);
    CHECK(cert.route_a_pass);
    CHECK(!cert.wedge.witness);
    CHECK(cert.wedge.pairs_enumerated == ipow64(c.p, 2 * (c.n + 3)));
    CHECK(cert.expected_pairs == cert.wedge.pairs_enumerated);
    CHECK(cert.transgression.psi == FinAbGroup::from_cyclic_orders(Factors(c.n, c.p)));
    CHECK(cert.center_is_central_part);
  }
  FamilyCertificate s21 = b0_lower_bound_certificate(CentralFamily::saltman(2, 1));
  REQUIRE(s21.h2_quotient_engine);
  CHECK(*s21.h2_quotient_engine == s21.transgression.h2_quotient);
}

TEST_CASE("second-family certificates need the coboundary route at n = 2") {
  FamilyCertificate c1 = b0_lower_bound_certificate(CentralFamily::thm54(2, 1));
  CHECK(c1.certified);
  CHECK(c1.transgression.psi == FinAbGroup::from_cyclic_orders({2}));
  REQUIRE(c1.route_b);
  CHECK(c1.route_b->pass);
  CHECK(c1.wedge.pairs_enumerated == 256);

  FamilyCertificate c2 = b0_lower_bound_certificate(CentralFamily::thm54(2, 2));
  CHECK(c2.certified);
  CHECK(c2.transgression.psi == FinAbGroup::from_cyclic_orders({4}));
  CHECK(!c2.route_a_pass);
  REQUIRE(c2.wedge.witness);
  CHECK(c2.wedge.witness->first == CentralFamily::Abelian{2, 0, 0, 0});
  CHECK(c2.wedge.witness->second == CentralFamily::Abelian{0, 2, 0, 0});
  REQUIRE(c2.route_b);
  CHECK(c2.route_b->pass);
  CHECK(c2.certified_by == "route-b");
  CHECK(c2.wedge.pairs_enumerated == 65536);
  // The witness class itself passes the coboundary check.
  ClassCheck w = coboundary_check_54(CentralFamily::thm54(2, 2), c2.wedge.witness->first, c2.wedge.witness->second);
  CHECK(w.pass);
}

TEST_CASE("deduplication preserves the verdict") {
  CentralFamily f = CentralFamily::thm54(2, 1);
  RouteB dedup = route_b(f, true);
  RouteB full = route_b(f, false);
  CHECK(dedup.pass == full.pass);
  CHECK(full.checked_classes == full.distinct_images);
  CHECK(dedup.checked_classes <= full.checked_classes);
  CHECK(dedup.pairs_enumerated == 256);
}

TEST_CASE("coboundary check detects a nontrivial restriction") {
  CentralFamily cover = CentralFamily::schur_cover(2, {1, 1, 1, 1});
  ClassCheck c = coboundary_check_54(cover, {1, 0, 0, 0}, {0, 1, 0, 0});
  CHECK(!c.pass);
  REQUIRE(!c.failing.empty());
  CHECK(c.failing.front() == std::pair<std::size_t, std::size_t>{0, 1});
  ClassCheck cyclic = coboundary_check_54(cover, {1, 1, 0, 0}, {1, 1, 0, 0});
  CHECK(cyclic.pass);
}

TEST_CASE("route B agrees with evaluation on materialized bicyclic subgroups") {
  CentralFamily f = CentralFamily::thm54(2, 1);
  auto t = f.to_table();
  RouteB r = route_b(f, true);
  REQUIRE(r.pass);
  auto lift = [&](const CentralFamily::Abelian& a) {
    for (Elem x = 0; x < t.elements.size(); ++x)
      if (t.elements[x].a == a && f.central_is_zero(t.elements[x].c)) return x;
    return Elem{0};
  };
  for (const auto& cls : r.classes) {
    Subgroup a = subgroup_generated(t.group, {lift(cls.I), lift(cls.J)});
    EmbeddedGroup emb = as_group(a);
    CHECK(emb.group->is_abelian());
    const std::uint64_t m = std::max<std::uint64_t>(emb.group->order(), 2);
    for (auto [i, j] : f.pairs()) {
      Cochain c(emb.group, 2, m);
      const std::uint64_t scale = m / f.pair_modulus(f.pair_index(i, j));
      for (Elem x = 1; x < emb.group->order(); ++x)
        for (Elem y = 1; y < emb.group->order(); ++y)
          c.set(x, y, fij_eval(f, i, j, t.elements[emb.embedding[x]].a, t.elements[emb.embedding[y]].a) * scale % m);
      CHECK(is_qz_trivial(c) == cls.pass);
    }
  }
}
