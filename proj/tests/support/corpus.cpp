#include "corpus.hpp"

#include <functional>
#include <numeric>

namespace bogo::testing {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (; e; --e) r = r * b % m;
  return r;
}

GroupPtr from_mul(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = static_cast<Elem>(mul(x, y));
  return FiniteGroup::from_table(rows);
}

}  // namespace

GroupPtr metacyclic(std::uint32_t m, std::uint32_t n, std::uint32_t t, std::uint32_t r) {
  return from_mul(m * n, [=](std::size_t x, std::size_t y) {
    const std::uint64_t k = x % m, e = x / m, l = y % m, f = y / m;
    std::uint64_t a = (k + powmod(r, e, m) * l) % m, b = e + f;
    if (b >= n) {
      b -= n;
      a = (a + powmod(r, b, m) * t) % m;
    }
    return a + m * b;
  });
}

GroupPtr dihedral(std::uint32_t n) { return metacyclic(n, 2, 0, n - 1); }
GroupPtr dicyclic(std::uint32_t n) { return metacyclic(2 * n, 2, n, 2 * n - 1); }

GroupPtr heisenberg(std::uint32_t p) {
  return from_mul(p * p * p, [=](std::size_t x, std::size_t y) {
    const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
    const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  });
}

GroupPtr symmetric(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n), tr(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc[n - 1] = 0;
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  return from_permutations({cyc, tr});
}

GroupPtr alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

GroupPtr abelian(const std::vector<std::uint32_t>& orders) {
  GroupPtr g = trivial_group();
  for (auto o : orders) g = direct_product(g, cyclic_group(o)).group;
  return g;
}

GroupPtr product(const GroupPtr& a, const GroupPtr& b) { return direct_product(a, b).group; }

std::vector<Named> b0_corpus() {
  return {
      {"C1", trivial_group()},
      {"C2xC2", abelian({2, 2})},
      {"C12", abelian({12})},
      {"C2^3", abelian({2, 2, 2})},
      {"C4xC2", abelian({4, 2})},
      {"C3xC3", abelian({3, 3})},
      {"C4xC4", abelian({4, 4})},
      {"S3", symmetric(3)},
      {"D4", dihedral(4)},
      {"Q8", dicyclic(2)},
      {"D5", dihedral(5)},
      {"A4", alternating4()},
      {"Dic3", dicyclic(3)},
      {"D6", dihedral(6)},
      {"D8", dihedral(8)},
      {"Q16", dicyclic(4)},
      {"SD16", metacyclic(8, 2, 0, 3)},
      {"M16", metacyclic(8, 2, 0, 5)},
      {"C4:C4", metacyclic(4, 4, 0, 3)},
      {"C2xD4", product(abelian({2}), dihedral(4))},
      {"C2xQ8", product(abelian({2}), dicyclic(2))},
      {"C5:C4", metacyclic(5, 4, 0, 2)},
      {"C7:C3", metacyclic(7, 3, 0, 2)},
      {"C3xS3", product(abelian({3}), symmetric(3))},
      {"S4", symmetric(4)},
      {"Heis27", heisenberg(3)},
      {"27exp9", metacyclic(9, 3, 0, 4)},
      {"C2^5", abelian({2, 2, 2, 2, 2})},
      {"C4xQ8", product(abelian({4}), dicyclic(2))},
      {"D16", dihedral(16)},
  };
}

}  // namespace bogo::testing
