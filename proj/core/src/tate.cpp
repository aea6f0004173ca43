#include "bogomolov/tate.hpp"

#include "bogomolov/errors.hpp"
#include "bogomolov/smith.hpp"
#include "parallel.hpp"

namespace bogo {

using linalg::BigInt;
using linalg::BigMatrix;

namespace {

void check_subgroup(const Subgroup& h, const GLattice& m) {
  if (h.parent != m.group()) throw InputError("tate: subgroup of a different group than the lattice");
}

LatticeMatrix norm_matrix(const Subgroup& h, const GLattice& m) {
  const std::size_t r = m.rank();
  LatticeMatrix n(r, std::vector<std::int64_t>(r, 0));
  for (Elem x : h.elements)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) n[i][j] += m.action(x)[i][j];
  return n;
}

/// Invariants of span(basis) / span(gens); every generator must lie in span(basis).
FinAbGroup quotient_of(const BigMatrix& basis, const std::vector<std::vector<BigInt>>& gens) {
  std::vector<std::vector<std::int64_t>> rel;
  for (const auto& v : gens) {
    auto c = linalg::coordinates_in_hermite(basis, v);
    if (!c) throw InternalError("tate: generator outside the ambient lattice");
    std::vector<std::int64_t> row;
    for (const auto& x : *c) row.push_back(linalg::to_int64(x));
    rel.push_back(std::move(row));
  }
  return linalg::abelian_invariants(rel, basis.size());
}

std::vector<BigInt> column(const LatticeMatrix& a, std::size_t c, std::int64_t diag = 0) {
  std::vector<BigInt> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i][c] - (i == c ? diag : 0);
  return v;
}

}  // namespace

FinAbGroup tate(int degree, const Subgroup& h, const GLattice& m) {
  check_subgroup(h, m);
  const std::size_t r = m.rank();
  const LatticeMatrix n = norm_matrix(h, m);
  if (degree == -1) {
    BigMatrix ker = linalg::integer_kernel(linalg::to_big(n), r);
    std::vector<std::vector<BigInt>> gens;
    for (Elem s : h.generators)
      for (std::size_t c = 0; c < r; ++c) gens.push_back(column(m.action(s), c, 1));
    return quotient_of(ker, gens);
  }
  if (degree == 0) {
    BigMatrix rows;
    for (Elem s : h.generators) {
      BigMatrix d = linalg::to_big(m.action(s));
      for (std::size_t i = 0; i < r; ++i) d[i][i] -= 1;
      rows.insert(rows.end(), d.begin(), d.end());
    }
    BigMatrix fixed = linalg::integer_kernel(rows, r);
    std::vector<std::vector<BigInt>> gens;
    for (std::size_t c = 0; c < r; ++c) gens.push_back(column(n, c));
    return quotient_of(fixed, gens);
  }
  throw InputError("tate: degree must be -1 or 0");
}

FinAbGroup h1_lattice(const Subgroup& h, const GLattice& m, std::size_t cap) {
  check_subgroup(h, m);
  const std::size_t r = m.rank(), k = h.elements.size();
  if (k * r > cap)
    throw SizeError("h1_lattice: |H| * rank = " + std::to_string(k * r) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::size_t> pos(m.group()->order(), SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) pos[h.elements[i]] = i;
  // Unknown f(x)_c at x_pos * r + c. Constraints f(1) = 0 and f(sx) - f(s) - s f(x) = 0 for generators s.
  BigMatrix rows;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<BigInt> row(k * r, 0);
    row[pos[0] * r + i] = 1;
    rows.push_back(std::move(row));
  }
  for (Elem s : h.generators)
    for (std::size_t xi = 0; xi < k; ++xi) {
      const Elem x = h.elements[xi];
      const std::size_t sx = pos[m.group()->mul(s, x)], si = pos[s];
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigInt> row(k * r, 0);
        row[sx * r + i] += 1;
        row[si * r + i] -= 1;
        for (std::size_t c = 0; c < r; ++c) row[xi * r + c] -= m.action(s)[i][c];
        rows.push_back(std::move(row));
      }
    }
  BigMatrix z1 = linalg::integer_kernel(rows, k * r);
  std::vector<std::vector<BigInt>> principal;
  for (std::size_t c = 0; c < r; ++c) {
    std::vector<BigInt> v(k * r, 0);
    for (std::size_t xi = 0; xi < k; ++xi)
      for (std::size_t i = 0; i < r; ++i) v[xi * r + i] = m.action(h.elements[xi])[i][c] - (i == c ? 1 : 0);
    principal.push_back(std::move(v));
  }
  return quotient_of(z1, principal);
}

TateReport flabby_report(const GLattice& m, std::size_t group_cap, unsigned threads) {
  const GroupPtr& g = m.group();
  if (g->order() > group_cap)
    throw SizeError("flabby_report: group order " + std::to_string(g->order()) + " exceeds the cap " +
                    std::to_string(group_cap));
  TateReport rep;
  rep.rank = m.rank();
  rep.group_order = g->order();
  std::vector<Subgroup> subs = conjugacy_representatives(all_subgroups(g));
  rep.rows.resize(subs.size());
  detail::parallel_for(subs.size(), threads, [&](std::size_t i) {
    rep.rows[i] = TateRow{subs[i], tate(-1, subs[i], m), tate(0, subs[i], m), h1_lattice(subs[i], m)};
  });
  for (const auto& row : rep.rows) {
    rep.is_flabby = rep.is_flabby && row.hm1.is_trivial();
    rep.is_coflabby = rep.is_coflabby && row.h1.is_trivial();
    rep.coh_trivial_evidence =
        rep.coh_trivial_evidence && row.hm1.is_trivial() && row.h0.is_trivial() && row.h1.is_trivial();
  }
  return rep;
}

void to_json(nlohmann::json& j, const TateReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back(nlohmann::json{{"subgroup_order", row.subgroup.order()},
                                  {"subgroup_elements", row.subgroup.elements},
                                  {"tate_minus1", nlohmann::json(row.hm1)},
                                  {"tate_0", nlohmann::json(row.h0)},
                                  {"h1", nlohmann::json(row.h1)}});
  j = {{"rank", r.rank},
       {"group_order", r.group_order},
       {"subgroups", rows},
       {"is_flabby", r.is_flabby},
       {"is_coflabby", r.is_coflabby},
       {"coh_trivial_evidence", r.coh_trivial_evidence}};
}

}  // namespace bogo
