#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bogo::testing {

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("oracle: entry overflow");
  return static_cast<std::int64_t>(v);
}

/// Nonzero diagonal of a Smith form of the columns-as-generators matrix a
/// (rows x cols), by plain elimination: unit pivots first, then gcd steps.
std::vector<std::int64_t> smith(Dense a) {
  std::vector<std::int64_t> diag;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  auto eliminate = [&](std::size_t pr, std::size_t pc) {
    // Pivot a[pr][pc] divides every entry of its row and column here.
    const std::int64_t p = a[pr][pc];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || row_done[r] || a[r][pc] == 0) continue;
      const std::int64_t q = a[r][pc] / p;
      for (std::size_t c = 0; c < cols; ++c)
        if (!col_done[c] && a[pr][c] != 0) a[r][c] = checked(static_cast<__int128>(a[r][c]) - static_cast<__int128>(q) * a[pr][c]);
    }
    row_done[pr] = col_done[pc] = true;
    diag.push_back(std::llabs(p));
  };
  // Unit pivots: clearing the column is enough since column operations with a unit pivot clear the row.
  for (bool found = true; found;) {
    found = false;
    for (std::size_t r = 0; r < rows && !found; ++r) {
      if (row_done[r]) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!col_done[c] && (a[r][c] == 1 || a[r][c] == -1)) {
          eliminate(r, c);
          found = true;
          break;
        }
    }
  }
  // Remaining block: full Smith reduction on the small leftover matrix.
  std::vector<std::size_t> rr, cc;
  for (std::size_t r = 0; r < rows; ++r)
    if (!row_done[r]) rr.push_back(r);
  for (std::size_t c = 0; c < cols; ++c)
    if (!col_done[c]) cc.push_back(c);
  Dense b(rr.size(), std::vector<std::int64_t>(cc.size()));
  for (std::size_t i = 0; i < rr.size(); ++i)
    for (std::size_t j = 0; j < cc.size(); ++j) b[i][j] = a[rr[i]][cc[j]];
  const std::size_t m = b.size(), n = m ? b[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (b[i][j] != 0 && (pi == m || std::llabs(b[i][j]) < std::llabs(b[pi][pj]))) pi = i, pj = j;
      if (pi == m) goto done;
      std::swap(b[t], b[pi]);
      for (auto& row : b) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const std::int64_t q = b[i][t] / b[t][t];
        for (std::size_t j = t; j < n; ++j) b[i][j] = checked(static_cast<__int128>(b[i][j]) - static_cast<__int128>(q) * b[t][j]);
        clean = clean && b[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const std::int64_t q = b[t][j] / b[t][t];
        for (std::size_t i = t; i < m; ++i) b[i][j] = checked(static_cast<__int128>(b[i][j]) - static_cast<__int128>(q) * b[i][t]);
        clean = clean && b[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (b[i][j] % b[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) b[t][k] += b[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(b[t][t]));
  }
done:
  return diag;
}

/// Invariant factors of the torsion of Z^rows / (column span), from any diagonal form.
std::vector<std::uint64_t> torsion(const std::vector<std::int64_t>& diag) {
  // Re-normalize to a divisibility chain prime by prime.
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> values;
  for (auto d : diag)
    if (d > 1) values.push_back(static_cast<std::uint64_t>(d));
  for (auto v : values) {
    for (std::uint64_t p = 2; p * p <= v; ++p)
      if (v % p == 0) {
        primes.push_back(p);
        while (v % p == 0) v /= p;
      }
    if (v > 1) primes.push_back(v);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<std::uint64_t> out;
  std::vector<std::vector<std::uint64_t>> parts;
  for (auto p : primes) {
    std::vector<std::uint64_t> pp;
    for (auto v : values) {
      std::uint64_t q = 1;
      while (v % p == 0) v /= p, q *= p;
      if (q > 1) pp.push_back(q);
    }
    std::sort(pp.rbegin(), pp.rend());
    parts.push_back(pp);
  }
  std::size_t len = 0;
  for (const auto& pp : parts) len = std::max(len, pp.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t f = 1;
    for (const auto& pp : parts)
      if (i < pp.size()) f *= pp[i];
    out.push_back(f);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Columns: d3 of every normalized 3-chain [x|y|z], as vectors over the
/// normalized 2-chains [a|b] (a, b != e) indexed (a - 1)(n - 1) + (b - 1).
Dense boundary3(const GroupPtr& g) {
  const std::size_t n = g->order(), k = n - 1;
  Dense cols;
  auto idx = [&](Elem a, Elem b) { return (a - 1) * k + (b - 1); };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      for (Elem z = 1; z < n; ++z) {
        std::vector<std::int64_t> v(k * k, 0);
        // d[x|y|z] = [y|z] - [xy|z] + [x|yz] - [x|y], dropping identity entries.
        auto add = [&](Elem a, Elem b, int s) {
          if (a != 0 && b != 0) v[idx(a, b)] += s;
        };
        add(y, z, 1);
        add(g->mul(x, y), z, -1);
        add(x, g->mul(y, z), 1);
        add(x, y, -1);
        cols.push_back(std::move(v));
      }
  return cols;
}

Dense transpose(const Dense& cols, std::size_t rows) {
  Dense a(rows, std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) a[r][c] = cols[c][r];
  return a;
}

}  // namespace

std::vector<std::uint64_t> oracle_schur_multiplier(const GroupPtr& g) {
  const std::size_t k = g->order() - 1;
  if (k == 0) return {};
  return torsion(smith(transpose(boundary3(g), k * k)));
}

std::vector<std::uint64_t> oracle_bogomolov(const GroupPtr& g) {
  const std::size_t n = g->order(), k = n - 1;
  if (k == 0) return {};
  Dense cols = boundary3(g);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (g->mul(x, y) == g->mul(y, x)) {
        std::vector<std::int64_t> v(k * k, 0);
        v[(x - 1) * k + (y - 1)] += 1;
        v[(y - 1) * k + (x - 1)] -= 1;
        cols.push_back(std::move(v));
      }
  return torsion(smith(transpose(cols, k * k)));
}

}  // namespace bogo::testing
