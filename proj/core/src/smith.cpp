#include "bogomolov/smith.hpp"

#include <algorithm>
#include <limits>

#include "bogomolov/errors.hpp"

namespace bogo::linalg {

namespace {

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a - q * b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// s*a + t*b = g >= 0
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

class SmithWork {
 public:
  SmithWork(BigMatrix m, bool track) : d_(std::move(m)), track_(track) {
    rows_ = d_.size();
    cols_ = rows_ ? d_[0].size() : 0;
    if (track_) {
      u_ = identity(rows_);
      v_ = identity(cols_);
      vi_ = identity(cols_);
    }
  }

  void run() {
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t t = 0; t < n; ++t) {
      for (;;) {
        if (!bring_min_to(t)) return;
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (d_[i][t] == 0) continue;
          BigInt q = d_[i][t] / d_[t][t];
          add_row(i, t, -q);
          if (d_[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (d_[t][j] == 0) continue;
          BigInt q = d_[t][j] / d_[t][t];
          add_col(j, t, -q);
          if (d_[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (d_[i][j] % d_[t][t] != 0) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (d_[t][t] < 0) negate_row(t);
    }
  }

  BigMatrix d_, u_, v_, vi_;

 private:
  bool bring_min_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (d_[i][j] == 0) continue;
        BigInt a = abs(d_[i][j]);
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(d_[a], d_[b]);
    if (track_) std::swap(u_[a], u_[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (auto& r : d_) std::swap(r[a], r[b]);
    if (track_) {
      for (auto& r : v_) std::swap(r[a], r[b]);
      std::swap(vi_[a], vi_[b]);
    }
  }
  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (d_[src][j] != 0) d_[dst][j] += q * d_[src][j];
    if (track_)
      for (std::size_t j = 0; j < rows_; ++j)
        if (u_[src][j] != 0) u_[dst][j] += q * u_[src][j];
  }
  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (d_[i][src] != 0) d_[i][dst] += q * d_[i][src];
    if (track_) {
      for (std::size_t i = 0; i < cols_; ++i)
        if (v_[i][src] != 0) v_[i][dst] += q * v_[i][src];
      for (std::size_t j = 0; j < cols_; ++j)
        if (vi_[dst][j] != 0) vi_[src][j] -= q * vi_[dst][j];
    }
  }
  void negate_row(std::size_t r) {
    for (auto& x : d_[r]) x = -x;
    if (track_)
      for (auto& x : u_[r]) x = -x;
  }

  bool track_;
  std::size_t rows_ = 0, cols_ = 0;
};

}  // namespace

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw SizeError("integer coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

BigMatrix to_big(const IntMatrix& m) {
  if (m.modulus()) throw InputError("smith_normal_form: matrix must not carry a modulus");
  BigMatrix b(m.rows(), std::vector<BigInt>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto [c, v] : m.row(r)) b[r][c] = v;
  return b;
}

BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m) {
  BigMatrix b;
  b.reserve(m.size());
  for (const auto& r : m) b.emplace_back(r.begin(), r.end());
  return b;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  BigMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

BigInt determinant(const BigMatrix& square) {
  // Bareiss fraction-free elimination.
  BigMatrix a = square;
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

SmithForm smith_normal_form(const BigMatrix& m) {
  SmithWork w(m, true);
  w.run();
  SmithForm out;
  out.diag_form = std::move(w.d_);
  out.left = std::move(w.u_);
  out.right = std::move(w.v_);
  out.right_inv = std::move(w.vi_);
  const std::size_t n = std::min(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(out.diag_form[i][i]);
  if (!m.empty() && !m[0].empty()) {
    if (multiply(multiply(out.left, m), out.right) != out.diag_form)
      throw InternalError("smith_normal_form: U*M*V != D");
  }
  return out;
}

std::vector<BigInt> smith_diagonal(BigMatrix m) {
  const std::size_t n = std::min(m.size(), m.empty() ? 0 : m[0].size());
  SmithWork w(std::move(m), false);
  w.run();
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(w.d_[i][i]);
  return out;
}

FinAbGroup abelian_invariants(const IntMatrix& relations) {
  return abelian_invariants(relations.to_dense(), relations.cols());
}

FinAbGroup abelian_invariants(const std::vector<std::vector<std::int64_t>>& relations, std::size_t ngens) {
  if (ngens == 0) return FinAbGroup::trivial();
  // Hermite first: shrinks tall relation matrices to at most ngens rows.
  BigMatrix h = hermite_normal_form(to_big(relations), ngens);
  std::vector<std::uint64_t> orders;
  std::size_t nonzero = 0;
  if (!h.empty()) {
    for (const auto& d : smith_diagonal(h)) {
      if (d == 0) continue;
      ++nonzero;
      orders.push_back(static_cast<std::uint64_t>(to_int64(d)));
    }
  }
  for (std::size_t i = nonzero; i < ngens; ++i) orders.push_back(0);
  return FinAbGroup::from_cyclic_orders(orders);
}

BigMatrix hermite_normal_form(BigMatrix rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        BigInt q = rows[r][c] / rows[i][c];
        if (q != 0)
          for (std::size_t j = c; j < cols; ++j) rows[r][j] -= q * rows[i][j];
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      BigInt q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

BigMatrix congruence_kernel(const std::vector<std::vector<std::int64_t>>& constraints,
                            const std::vector<std::uint64_t>& moduli, std::size_t n) {
  if (constraints.size() != moduli.size()) throw InputError("congruence_kernel: size mismatch");
  BigMatrix basis = identity(n);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const BigInt d = moduli[k];
    std::vector<BigInt> val(n);
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (basis[j][c] != 0 && constraints[k][c] != 0) s += basis[j][c] * constraints[k][c];
      s %= d;
      if (s < 0) s += d;
      val[j] = s;
    }
    // Unimodular recombination so that only basis[0] has a nonzero value.
    for (std::size_t j = 1; j < n; ++j) {
      if (val[j] == 0) continue;
      if (val[0] == 0) {
        std::swap(basis[0], basis[j]);
        std::swap(val[0], val[j]);
        continue;
      }
      BigInt g, s, t;
      ext_gcd(val[0], val[j], g, s, t);
      BigInt a = val[j] / g, b = val[0] / g;
      std::vector<BigInt> b0(n), bj(n);
      for (std::size_t c = 0; c < n; ++c) {
        b0[c] = s * basis[0][c] + t * basis[j][c];
        bj[c] = a * basis[0][c] - b * basis[j][c];
      }
      basis[0] = std::move(b0);
      basis[j] = std::move(bj);
      val[0] = g;
      val[j] = 0;
    }
    if (n > 0 && val[0] != 0) {
      BigInt g = boost::multiprecision::gcd(val[0], d);
      BigInt scale = d / g;
      for (auto& x : basis[0]) x *= scale;
    }
    basis = hermite_normal_form(std::move(basis), n);
  }
  return basis;
}

BigMatrix integer_kernel(const BigMatrix& a, std::size_t n) {
  // Hermite form of [A^T | I]: rows whose A^T part vanishes span the kernel.
  const std::size_t m = a.size();
  BigMatrix aug(n, std::vector<BigInt>(m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i][j];
    aug[j][m + j] = 1;
  }
  BigMatrix h = hermite_normal_form(std::move(aug), m + n);
  BigMatrix ker;
  for (auto& row : h) {
    bool zero = true;
    for (std::size_t i = 0; i < m && zero; ++i) zero = row[i] == 0;
    if (zero) ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return hermite_normal_form(std::move(ker), n);
}

std::optional<std::vector<BigInt>> coordinates_in_hermite(const BigMatrix& basis, const std::vector<BigInt>& v) {
  std::vector<BigInt> rest = v, coeff(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t piv = 0;
    while (piv < basis[i].size() && basis[i][piv] == 0) ++piv;
    if (piv == basis[i].size()) continue;
    if (rest[piv] % basis[i][piv] != 0) return std::nullopt;
    coeff[i] = rest[piv] / basis[i][piv];
    if (coeff[i] != 0)
      for (std::size_t c = piv; c < rest.size(); ++c) rest[c] -= coeff[i] * basis[i][c];
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coeff;
}

}  // namespace bogo::linalg
