#include "bogomolov/howell.hpp"

#include <numeric>

#include "bogomolov/errors.hpp"

namespace bogo::linalg {

namespace {

// s*a + t*b = g for nonnegative a, b.
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  g = r0;
  s = s0;
  t = t0;
}

std::uint64_t to_mod(std::int64_t v, std::uint64_t n) { return mod_reduce(v, n); }

// Unit u with u * a == gcd(a, n) mod n.
std::uint64_t normalizing_unit(std::uint64_t a, std::uint64_t n) {
  std::uint64_t g = std::gcd(a, n);
  std::uint64_t m = n / g;
  std::uint64_t a1 = (a / g) % m;
  std::uint64_t u0 = m == 1 ? 0 : inverse_mod(a1, m);
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t u = u0 + k * m;
    if (u >= n) break;
    if (std::gcd(u, n) == 1) return u;
  }
  throw InternalError("normalizing_unit: no unit found");
}

}  // namespace

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  std::int64_t g, s, t;
  ext_gcd(static_cast<std::int64_t>(a % n), static_cast<std::int64_t>(n), g, s, t);
  if (g != 1) throw InternalError("inverse_mod: not a unit");
  return to_mod(s, n);
}

ModSpan::ModSpan(std::size_t cols, std::uint64_t modulus) : cols_(cols), modulus_(modulus), pivots_(cols) {
  if (modulus < 2 || modulus > (1ULL << 31)) throw InputError("ModSpan: modulus must lie in [2, 2^31]");
}

void ModSpan::axpy(ModRow& dst, std::uint64_t a, const ModRow& x, std::uint64_t b, std::size_t from) const {
  // dst = a*x + b*dst
  for (std::size_t i = from; i < cols_; ++i) dst[i] = (a * x[i] + b * dst[i]) % modulus_;
}

void ModSpan::insert(ModRow v) {
  if (v.size() != cols_) throw InputError("ModSpan::insert: wrong length");
  for (auto& x : v) x %= modulus_;
  std::vector<ModRow> pending;
  insert_one(std::move(v), pending);
  while (!pending.empty()) {
    ModRow w = std::move(pending.back());
    pending.pop_back();
    insert_one(std::move(w), pending);
  }
}

void ModSpan::insert_all(const std::vector<ModRow>& rows) {
  for (const auto& r : rows) insert(r);
}

void ModSpan::insert_one(ModRow v, std::vector<ModRow>& pending) {
  const std::uint64_t n = modulus_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    dirty_ = true;
    auto& slot = pivots_[c];
    if (!slot) {
      std::uint64_t u = normalizing_unit(v[c], n);
      if (u != 1) axpy(v, 0, v, u, c);
      std::uint64_t d = v[c];
      if (d != 1) {
        ModRow ann = v;
        axpy(ann, 0, ann, n / d, c);
        pending.push_back(std::move(ann));
      }
      slot = std::move(v);
      return;
    }
    ModRow& p = *slot;
    const std::uint64_t d = p[c], x = v[c];
    if (x % d == 0) {
      axpy(v, n - x / d, p, 1, c);
      continue;
    }
    std::int64_t g, s, t;
    ext_gcd(static_cast<std::int64_t>(d), static_cast<std::int64_t>(x), g, s, t);
    ModRow np = p;
    // np = s*p + t*v ; v = (x/g)*p - (d/g)*v
    axpy(np, to_mod(t, n), v, to_mod(s, n), c);
    axpy(v, x / g, p, to_mod(-static_cast<std::int64_t>(d / g), n), c);
    p = std::move(np);
    if (p[c] != static_cast<std::uint64_t>(g)) throw InternalError("ModSpan: pivot combination failed");
    ModRow ann = p;
    axpy(ann, 0, ann, n / static_cast<std::uint64_t>(g), c);
    pending.push_back(std::move(ann));
  }
}

void ModSpan::canonicalize() const {
  if (!dirty_) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!pivots_[c]) continue;
    const ModRow& p = *pivots_[c];
    const std::uint64_t d = p[c];
    for (std::size_t r = 0; r < c; ++r) {
      if (!pivots_[r]) continue;
      ModRow& row = *pivots_[r];
      std::uint64_t q = row[c] / d;
      if (q) axpy(row, modulus_ - q, p, 1, c);
    }
  }
  basis_.clear();
  for (const auto& p : pivots_)
    if (p) basis_.push_back(*p);
  dirty_ = false;
}

const std::vector<ModRow>& ModSpan::basis() const {
  canonicalize();
  return basis_;
}

std::vector<std::size_t> ModSpan::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivots_[c]) out.push_back(c);
  return out;
}

ModRow ModSpan::reduce(ModRow v) const {
  if (v.size() != cols_) throw InputError("ModSpan::reduce: wrong length");
  canonicalize();
  for (auto& x : v) x %= modulus_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!pivots_[c] || v[c] == 0) continue;
    const ModRow& p = *pivots_[c];
    std::uint64_t q = v[c] / p[c];
    if (q) axpy(v, modulus_ - q, p, 1, c);
  }
  return v;
}

bool ModSpan::contains(const ModRow& v) const {
  ModRow r = reduce(v);
  for (auto x : r)
    if (x) return false;
  return true;
}

BigInt ModSpan::order() const {
  BigInt o = 1;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivots_[c]) o *= modulus_ / (*pivots_[c])[c];
  return o;
}

unsigned ModSpan::order_valuation(std::uint64_t p) const {
  unsigned v = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!pivots_[c]) continue;
    std::uint64_t q = modulus_ / (*pivots_[c])[c];
    while (q % p == 0) {
      q /= p;
      ++v;
    }
  }
  return v;
}

IntMatrix howell_form(const IntMatrix& m) {
  if (!m.modulus()) throw InputError("howell_form: matrix needs a modulus");
  const std::uint64_t n = *m.modulus();
  ModSpan span(m.cols(), n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ModRow v(m.cols(), 0);
    for (auto [c, x] : m.row(r)) v[c] = static_cast<std::uint64_t>(x);
    span.insert(std::move(v));
  }
  IntMatrix out(0, m.cols(), n);
  for (const auto& b : span.basis()) {
    std::vector<Entry> e;
    for (std::size_t c = 0; c < b.size(); ++c)
      if (b[c]) e.emplace_back(c, static_cast<std::int64_t>(b[c]));
    out.push_row(std::move(e));
  }
  return out;
}

std::vector<ModRow> transpose(const std::vector<ModRow>& rows, std::size_t cols) {
  std::vector<ModRow> t(cols, ModRow(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  return t;
}

std::vector<ModRow> left_kernel(const std::vector<ModRow>& m, std::size_t cols, std::uint64_t n) {
  const std::size_t r = m.size();
  ModSpan span(cols + r, n);
  for (std::size_t i = 0; i < r; ++i) {
    ModRow row(cols + r, 0);
    for (std::size_t j = 0; j < cols; ++j) row[j] = m[i][j] % n;
    row[cols + i] = 1;
    span.insert(std::move(row));
  }
  std::vector<ModRow> out;
  for (const auto& b : span.basis()) {
    bool zero = true;
    for (std::size_t j = 0; j < cols && zero; ++j) zero = b[j] == 0;
    if (zero) out.emplace_back(b.begin() + static_cast<std::ptrdiff_t>(cols), b.end());
  }
  return out;
}

std::vector<ModRow> right_kernel(const std::vector<ModRow>& m, std::size_t cols, std::uint64_t n) {
  ModSpan span(cols, n);
  span.insert_all(m);
  const auto& h = span.basis();
  if (h.empty()) {
    std::vector<ModRow> id(cols, ModRow(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  return left_kernel(transpose(h, cols), h.size(), n);
}

std::optional<ModRow> solve_mod(const std::vector<ModRow>& a, std::size_t cols, const ModRow& b, std::uint64_t n) {
  const std::size_t r = a.size();
  if (b.size() != r) throw InputError("solve_mod: right-hand side has wrong length");
  ModSpan span(r + cols, n);
  for (std::size_t j = 0; j < cols; ++j) {
    ModRow row(r + cols, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = a[i][j] % n;
    row[r + j] = 1;
    span.insert(std::move(row));
  }
  ModRow target(r + cols, 0);
  for (std::size_t i = 0; i < r; ++i) target[i] = b[i] % n;
  ModRow red = span.reduce(std::move(target));
  for (std::size_t i = 0; i < r; ++i)
    if (red[i]) return std::nullopt;
  ModRow x(cols);
  for (std::size_t j = 0; j < cols; ++j) x[j] = (n - red[r + j]) % n;
  return x;
}

FinAbGroup subquotient_invariants(const std::vector<ModRow>& u, const std::vector<ModRow>& v, std::size_t cols,
                                  std::uint64_t n) {
  ModSpan big(cols, n);
  big.insert_all(u);
  for (const auto& x : v)
    if (!big.contains(x)) throw InputError("subquotient_invariants: V is not contained in U");
  std::vector<std::uint64_t> orders;
  for (auto [p, e] : factorize(n)) {
    // r_j = v_p |p^j Q / p^{j+1} Q| counts cyclic p-factors of order > p^j.
    std::vector<unsigned> val;
    std::uint64_t pj = 1;
    for (unsigned j = 0; j <= e; ++j) {
      ModSpan s(cols, n);
      s.insert_all(v);
      for (const auto& g : u) {
        ModRow w = g;
        for (auto& x : w) x = (x % n) * pj % n;
        s.insert(std::move(w));
      }
      val.push_back(s.order_valuation(p));
      pj *= p;
    }
    std::vector<unsigned> r(e + 1, 0);
    for (unsigned j = 0; j < e; ++j) r[j] = val[j] - val[j + 1];
    for (unsigned j = 0; j < e; ++j) {
      unsigned exact = r[j] - r[j + 1];
      for (unsigned k = 0; k < exact; ++k) orders.push_back(ipow(p, j + 1));
    }
  }
  return FinAbGroup::from_cyclic_orders(orders);
}

}  // namespace bogo::linalg
