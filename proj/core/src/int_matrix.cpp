#include "bogomolov/int_matrix.hpp"

#include <algorithm>
#include <map>

#include "bogomolov/errors.hpp"

namespace bogo::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::optional<std::uint64_t> modulus)
    : cols_(cols), modulus_(modulus), rows_(rows) {
  if (modulus_ && *modulus_ < 2) throw InputError("IntMatrix: modulus must be >= 2");
  if (modulus_ && *modulus_ > (1ULL << 31)) throw InputError("IntMatrix: modulus must be <= 2^31");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows,
                                std::optional<std::uint64_t> modulus) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(0, cols, modulus);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("IntMatrix::from_dense: ragged rows");
    std::vector<Entry> e;
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] != 0) e.emplace_back(c, r[c]);
    m.push_row(std::move(e));
  }
  return m;
}

std::int64_t IntMatrix::normalize(std::int64_t v) const {
  if (!modulus_) return v;
  return static_cast<std::int64_t>(mod_reduce(v, *modulus_));
}

std::int64_t IntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (c >= cols_) throw InputError("IntMatrix::set: column out of range");
  v = normalize(v);
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void IntMatrix::add_to(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, at(r, c) + v); }

void IntMatrix::push_row(std::vector<Entry> entries) {
  std::map<std::size_t, std::int64_t> acc;
  for (auto [c, v] : entries) {
    if (c >= cols_) throw InputError("IntMatrix::push_row: column out of range");
    acc[c] += v;
  }
  SparseRow row;
  for (auto [c, v] : acc) {
    auto n = normalize(v);
    if (n != 0) row.emplace_back(c, n);
  }
  rows_.push_back(std::move(row));
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_.size(), std::vector<std::int64_t>(cols_, 0));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (auto [c, v] : rows_[r]) d[r][c] = v;
  return d;
}

}  // namespace bogo::linalg
