#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bogo::linalg {

using Entry = std::pair<std::size_t, std::int64_t>;  // (column, value)
using SparseRow = std::vector<Entry>;                // sorted by column, no zeros

/// Sparse integer matrix, optionally reduced modulo m.
///
/// Entries are kept canonical: every stored value is nonzero and, when a
/// modulus is set, lies in [0, m).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::optional<std::uint64_t> modulus = std::nullopt);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows,
                              std::optional<std::uint64_t> modulus = std::nullopt);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::optional<std::uint64_t>& modulus() const { return modulus_; }

  std::int64_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t v);
  void add_to(std::size_t r, std::size_t c, std::int64_t v);
  const SparseRow& row(std::size_t r) const { return rows_[r]; }

  /// Appends a row given as (column, value) pairs; duplicates are summed.
  void push_row(std::vector<Entry> entries);

  std::size_t nonzeros() const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

 private:
  std::int64_t normalize(std::int64_t v) const;

  std::size_t cols_ = 0;
  std::optional<std::uint64_t> modulus_;
  std::vector<SparseRow> rows_;
};

/// Dense row vectors over Z/N, N < 2^32.
using ModRow = std::vector<std::uint64_t>;

inline std::uint64_t mod_reduce(std::int64_t v, std::uint64_t n) {
  auto r = v % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

}  // namespace bogo::linalg
