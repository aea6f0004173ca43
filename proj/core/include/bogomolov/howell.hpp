#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bogomolov/finab.hpp"
#include "bogomolov/int_matrix.hpp"
#include "bogomolov/smith.hpp"

namespace bogo::linalg {

/// Row span of vectors in (Z/N)^cols, N <= 2^31, kept in Howell form.
///
/// Rows are inserted one at a time; the pivot rows are unimodular
/// recombinations of everything inserted so far together with the
/// annihilator multiples needed for the Howell property. basis() returns
/// the canonical Howell form: pivots strictly increasing, each pivot a
/// divisor of N, entries above a pivot d reduced into [0, d). Two spans
/// are equal iff their bases are equal.
class ModSpan {
 public:
  ModSpan(std::size_t cols, std::uint64_t modulus);

  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }

  void insert(ModRow v);
  void insert_all(const std::vector<ModRow>& rows);

  const std::vector<ModRow>& basis() const;
  std::vector<std::size_t> pivot_columns() const;

  /// Canonical representative of v modulo the span.
  ModRow reduce(ModRow v) const;
  bool contains(const ModRow& v) const;

  /// |span| = prod N / pivot.
  BigInt order() const;
  /// p-adic valuation of |span|.
  unsigned order_valuation(std::uint64_t p) const;

 private:
  void insert_one(ModRow v, std::vector<ModRow>& pending);
  void canonicalize() const;
  void axpy(ModRow& dst, std::uint64_t a, const ModRow& x, std::uint64_t b, std::size_t from) const;

  std::size_t cols_;
  std::uint64_t modulus_;
  mutable std::vector<std::optional<ModRow>> pivots_;  // indexed by pivot column
  mutable std::vector<ModRow> basis_;
  mutable bool dirty_ = false;
};

/// Canonical Howell form of the row span of a matrix carrying a modulus.
IntMatrix howell_form(const IntMatrix& m);

std::vector<ModRow> transpose(const std::vector<ModRow>& rows, std::size_t cols);

/// Generators (Howell basis) of { x in (Z/N)^rows : x * M = 0 }.
std::vector<ModRow> left_kernel(const std::vector<ModRow>& m, std::size_t cols, std::uint64_t n);

/// Generators (Howell basis) of { x in (Z/N)^cols : M * x = 0 }.
std::vector<ModRow> right_kernel(const std::vector<ModRow>& m, std::size_t cols, std::uint64_t n);

/// Some x with A * x = b over Z/N, or nullopt.
std::optional<ModRow> solve_mod(const std::vector<ModRow>& a, std::size_t cols, const ModRow& b, std::uint64_t n);

/// Invariants of U / V for submodules V of U in (Z/N)^cols given by
/// generators. Throws InputError when V is not contained in U.
FinAbGroup subquotient_invariants(const std::vector<ModRow>& u, const std::vector<ModRow>& v, std::size_t cols,
                                  std::uint64_t n);

/// Inverse of a unit modulo n.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

}  // namespace bogo::linalg
