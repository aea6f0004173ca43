#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bogomolov/finab.hpp"
#include "bogomolov/int_matrix.hpp"

namespace bogo::linalg {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  BigMatrix diag_form;  // D, same shape as M
  BigMatrix left;       // U  (rows x rows)
  BigMatrix right;      // V  (cols x cols)
  BigMatrix right_inv;  // V^-1
  std::vector<BigInt> diagonal;  // min(rows, cols) entries of D
};

BigMatrix to_big(const IntMatrix& m);
BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigInt determinant(const BigMatrix& square);

/// Smith normal form over Z. The identity U*M*V = D is re-verified before
/// returning; a failure throws InternalError.
SmithForm smith_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const BigMatrix& m);

/// Diagonal only (no transforms), cheaper.
std::vector<BigInt> smith_diagonal(BigMatrix m);

/// Invariants of Z^n / (row span of relations), n = relations.cols().
FinAbGroup abelian_invariants(const IntMatrix& relations);
FinAbGroup abelian_invariants(const std::vector<std::vector<std::int64_t>>& relations, std::size_t ngens);

/// Row Hermite normal form of the lattice spanned by `rows` (zero rows
/// dropped): echelon, positive pivots, entries above a pivot in [0, pivot).
BigMatrix hermite_normal_form(BigMatrix rows, std::size_t cols);

/// Basis (as rows, Hermite form) of { x in Z^n : a_i . x == 0 mod d_i }.
BigMatrix congruence_kernel(const std::vector<std::vector<std::int64_t>>& constraints,
                            const std::vector<std::uint64_t>& moduli, std::size_t n);

/// Saturated basis (rows, Hermite form) of { x in Z^n : a x = 0 } for the rows a of `a`.
BigMatrix integer_kernel(const BigMatrix& a, std::size_t n);

/// Coordinates c with c * basis = v for a square Hermite basis, if integral.
std::optional<std::vector<BigInt>> coordinates_in_hermite(const BigMatrix& basis, const std::vector<BigInt>& v);

std::int64_t to_int64(const BigInt& v);

}  // namespace bogo::linalg
