#pragma once

#include <optional>
#include <vector>

#include "cartankit/matrix.hpp"

namespace cartankit {

/// Signature of a symmetric bilinear form: counts of positive, negative and
/// zero entries after exact congruence diagonalization.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Rank over the rationals. Rows are scaled integral first, then eliminated
/// fraction-free (Bareiss) so intermediate entries stay single divisions.
std::size_t mat_rank(const Matrix& a);

/// Basis of the right null space, as column vectors. Deterministic: one
/// vector per free column of the reduced echelon form, scaled to integer
/// entries with content 1 and first nonzero entry positive.
std::vector<Matrix> mat_kernel(const Matrix& a);

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// Exact solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Coordinates of `target` in the span of `basis` vectors, or nullopt when
/// target lies outside the span.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& target);

std::size_t span_dimension(const std::vector<Vec>& vectors);

/// Signature of a symmetric matrix by congruence (symmetric pivoting, with
/// the row+column addition trick when every remaining diagonal entry is
/// zero). Throws contract_error on non-symmetric input.
Signature sym_signature(const Matrix& s);

}  // namespace cartankit
