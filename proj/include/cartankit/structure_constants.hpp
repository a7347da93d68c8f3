#pragma once

#include <cstddef>
#include <vector>

#include "cartankit/linalg.hpp"
#include "cartankit/matrix.hpp"

namespace cartankit {

/// Index of the pair (i, j), i < j, in lexicographic wedge order.
inline std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw shape_error("wedge index needs i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t wedge_count(std::size_t n) { return n * (n - 1) / 2; }

/// Structure constants of a finite-dimensional algebra over the rationals:
/// [b_i, b_j] = sum_k c[i][j][k] b_k. Antisymmetry in (i, j) is structural;
/// only pairs i < j are stored. The Jacobi identity is a separate check.
class StructureConstants {
 public:
  StructureConstants() : dim_(0) {}
  explicit StructureConstants(std::size_t dim)
      : dim_(dim), table_(wedge_count(dim), Vec(dim)) {}

  /// Builds from a full three-index array, validating antisymmetry exactly.
  static StructureConstants from_full(const std::vector<std::vector<Vec>>& c);

  std::size_t dim() const { return dim_; }

  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
  void set_row(std::size_t i, std::size_t j, Vec coeffs);

  Rational c(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coefficient vector of [b_i, b_j].
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coefficient vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(x) = [x, .] in the basis.
  Matrix ad(const Vec& x) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_;
  std::vector<Vec> table_;  // wedge-indexed rows of length dim_
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vec residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

/// Exact Jacobi check over all triples i < j < k.
JacobiReport check_jacobi(const StructureConstants& sc);

/// Structure constants in the transformed basis b'_i = sum_a P[a][i] b_a.
StructureConstants change_basis(const StructureConstants& sc, const Matrix& p);

}  // namespace cartankit
