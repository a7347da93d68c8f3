#pragma once

#include <vector>

#include "cartankit/structure_constants.hpp"

namespace cartankit {

/// A matrix realization of a Lie algebra: linearly independent n x n
/// matrices whose pairwise commutators stay inside their span.
struct MatrixLieBasis {
  std::size_t ambient = 0;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
  /// The matrix with the given coefficients in this basis.
  Matrix realize(const Vec& coeffs) const;
  /// Action of the element with the given coefficients on a vector.
  Vec act(const Vec& coeffs, const Vec& v) const;

  friend bool operator==(const MatrixLieBasis&, const MatrixLieBasis&) = default;
};

/// Flattens the basis matrices to columns and expresses every commutator in
/// them. Throws dependent_basis_error / not_closed_error.
StructureConstants structure_constants_from_matrices(const MatrixLieBasis& b);

/// Coordinates of a matrix in the span of the basis, if it lies there.
std::optional<Vec> coordinates_in_basis(const MatrixLieBasis& b, const Matrix& m);

/// Killing form B[i][j] = tr(ad b_i . ad b_j).
Matrix killing_form(const StructureConstants& sc);

/// Matrix of ad(x) in the basis; x given by coefficients.
Matrix ad(const StructureConstants& sc, const Vec& x);

/// Whether g preserves the bracket: g[x,y] = [gx, gy] on all basis pairs.
/// Throws contract_error for singular g.
bool is_automorphism(const StructureConstants& sc, const Matrix& g);

/// Isomorphism-invariant necessary-condition certificate. Two algebras with
/// different fingerprints are non-isomorphic; equal fingerprints prove
/// nothing beyond the match.
struct AlgebraFingerprint {
  std::size_t dim = 0;
  Signature killing_signature;
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lower_central_dims;
  friend bool operator==(const AlgebraFingerprint&, const AlgebraFingerprint&) = default;
};

AlgebraFingerprint fingerprint(const StructureConstants& sc);

/// Standard basis of so(p, q) = { X : X^T eta + eta X = 0 } for
/// eta = diag(1...1, -1...-1): rotations E_ij - E_ji for i < j <= p, then for
/// p < i < j, then boosts E_ij + E_ji for i <= p < j, each lexicographic.
MatrixLieBasis so_pq_basis(std::size_t p, std::size_t q);

/// diag(1,...,1,-1,...,-1) with p ones and q minus-ones.
Matrix pq_form(std::size_t p, std::size_t q);

/// Detects (p, q) such that b equals so_pq_basis(p, q) exactly.
std::optional<std::pair<std::size_t, std::size_t>> detect_so_pq(const MatrixLieBasis& b);

}  // namespace cartankit
