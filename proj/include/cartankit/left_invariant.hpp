#pragma once

#include "cartankit/cartan.hpp"

namespace cartankit {

/// A left-invariant metric on a Lie group, encoded by declaring a frame of
/// its Lie algebra orthonormal: the structure constants are expressed in
/// that frame. An ambient matrix realization of the frame is optional.
struct MetricLieGroupSpec {
  StructureConstants h_constants;
  std::optional<MatrixLieBasis> ambient_frame;

  std::size_t dim() const { return h_constants.dim(); }
};

/// Throws contract_error unless the constants satisfy Jacobi and any ambient
/// frame reproduces them.
void validate_spec(const MetricLieGroupSpec& spec);

/// Connection coefficients of the metric connection without torsion, stored
/// as one matrix per frame direction: christoffel[i](k, j) = <D_{e_i} e_j, e_k>.
struct ConnectionTable {
  std::vector<Matrix> christoffel;

  std::size_t dim() const { return christoffel.size(); }
  Rational gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return christoffel[i].at(k, j);
  }
  bool metric_compatible() const;                                // gamma[i][j][k] = -gamma[i][k][j]
  bool torsion_free(const MetricLieGroupSpec& spec) const;       // gamma[i][j][k]-gamma[j][i][k]=c[i][j][k]
};

/// <D_{e_i} e_j, e_k> = (c[i][j][k] - c[j][k][i] + c[k][i][j]) / 2.
ConnectionTable koszul_connection(const MetricLieGroupSpec& spec);

/// Curvature of the frame: R(e_i, e_j) as an antisymmetric matrix acting on
/// frame coordinates, R(X,Y) = D_X D_Y - D_Y D_X - D_[X,Y].
struct CurvatureTensor {
  std::size_t n = 0;
  std::vector<Matrix> values;  // wedge-indexed

  const Matrix& value(std::size_t i, std::size_t j) const;  // requires i < j
  Matrix value_signed(std::size_t i, std::size_t j) const;  // any i != j
  bool is_zero() const;
  bool metric_compatible() const;       // every value antisymmetric
  bool satisfies_first_bianchi() const; // cyclic sum R(u,v)w = 0
  bool satisfies_pair_symmetry() const; // R(ei,ej)[k][l] = R(ek,el)[i][j]
};

CurvatureTensor riemann_curvature(const ConnectionTable& conn, const MetricLieGroupSpec& spec);

/// kappa(e_i, e_j) = <R(e_i,e_j) e_j, e_i>, for all pairs i < j.
std::vector<Rational> sectional_curvatures(const CurvatureTensor& curv);

struct MilnorSectional {
  Rational k12, k13, k23;
  friend bool operator==(const MilnorSectional&, const MilnorSectional&) = default;
};

/// Closed-form sectional curvatures of the three coordinate planes for the
/// diagonal frame [e2,e3] = l1 e1, [e3,e1] = l2 e2, [e1,e2] = l3 e3:
/// m_i = (l1+l2+l3)/2 - l_i, r_i = 2 m_j m_k, k_ij = (r_i + r_j - r_k)/2.
/// Serves as an oracle independent of the connection route.
MilnorSectional milnor_oracle(const Rational& l1, const Rational& l2, const Rational& l3);

/// The diagonal-frame spec for a triple of bracket constants.
MetricLieGroupSpec milnor_frame_spec(const Rational& l1, const Rational& l2, const Rational& l3);

/// Multiplicative closure of a generating set, up to `cap` elements.
std::vector<Matrix> isotropy_group_closure(const std::vector<Matrix>& gens, std::size_t cap = 64);

/// Cartan data of the metric: structure algebra so(n), homogeneous base with
/// the isotropy algebra spanned by `algebra_generators` (zero-dimensional for
/// a finite isotropy group), zero torsion, zero anchor map, and the curvature
/// re-coordinatized in the so(n) basis. Group generators must be orthogonal
/// automorphisms of the frame constants; algebra generators antisymmetric
/// derivations.
CartanData export_cartan_data(const MetricLieGroupSpec& spec, const CurvatureTensor& curv,
                              const std::vector<Matrix>& group_generators,
                              const std::vector<Matrix>& algebra_generators = {});

/// Anchor map induced by the connection: column j holds the coordinates of
/// minus the j-th connection matrix in the so(n) basis. Substituting it for
/// the zero anchor map of export_cartan_data yields data whose anchor fields
/// genuinely reproduce the bracket (see validate checks).
Matrix connection_anchor_map(const ConnectionTable& conn);

/// Re-expresses constants in an exactly orthonormalized frame when the Gram
/// matrix admits a rational LDL^T factorization with square pivots; rejects
/// otherwise (no irrational square roots in exact arithmetic).
StructureConstants gram_orthonormalize(const StructureConstants& sc, const Matrix& gram);

}  // namespace cartankit
