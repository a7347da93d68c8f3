#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartankit/hom_map2.hpp"
#include "cartankit/lie_algebra.hpp"

namespace cartankit {

/// Base space of the model: a single point, or a single orbit of the
/// structure group described by the isotropy subalgebra k inside g. All
/// structure maps are stored as their values at the base point; equivariance
/// determines them over the rest of the orbit.
struct BaseDescriptor {
  enum class Kind { Point, Homogeneous };
  Kind kind = Kind::Point;
  std::vector<Vec> isotropy;  // spanning vectors of k in the g-basis (Homogeneous only)

  static BaseDescriptor point() { return {Kind::Point, {}}; }
  static BaseDescriptor homogeneous(std::vector<Vec> iso) {
    return {Kind::Homogeneous, std::move(iso)};
  }
  bool is_point() const { return kind == Kind::Point; }
  friend bool operator==(const BaseDescriptor&, const BaseDescriptor&) = default;
};

/// Base-point data of a structure algebroid with connection in canonical
/// form on the trivial bundle over the base: the structure algebra g inside
/// gl_n, the torsion and curvature values, and the anchor's horizontal part.
struct CartanData {
  std::size_t n = 0;
  MatrixLieBasis g;
  StructureConstants g_sc;  // derived from g, cached
  BaseDescriptor base;
  HomMap2 torsion;    // values in R^n
  HomMap2 curvature;  // values in g (coefficient vectors)
  Matrix anchor_map;  // columns: image of the frame vectors, as g-vectors read mod k

  std::size_t g_dim() const { return g.dim(); }
  friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// Builds CartanData, deriving the structure constants of g, checking the
/// shape invariants, and canonicalizing the anchor map modulo the isotropy
/// (projection onto the echelon complement of k).
CartanData make_cartan_data(std::size_t n, MatrixLieBasis g, BaseDescriptor base,
                            HomMap2 torsion, HomMap2 curvature, Matrix anchor_map);

/// A constant section (u, alpha) of the trivial bundle R^n + g.
struct Section {
  Vec horizontal;  // u
  Vec vertical;    // alpha, coefficients in the g-basis
  friend bool operator==(const Section&, const Section&) = default;
};

/// [(u,a),(v,b)] = (a.v - b.u - T(u,v), [a,b] - R(u,v)); a.v acts through
/// the ambient matrix realization of g.
Section bracket_constant_sections(const CartanData& d, const Section& s1, const Section& s2);

/// Value of the anchor at the base point, as the canonical representative in
/// g of the tangent vector (read modulo the isotropy). Identically zero over
/// a point base.
Vec anchor(const CartanData& d, const Section& s);

enum class EdTarget { RnValued, GValued };

/// Infinitesimal equivariance derivative of a torsion- or curvature-shaped
/// map along the direction beta in g:
///   g-valued:  (L_beta m)(u,v) = -[beta, m(u,v)] + m(beta.u, v) + m(u, beta.v)
///   Rn-valued: (L_beta m)(u,v) = -beta.(m(u,v)) + m(beta.u, v) + m(u, beta.v)
HomMap2 equivariant_derivative(const CartanData& d, const Vec& beta, const HomMap2& m,
                               EdTarget target);

struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
  std::string note;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<Witness> witnesses;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ValidationReport {
  bool valid = false;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Decides whether the data defines a structure algebroid with connection.
/// Runs, in order: closure and Jacobi identity of g; isotropy subalgebra
/// check; stationarity of torsion, curvature and anchor map along the
/// isotropy; the Jacobi identity of the algebroid bracket at the base point
/// (constant-section Jacobiator with derivative corrections along anchors);
/// and anchor-bracket compatibility. Stationarity failures stop the later
/// checks, since the derivative calculus is only well defined past them.
ValidationReport validate(const CartanData& d, bool parallel = false);

/// Both Bianchi identities at the base point on frame triples, expanded
/// through the same bracket/anchor calculus as validate(). Precondition:
/// validate(d) passes.
ValidationReport check_bianchi(const CartanData& d);

/// Constant-curvature model: g = so(p, q), point base, zero torsion, and
/// R(u,v)w = kappa * (<w,v> u - <w,u> v) for the (p, q) inner product.
/// Defaults to the definite signature (n, 0).
CartanData space_form(std::size_t n, const Rational& kappa);
CartanData space_form(std::size_t n, const Rational& kappa, std::size_t p, std::size_t q);

/// The Lie algebra R^n + g under the constant-section bracket. Point base
/// only, and the data must validate.
StructureConstants total_algebra(const CartanData& d);

enum class SpaceFormTag { CompactType, EuclideanType, LorentzType, Other };

struct SpaceFormClass {
  SpaceFormTag tag = SpaceFormTag::Other;
  std::optional<Rational> kappa;
  std::optional<AlgebraFingerprint> fingerprint_actual;
  std::optional<AlgebraFingerprint> fingerprint_expected;
  bool fingerprints_match = false;
  std::optional<Witness> witness;  // template mismatch evidence
};

/// Recovers kappa by exact template inversion and compares fingerprints of
/// the total algebra against the model algebra for the recovered sign.
SpaceFormClass classify_space_form(const CartanData& d);

/// The symmetry predicate on the data: zero torsion and zero anchor map
/// (modulo the isotropy).
bool is_locally_symmetric_data(const CartanData& d);

/// Always true in this model: the base is a point or a single orbit, so the
/// group action on it is transitive by construction.
bool is_homogeneous_data(const CartanData& d);

struct MembershipResult {
  bool member = true;
  std::optional<Witness> witness;
};

/// Whether K: R^n -> hom(Lambda^2 R^n, target), given as n slices, satisfies
/// the cyclic identity K(u)(v,w) + K(v)(w,u) + K(w)(u,v) = 0.
MembershipResult first_bianchi_membership(const std::vector<HomMap2>& slices);

/// Reduction of g-vectors modulo a spanned subspace, in echelon form; used
/// for reading values in g/k and for canonicalizing anchor maps.
class SubspaceReducer {
 public:
  SubspaceReducer(std::size_t dim, const std::vector<Vec>& spanning);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  std::size_t subspace_dim() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;  // reduced echelon rows
  std::vector<std::size_t> pivots_;
};

}  // namespace cartankit
