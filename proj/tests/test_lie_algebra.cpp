#include <doctest.h>

#include <random>

#include "cartankit/lie_algebra.hpp"

using namespace cartankit;

namespace {

Matrix e(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i, j); }

// cyclic so(3): [L1,L2] = L3, [L2,L3] = L1, [L3,L1] = L2
StructureConstants so3_cyclic() {
  StructureConstants sc(3);
  sc.set(0, 1, 2, Rational(1));
  sc.set(1, 2, 0, Rational(1));
  sc.set(2, 0, 1, Rational(1));
  return sc;
}

// diagonal frame constants [e2,e3]=l1 e1, [e3,e1]=l2 e2, [e1,e2]=l3 e3
StructureConstants diagonal_frame(const Rational& l1, const Rational& l2, const Rational& l3) {
  StructureConstants sc(3);
  sc.set(1, 2, 0, l1);
  sc.set(2, 0, 1, l2);
  sc.set(0, 1, 2, l3);
  return sc;
}

StructureConstants iso2() {
  // basis (t1, t2, J): [J, t1] = -t2, [J, t2] = t1
  StructureConstants sc(3);
  sc.set(2, 0, 1, Rational(-1));
  sc.set(2, 1, 0, Rational(1));
  return sc;
}

MatrixLieBasis su2_frame() {
  MatrixLieBasis b;
  b.ambient = 3;
  b.basis = {e(3, 0, 2) - e(3, 2, 0), Rational(2) * (e(3, 0, 1) - e(3, 1, 0)),
             Rational(4) * (e(3, 1, 2) - e(3, 2, 1))};
  return b;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    if (mat_rank(m) == n) return m;
  }
}

}  // namespace

TEST_CASE("jacobi check") {
  CHECK(check_jacobi(StructureConstants(4)).ok);  // abelian
  CHECK(check_jacobi(so3_cyclic()).ok);

  // scaling one cyclic constant keeps Jacobi: every diagonal-frame triple is
  // a Lie algebra, since each cyclic summand is a self-bracket
  CHECK(check_jacobi(diagonal_frame(Rational(1), Rational(1), Rational(2))).ok);

  // a genuine violation: add a non-cyclic component to [L1, L2]
  StructureConstants bad = so3_cyclic();
  bad.set(0, 1, 0, Rational(1));
  const JacobiReport report = check_jacobi(bad);
  CHECK(!report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].i == 0);
  CHECK(report.violations[0].j == 1);
  CHECK(report.violations[0].k == 2);
  CHECK(!vec_is_zero(report.violations[0].residual));
}

TEST_CASE("antisymmetry is enforced at construction") {
  std::vector<std::vector<Vec>> full(2, std::vector<Vec>(2, Vec(2)));
  full[0][1] = {Rational(0), Rational(1)};
  full[1][0] = {Rational(0), Rational(1)};  // should be negated
  CHECK_THROWS_AS(StructureConstants::from_full(full), contract_error);
  full[1][0] = {Rational(0), Rational(-1)};
  CHECK(StructureConstants::from_full(full).c(0, 1, 1) == Rational(1));
}

TEST_CASE("structure constants from matrices") {
  // single nilpotent generator: one-dimensional abelian
  MatrixLieBasis single{2, {e(2, 0, 1)}};
  const StructureConstants abelian = structure_constants_from_matrices(single);
  CHECK(abelian.dim() == 1);

  // the orthonormal frame of the left-invariant metric example
  const StructureConstants frame = structure_constants_from_matrices(su2_frame());
  CHECK(frame.c(1, 2, 0) == Rational(8));
  CHECK(frame.c(2, 0, 1) == Rational(2));
  CHECK(frame.c(0, 1, 2) == Rational(1, 2));
  CHECK(frame.c(1, 2, 1) == Rational(0));
  CHECK(frame.c(1, 2, 2) == Rational(0));
  CHECK(check_jacobi(frame).ok);

  // commutator of E12 and E21 leaves the span of {E11, E12, E21}
  MatrixLieBasis open_basis{2, {e(2, 0, 0), e(2, 0, 1), e(2, 1, 0)}};
  CHECK_THROWS_AS(structure_constants_from_matrices(open_basis), not_closed_error);
  try {
    structure_constants_from_matrices(open_basis);
  } catch (const not_closed_error& err) {
    CHECK(err.i == 1);
    CHECK(err.j == 2);
  }

  MatrixLieBasis dependent{2, {e(2, 0, 1), Rational(2) * e(2, 0, 1)}};
  CHECK_THROWS_AS(structure_constants_from_matrices(dependent), dependent_basis_error);
}

TEST_CASE("closed matrix bases always satisfy jacobi") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const Matrix p = random_invertible(rng, 3);
    const auto pinv = inverse(p);
    REQUIRE(pinv.has_value());
    MatrixLieBasis conj;
    conj.ambient = 3;
    for (const auto& g : so_pq_basis(3, 0).basis)
      conj.basis.push_back(mat_mul(mat_mul(p, g), *pinv));
    CHECK(check_jacobi(structure_constants_from_matrices(conj)).ok);
  }
}

TEST_CASE("killing form") {
  CHECK(killing_form(StructureConstants(3)).is_zero());
  CHECK(killing_form(so3_cyclic()) == Rational(-2) * Matrix::identity(3));

  // two-dimensional algebra [x, y] = y
  StructureConstants aff(2);
  aff.set(0, 1, 1, Rational(1));
  CHECK(killing_form(aff) == Matrix{{1, 0}, {0, 0}});
}

TEST_CASE("killing form is ad-invariant") {
  for (const auto& sc : {so3_cyclic(), iso2(), diagonal_frame(Rational(8), Rational(2), Rational(1, 2))}) {
    const Matrix b = killing_form(sc);
    const std::size_t d = sc.dim();
    auto unit = [d](std::size_t a) {
      Vec v(d);
      v[a] = 1;
      return v;
    };
    auto pair = [&](const Vec& x, const Vec& y) {
      Rational s;
      const Vec by = b.apply(y);
      for (std::size_t k = 0; k < d; ++k) s += x[k] * by[k];
      return s;
    };
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          const Rational lhs = pair(sc.bracket(unit(x), unit(y)), unit(z));
          const Rational rhs = -pair(unit(y), sc.bracket(unit(x), unit(z)));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("ad matrices") {
  const StructureConstants sc = so3_cyclic();
  CHECK(ad(sc, Vec(3)).is_zero());
  const Matrix ad1 = ad(sc, {Rational(1), Rational(0), Rational(0)});
  // [L1, L2] = L3, [L1, L3] = -L2
  CHECK(ad1.at(2, 1) == Rational(1));
  CHECK(ad1.at(1, 2) == Rational(-1));
  CHECK(ad1.at(0, 0) == Rational(0));
  CHECK(ad(StructureConstants(3), {Rational(1), Rational(2), Rational(3)}).is_zero());
  CHECK_THROWS_AS(ad(sc, Vec(2)), shape_error);
}

TEST_CASE("automorphisms") {
  const StructureConstants frame = structure_constants_from_matrices(su2_frame());
  CHECK(is_automorphism(frame, Matrix::identity(3)));
  const Matrix flip23{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  CHECK(is_automorphism(frame, flip23));
  CHECK(!is_automorphism(so3_cyclic(), Matrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(is_automorphism(so3_cyclic(), Matrix::zero(3, 3)), contract_error);

  // closure under composition on the example isotropy
  const Matrix flip13{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  CHECK(is_automorphism(frame, flip13));
  CHECK(is_automorphism(frame, mat_mul(flip23, flip13)));
}

TEST_CASE("fingerprints") {
  const AlgebraFingerprint so3 = fingerprint(so3_cyclic());
  CHECK(so3.dim == 3);
  CHECK(so3.killing_signature == Signature{0, 3, 0});
  CHECK(so3.center_dim == 0);
  CHECK(so3.derived_series_dims == std::vector<std::size_t>{3, 3});
  CHECK(so3.lower_central_dims == std::vector<std::size_t>{3, 3});

  const AlgebraFingerprint ab2 = fingerprint(StructureConstants(2));
  CHECK(ab2.dim == 2);
  CHECK(ab2.killing_signature == Signature{0, 0, 2});
  CHECK(ab2.center_dim == 2);
  CHECK(ab2.derived_series_dims == std::vector<std::size_t>{2, 0});

  const AlgebraFingerprint flat = fingerprint(iso2());
  CHECK(flat.dim == 3);
  CHECK(flat.killing_signature == Signature{0, 1, 2});
  CHECK(flat.center_dim == 0);
  CHECK(flat.derived_series_dims == std::vector<std::size_t>{3, 2, 0});
  CHECK(flat.lower_central_dims == std::vector<std::size_t>{3, 2, 2});
}

TEST_CASE("fingerprint is basis independent") {
  std::mt19937_64 rng(17);
  for (const auto& sc : {so3_cyclic(), iso2(), diagonal_frame(Rational(8), Rational(2), Rational(1, 2))}) {
    const AlgebraFingerprint fp = fingerprint(sc);
    for (int t = 0; t < 6; ++t) {
      const Matrix p = random_invertible(rng, sc.dim());
      CHECK(fingerprint(change_basis(sc, p)) == fp);
    }
  }
}

TEST_CASE("so(p,q) bases") {
  const MatrixLieBasis so2 = so_pq_basis(2, 0);
  REQUIRE(so2.dim() == 1);
  CHECK(so2.basis[0] == e(2, 0, 1) - e(2, 1, 0));

  const MatrixLieBasis so11 = so_pq_basis(1, 1);
  REQUIRE(so11.dim() == 1);
  CHECK(so11.basis[0] == e(2, 0, 1) + e(2, 1, 0));

  const MatrixLieBasis so3 = so_pq_basis(3, 0);
  REQUIRE(so3.dim() == 3);
  const StructureConstants sc = structure_constants_from_matrices(so3);
  // the lexicographic rotation basis closes with unit coefficients
  CHECK(sc.bracket_basis(0, 1) == Vec{Rational(0), Rational(0), Rational(-1)});
  CHECK(sc.bracket_basis(0, 2) == Vec{Rational(0), Rational(1), Rational(0)});
  CHECK(sc.bracket_basis(1, 2) == Vec{Rational(-1), Rational(0), Rational(0)});
  CHECK(check_jacobi(sc).ok);
  CHECK(fingerprint(sc).killing_signature == Signature{0, 3, 0});

  // defining relation X^T eta + eta X = 0 holds for every generator
  for (std::size_t p = 0; p <= 3; ++p) {
    const std::size_t q = 3 - p;
    const Matrix eta = pq_form(p, q);
    for (const auto& x : so_pq_basis(p, q).basis)
      CHECK((mat_mul(x.transposed(), eta) + mat_mul(eta, x)).is_zero());
  }
  CHECK(so_pq_basis(4, 0).dim() == 6);
  CHECK(detect_so_pq(so_pq_basis(2, 1)) == std::make_pair(std::size_t{2}, std::size_t{1}));
  CHECK(!detect_so_pq(su2_frame()).has_value());
}

TEST_CASE("automorphism composition property") {
  const StructureConstants frame = structure_constants_from_matrices(su2_frame());
  const std::vector<Matrix> k = {Matrix::identity(3),
                                 Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                                 Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
                                 Matrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  for (const auto& g : k)
    for (const auto& h : k) {
      CHECK(is_automorphism(frame, g));
      CHECK(is_automorphism(frame, mat_mul(g, h)));
    }
}
