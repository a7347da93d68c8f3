#include <doctest.h>

#include <random>

#include "cartankit/cartan.hpp"
#include "cartankit/left_invariant.hpp"

using namespace cartankit;

namespace {

Vec rvec(std::initializer_list<Rational> xs) { return Vec(xs); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Curvature constants of the example metric with frame constants (8, 2, 1/2).
const Rational c1(181, 16), c2(313, 16), c3(599, 16);

// Cartan data of that metric: structure algebra so(3), orbit base with
// trivial isotropy algebra, zero torsion. The anchor map is `anchor_map`
// (the published convention stores zero; the connection-derived map is the
// one that satisfies the anchor axiom).
CartanData su2_data(const Matrix& anchor_map) {
  MatrixLieBasis so3 = so_pq_basis(3, 0);
  HomMap2 r0(3, 3);
  r0.set(0, 1, rvec({c1, 0, 0}));
  r0.set(0, 2, rvec({0, c2, 0}));
  r0.set(1, 2, rvec({0, 0, -c3}));
  return make_cartan_data(3, std::move(so3), BaseDescriptor::homogeneous({}), HomMap2(3, 3),
                          std::move(r0), anchor_map);
}

Matrix su2_connection_anchor() {
  return connection_anchor_map(
      koszul_connection(milnor_frame_spec(Rational(8), Rational(2), Rational(1, 2))));
}

bool check_passed(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  return false;
}

// Test-local re-expansion of the base-point Jacobiator, written from scratch
// against the raw data tables (no library bracket/derivative helpers), used
// as an independent oracle for validate's fourth check.
Vec naive_jacobiator(const CartanData& d, const std::array<Vec, 3>& us,
                     const std::array<Vec, 3>& as) {
  const std::size_t n = d.n, gd = d.g_dim();

  auto realize = [&](const Vec& coeff) {
    Matrix m(n, n);
    for (std::size_t a = 0; a < gd; ++a)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) += coeff[a] * d.g.basis[a].at(r, c);
    return m;
  };
  auto lie = [&](const Vec& x, const Vec& y) {
    Vec out(gd);
    for (std::size_t i = 0; i < gd; ++i)
      for (std::size_t j = 0; j < gd; ++j)
        for (std::size_t k = 0; k < gd; ++k) out[k] += x[i] * y[j] * d.g_sc.c(i, j, k);
    return out;
  };
  auto hom_eval = [&](const HomMap2& m, const Vec& u, const Vec& v) {
    // ordered double loop; the i > j terms carry the negated values, so the
    // sum is the antisymmetric bilinear evaluation
    Vec out(m.target_dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Vec val = m.value(i, j);
        for (std::size_t k = 0; k < val.size(); ++k) out[k] += u[i] * v[j] * val[k];
      }
    return out;
  };
  auto bracket = [&](const Vec& u1, const Vec& a1, const Vec& u2, const Vec& a2) {
    Vec w = vec_sub(vec_sub(realize(a1).apply(u2), realize(a2).apply(u1)),
                    hom_eval(d.torsion, u1, u2));
    Vec g = vec_sub(lie(a1, a2), hom_eval(d.curvature, u1, u2));
    return std::make_pair(w, g);
  };
  auto ed_eval = [&](const Vec& beta, const HomMap2& m, bool g_valued, const Vec& u, const Vec& v) {
    const Matrix bm = realize(beta);
    Vec first = g_valued ? vec_scale(Rational(-1), lie(beta, hom_eval(m, u, v)))
                         : vec_scale(Rational(-1), bm.apply(hom_eval(m, u, v)));
    return vec_add(first, vec_add(hom_eval(m, bm.apply(u), v), hom_eval(m, u, bm.apply(v))));
  };

  Vec total(n + gd);
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& [a, b, c] : cyc) {
    auto inner = bracket(us[a], as[a], us[b], as[b]);
    auto outer = bracket(inner.first, inner.second, us[c], as[c]);
    if (!d.base.is_point()) {
      const Vec beta_c = vec_add(d.anchor_map.apply(us[c]), as[c]);
      outer.first = vec_add(outer.first, ed_eval(beta_c, d.torsion, false, us[a], us[b]));
      outer.second = vec_add(outer.second, ed_eval(beta_c, d.curvature, true, us[a], us[b]));
    }
    for (std::size_t k = 0; k < n; ++k) total[k] += outer.first[k];
    for (std::size_t k = 0; k < gd; ++k) total[n + k] += outer.second[k];
  }
  return total;
}

void check_naive_jacobiator_vanishes(const CartanData& d) {
  const std::size_t total = d.n + d.g_dim();
  auto section = [&](std::size_t idx) {
    Vec u(d.n), a(d.g_dim());
    if (idx < d.n)
      u[idx] = 1;
    else
      a[idx - d.n] = 1;
    return std::make_pair(u, a);
  };
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = x + 1; y < total; ++y)
      for (std::size_t z = y + 1; z < total; ++z) {
        const auto [ux, ax] = section(x);
        const auto [uy, ay] = section(y);
        const auto [uz, az] = section(z);
        CHECK(vec_is_zero(naive_jacobiator(d, {ux, uy, uz}, {ax, ay, az})));
      }
}

}  // namespace

TEST_CASE("bracket of constant sections") {
  const CartanData sf = space_form(2, Rational(1));

  // vertical sections bracket through the algebra alone
  Section v1{Vec(2), rvec({Rational(1)})}, v2{Vec(2), rvec({Rational(2)})};
  const Section vv = bracket_constant_sections(sf, v1, v2);
  CHECK(vec_is_zero(vv.horizontal));
  CHECK(vec_is_zero(vv.vertical));  // so(2) is abelian

  // frame sections pick up minus the curvature
  Section h1{unit(2, 0), Vec(1)}, h2{unit(2, 1), Vec(1)};
  const Section hh = bracket_constant_sections(sf, h1, h2);
  CHECK(vec_is_zero(hh.horizontal));
  CHECK(hh.vertical == rvec({Rational(-1)}));  // -kappa on the rotation generator

  // torsion-free data keeps the frame part of frame brackets zero
  const CartanData sf3 = space_form(3, Rational(-2));
  const Section h13 = bracket_constant_sections(sf3, Section{unit(3, 0), Vec(3)},
                                                Section{unit(3, 2), Vec(3)});
  CHECK(vec_is_zero(h13.horizontal));

  // mixed bracket acts by the ambient matrix
  const Section mixed = bracket_constant_sections(sf, Section{Vec(2), rvec({Rational(1)})},
                                                  Section{unit(2, 0), Vec(1)});
  CHECK(mixed.horizontal == rvec({Rational(0), Rational(-1)}));  // J e0 = -e1
  CHECK(vec_is_zero(mixed.vertical));
}

TEST_CASE("bracket is antisymmetric") {
  const CartanData d = su2_data(su2_connection_anchor());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int t = 0; t < 20; ++t) {
    Section s1, s2;
    for (int k = 0; k < 3; ++k) {
      s1.horizontal.push_back(Rational(coef(rng)));
      s2.horizontal.push_back(Rational(coef(rng)));
      s1.vertical.push_back(Rational(coef(rng)));
      s2.vertical.push_back(Rational(coef(rng)));
    }
    const Section a = bracket_constant_sections(d, s1, s2);
    const Section b = bracket_constant_sections(d, s2, s1);
    CHECK(a.horizontal == vec_scale(Rational(-1), b.horizontal));
    CHECK(a.vertical == vec_scale(Rational(-1), b.vertical));
  }
}

TEST_CASE("anchor values") {
  const CartanData sf = space_form(3, Rational(1));
  CHECK(vec_is_zero(anchor(sf, Section{unit(3, 0), unit(3, 1)})));  // point base

  // orbit base with trivial isotropy: vertical sections map to themselves
  const CartanData su2 = su2_data(Matrix::zero(3, 3));
  CHECK(anchor(su2, Section{Vec(3), rvec({Rational(1), Rational(0), Rational(0)})}) ==
        rvec({Rational(1), Rational(0), Rational(0)}));
  // stored zero anchor map sends frame sections to zero
  CHECK(vec_is_zero(anchor(su2, Section{unit(3, 2), Vec(3)})));
}

TEST_CASE("equivariant derivative") {
  const CartanData sf2 = space_form(2, Rational(1));
  // along the rotation generator the constant-curvature template is fixed
  const HomMap2 dr = equivariant_derivative(sf2, rvec({Rational(1)}), sf2.curvature,
                                            EdTarget::GValued);
  CHECK(dr.is_zero());
  // zero direction, zero map
  CHECK(equivariant_derivative(sf2, rvec({Rational(0)}), sf2.curvature, EdTarget::GValued)
            .is_zero());
  CHECK(equivariant_derivative(sf2, rvec({Rational(1)}), HomMap2(2, 2), EdTarget::RnValued)
            .is_zero());

  // the example metric's curvature is not fixed by the first rotation
  const CartanData su2 = su2_data(Matrix::zero(3, 3));
  const HomMap2 dsu = equivariant_derivative(su2, unit(3, 0), su2.curvature, EdTarget::GValued);
  CHECK(dsu.value(0, 2) == rvec({Rational(0), Rational(0), Rational(57)}));

  // linearity in the direction and in the map
  const HomMap2 d1 = equivariant_derivative(su2, unit(3, 1), su2.curvature, EdTarget::GValued);
  const HomMap2 d2 = equivariant_derivative(su2, vec_add(unit(3, 0), unit(3, 1)), su2.curvature,
                                            EdTarget::GValued);
  CHECK(d2 == dsu + d1);
  const HomMap2 dscaled = equivariant_derivative(su2, unit(3, 0), Rational(3) * su2.curvature,
                                                 EdTarget::GValued);
  CHECK(dscaled == Rational(3) * dsu);
}

TEST_CASE("space forms validate across dimensions, curvatures and signatures") {
  for (std::size_t n : {2, 3, 4})
    for (long k : {-2, -1, 0, 1, 2}) {
      const CartanData d = space_form(n, Rational(k));
      const ValidationReport r = validate(d);
      CHECK(r.valid);
      CHECK(r.checks.size() == 5);
    }
  // indefinite signatures
  CHECK(validate(space_form(2, Rational(1), 1, 1)).valid);
  CHECK(validate(space_form(3, Rational(-1), 2, 1)).valid);
  CHECK(validate(space_form(3, Rational(2), 1, 2)).valid);
  CHECK_THROWS_AS(space_form(1, Rational(1)), contract_error);
  CHECK_THROWS_AS(space_form(3, Rational(1), 1, 1), contract_error);
}

TEST_CASE("degenerate data validates") {
  // trivial structure algebra over a two-dimensional frame: an abelian algebra
  MatrixLieBasis empty_g{2, {}};
  const CartanData d = make_cartan_data(2, empty_g, BaseDescriptor::point(), HomMap2(2, 2),
                                        HomMap2(2, 0), Matrix::zero(0, 2));
  CHECK(validate(d).valid);
  const StructureConstants total = total_algebra(d);
  CHECK(total.dim() == 2);
  CHECK(check_jacobi(total).ok);
  CHECK(fingerprint(total).center_dim == 2);
}

TEST_CASE("rescaled curvature stays valid in two dimensions") {
  CartanData d = space_form(2, Rational(1));
  d.curvature.set(0, 1, rvec({Rational(3)}));
  const ValidationReport r = validate(d);
  CHECK(r.valid);  // decided by the full Jacobiator sweep: so(2) fixes any R
  const SpaceFormClass cls = classify_space_form(d);
  CHECK(cls.tag == SpaceFormTag::CompactType);
  CHECK(cls.kappa == Rational(3));
}

TEST_CASE("validator sensitivity: every single curvature slot perturbation fails") {
  const CartanData base = space_form(3, Rational(1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t c = 0; c < 3; ++c) {
        CartanData d = base;
        Vec v = d.curvature.value(i, j);
        v[c] += Rational(1);
        d.curvature.set(i, j, v);
        const ValidationReport r = validate(d);
        CHECK(!r.valid);
        bool witnessed = false;
        for (const auto& check : r.checks)
          for (const auto& w : check.witnesses)
            if (!check.passed && !w.indices.empty()) witnessed = true;
        CHECK(witnessed);
        CHECK(classify_space_form(d).tag == SpaceFormTag::Other);
      }
}

TEST_CASE("total algebra") {
  // flat two-dimensional model gives the Euclidean motion constants
  const StructureConstants flat = total_algebra(space_form(2, Rational(0)));
  StructureConstants expected(3);
  expected.set(0, 2, 1, Rational(1));   // [e0, J] = e1
  expected.set(1, 2, 0, Rational(-1));  // [e1, J] = -e0
  CHECK(flat == expected);

  const StructureConstants round = total_algebra(space_form(3, Rational(1)));
  CHECK(round.dim() == 6);
  CHECK(check_jacobi(round).ok);

  CHECK_THROWS_AS(total_algebra(su2_data(su2_connection_anchor())), contract_error);
}

TEST_CASE("space form classification") {
  const SpaceFormClass compact = classify_space_form(space_form(3, Rational(2)));
  CHECK(compact.tag == SpaceFormTag::CompactType);
  CHECK(compact.kappa == Rational(2));
  CHECK(compact.fingerprints_match);
  REQUIRE(compact.fingerprint_actual.has_value());
  CHECK(compact.fingerprint_actual->killing_signature == Signature{0, 6, 0});

  const SpaceFormClass euclid = classify_space_form(space_form(4, Rational(0)));
  CHECK(euclid.tag == SpaceFormTag::EuclideanType);
  CHECK(euclid.fingerprints_match);
  CHECK(euclid.fingerprint_actual->killing_signature.zero == 4);

  const SpaceFormClass lorentz = classify_space_form(space_form(2, Rational(-5)));
  CHECK(lorentz.tag == SpaceFormTag::LorentzType);
  CHECK(lorentz.kappa == Rational(-5));
  CHECK(lorentz.fingerprints_match);
  CHECK(lorentz.fingerprint_actual->killing_signature == Signature{2, 1, 0});

  // off-template data is rejected with a witness
  CartanData off = space_form(3, Rational(1));
  Vec v = off.curvature.value(0, 2);
  v[0] += Rational(1);
  off.curvature.set(0, 2, v);
  const SpaceFormClass other = classify_space_form(off);
  CHECK(other.tag == SpaceFormTag::Other);
  CHECK(other.witness.has_value());
  CHECK_THROWS_AS(classify_space_form(su2_data(Matrix::zero(3, 3))), contract_error);
}

TEST_CASE("symmetry and homogeneity predicates") {
  CHECK(is_locally_symmetric_data(space_form(2, Rational(1))));
  CHECK(is_locally_symmetric_data(space_form(4, Rational(-2))));
  CHECK(is_locally_symmetric_data(su2_data(Matrix::zero(3, 3))));
  CHECK(!is_locally_symmetric_data(su2_data(su2_connection_anchor())));

  CartanData torsioned = space_form(2, Rational(1));
  torsioned.torsion.set(0, 1, rvec({Rational(1), Rational(0)}));
  CHECK(!is_locally_symmetric_data(torsioned));

  CHECK(is_homogeneous_data(space_form(2, Rational(1))));
  CHECK(is_homogeneous_data(su2_data(Matrix::zero(3, 3))));
}

TEST_CASE("first bianchi membership") {
  // zero map
  CHECK(first_bianchi_membership(std::vector<HomMap2>(3, HomMap2(3, 3))).member);
  // two slots: no triples, vacuously inside
  std::vector<HomMap2> two(2, HomMap2(2, 1));
  two[0].set(0, 1, rvec({Rational(7)}));
  CHECK(first_bianchi_membership(two).member);
  // single asymmetric slice fails the cyclic sum with a witness
  std::vector<HomMap2> bad(3, HomMap2(3, 3));
  bad[0].set(1, 2, rvec({Rational(1), Rational(0), Rational(0)}));
  const MembershipResult r = first_bianchi_membership(bad);
  CHECK(!r.member);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("bianchi identities on validated data") {
  for (std::size_t n : {2, 3, 4})
    for (long k : {-2, 0, 2}) {
      const ValidationReport r = check_bianchi(space_form(n, Rational(k)));
      CHECK(r.valid);
    }
  const ValidationReport su2 = check_bianchi(su2_data(su2_connection_anchor()));
  CHECK(su2.valid);
  CHECK(check_passed(su2, "bianchi_torsion"));
  CHECK(check_passed(su2, "bianchi_curvature"));

  CartanData bad = space_form(3, Rational(1));
  Vec v = bad.curvature.value(0, 1);
  v[1] += Rational(2);
  bad.curvature.set(0, 1, v);
  CHECK_THROWS_AS(check_bianchi(bad), contract_error);
}

TEST_CASE("example metric data: stored zero anchor map fails exactly the anchor axiom") {
  const CartanData stored = su2_data(Matrix::zero(3, 3));
  const ValidationReport r = validate(stored);
  CHECK(check_passed(r, "g_closure_jacobi"));
  CHECK(check_passed(r, "isotropy_subalgebra"));
  CHECK(check_passed(r, "isotropy_stationarity"));
  CHECK(check_passed(r, "jacobi_base_point"));
  CHECK(!check_passed(r, "anchor_compatibility"));
  CHECK(!r.valid);
  // the failing pairs are frame-frame, with residual -R(e_i, e_j) mod k
  for (const auto& c : r.checks)
    if (c.name == "anchor_compatibility") {
      REQUIRE(c.witnesses.size() == 3);
      CHECK(c.witnesses[0].indices == std::vector<std::size_t>{0, 1});
      CHECK(c.witnesses[0].residual == rvec({-c1, Rational(0), Rational(0)}));
    }
}

TEST_CASE("example metric data: connection-derived anchor map validates fully") {
  const CartanData corrected = su2_data(su2_connection_anchor());
  const ValidationReport r = validate(corrected);
  CHECK(r.valid);
  for (const auto& c : r.checks) CHECK(c.passed);
}

TEST_CASE("base-point jacobiator re-run through an independent naive expansion") {
  check_naive_jacobiator_vanishes(space_form(2, Rational(1)));
  check_naive_jacobiator_vanishes(space_form(3, Rational(-2)));
  check_naive_jacobiator_vanishes(space_form(3, Rational(1), 2, 1));
  check_naive_jacobiator_vanishes(su2_data(su2_connection_anchor()));
  // the stored-zero-anchor variant also has a vanishing base-point
  // Jacobiator; it is the anchor axiom that separates the two
  check_naive_jacobiator_vanishes(su2_data(Matrix::zero(3, 3)));
}

TEST_CASE("isotropy subalgebra check rejects non-subalgebras") {
  // span{G1 rotation} is a subalgebra of so(3); span{G1, G2} is not
  MatrixLieBasis so3 = so_pq_basis(3, 0);
  HomMap2 r0(3, 3);
  const CartanData good = make_cartan_data(3, so3, BaseDescriptor::homogeneous({unit(3, 0)}),
                                           HomMap2(3, 3), r0, Matrix::zero(3, 3));
  CHECK(validate(good).valid);

  const CartanData bad = make_cartan_data(
      3, so3, BaseDescriptor::homogeneous({unit(3, 0), unit(3, 1)}), HomMap2(3, 3), r0,
      Matrix::zero(3, 3));
  const ValidationReport r = validate(bad);
  CHECK(!r.valid);
  CHECK(!check_passed(r, "isotropy_subalgebra"));
}

TEST_CASE("anchor map is canonicalized against the isotropy") {
  MatrixLieBasis so3 = so_pq_basis(3, 0);
  Matrix f(3, 3);
  f.at(0, 0) = Rational(5);  // inside the isotropy span: must project away
  f.at(1, 1) = Rational(2);
  const CartanData d = make_cartan_data(3, so3, BaseDescriptor::homogeneous({unit(3, 0)}),
                                        HomMap2(3, 3), HomMap2(3, 3), f);
  CHECK(d.anchor_map.at(0, 0) == Rational(0));
  CHECK(d.anchor_map.at(1, 1) == Rational(2));
}
