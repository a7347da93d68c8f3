#include "cartankit/left_invariant.hpp"

#include <map>
#include <string>

namespace cartankit {

void validate_spec(const MetricLieGroupSpec& spec) {
  const JacobiReport jr = check_jacobi(spec.h_constants);
  if (!jr.ok) throw contract_error("frame constants violate the Jacobi identity");
  if (spec.ambient_frame) {
    const StructureConstants derived = structure_constants_from_matrices(*spec.ambient_frame);
    if (!(derived == spec.h_constants))
      throw contract_error("ambient frame does not reproduce the declared constants");
  }
}

bool ConnectionTable::metric_compatible() const {
  for (const auto& m : christoffel)
    if (!m.is_antisymmetric()) return false;
  return true;
}

bool ConnectionTable::torsion_free(const MetricLieGroupSpec& spec) const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (gamma(i, j, k) - gamma(j, i, k) != spec.h_constants.c(i, j, k)) return false;
  return true;
}

ConnectionTable koszul_connection(const MetricLieGroupSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.dim();
  const auto& c = spec.h_constants;
  ConnectionTable conn;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix g(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        g.at(k, j) = half * (c.c(i, j, k) - c.c(j, k, i) + c.c(k, i, j));
    conn.christoffel.push_back(std::move(g));
  }
  return conn;
}

const Matrix& CurvatureTensor::value(std::size_t i, std::size_t j) const {
  return values[wedge_index(n, i, j)];
}

Matrix CurvatureTensor::value_signed(std::size_t i, std::size_t j) const {
  if (i < j) return values[wedge_index(n, i, j)];
  return -values[wedge_index(n, j, i)];
}

bool CurvatureTensor::is_zero() const {
  for (const auto& m : values)
    if (!m.is_zero()) return false;
  return true;
}

bool CurvatureTensor::metric_compatible() const {
  for (const auto& m : values)
    if (!m.is_antisymmetric()) return false;
  return true;
}

bool CurvatureTensor::satisfies_first_bianchi() const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec e_i(n), e_j(n), e_k(n);
        e_i[i] = 1;
        e_j[j] = 1;
        e_k[k] = 1;
        const Vec sum = vec_add(vec_add(value(i, j).apply(e_k), value_signed(j, k).apply(e_i)),
                                value_signed(k, i).apply(e_j));
        if (!vec_is_zero(sum)) return false;
      }
  return true;
}

bool CurvatureTensor::satisfies_pair_symmetry() const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (value(i, j).at(k, l) != value(k, l).at(i, j)) return false;
  return true;
}

CurvatureTensor riemann_curvature(const ConnectionTable& conn, const MetricLieGroupSpec& spec) {
  const std::size_t n = spec.dim();
  if (conn.dim() != n) throw shape_error("connection and spec dimensions differ");
  CurvatureTensor curv;
  curv.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r = commutator(conn.christoffel[i], conn.christoffel[j]);
      for (std::size_t l = 0; l < n; ++l) {
        const Rational cl = spec.h_constants.c(i, j, l);
        if (!cl.is_zero()) r = r - cl * conn.christoffel[l];
      }
      curv.values.push_back(std::move(r));
    }
  return curv;
}

std::vector<Rational> sectional_curvatures(const CurvatureTensor& curv) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < curv.n; ++i)
    for (std::size_t j = i + 1; j < curv.n; ++j) out.push_back(curv.value(i, j).at(i, j));
  return out;
}

MilnorSectional milnor_oracle(const Rational& l1, const Rational& l2, const Rational& l3) {
  const Rational half(1, 2);
  const Rational sigma = half * (l1 + l2 + l3);
  const Rational m1 = sigma - l1, m2 = sigma - l2, m3 = sigma - l3;
  const Rational two(2);
  const Rational r1 = two * m2 * m3, r2 = two * m1 * m3, r3 = two * m1 * m2;
  return {half * (r1 + r2 - r3), half * (r1 + r3 - r2), half * (r2 + r3 - r1)};
}

MetricLieGroupSpec milnor_frame_spec(const Rational& l1, const Rational& l2, const Rational& l3) {
  StructureConstants sc(3);
  sc.set(1, 2, 0, l1);
  sc.set(2, 0, 1, l2);
  sc.set(0, 1, 2, l3);
  return {sc, std::nullopt};
}

namespace {

std::string matrix_key(const Matrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m.at(i, j).str();
      k += ',';
    }
  return k;
}

}  // namespace

std::vector<Matrix> isotropy_group_closure(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) throw shape_error("closure generators of mixed sizes");
    if (mat_rank(g) != n) throw contract_error("closure generator is singular");
  }
  std::vector<Matrix> elements{Matrix::identity(n)};
  std::map<std::string, std::size_t> seen{{matrix_key(elements[0]), 0}};
  std::size_t next = 0;
  while (next < elements.size()) {
    const Matrix current = elements[next++];
    for (const auto& g : gens) {
      Matrix prod = mat_mul(current, g);
      if (seen.emplace(matrix_key(prod), elements.size()).second) {
        elements.push_back(std::move(prod));
        if (elements.size() > cap) throw closure_cap_error(cap);
      }
    }
  }
  return elements;
}

namespace {

bool is_orthogonal(const Matrix& g) {
  return g.is_square() && mat_mul(g.transposed(), g) == Matrix::identity(g.rows());
}

bool is_derivation(const StructureConstants& sc, const Matrix& d) {
  const std::size_t n = sc.dim();
  auto unit = [n](std::size_t a) {
    Vec v(n);
    v[a] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = d.apply(sc.bracket_basis(i, j));
      const Vec rhs = vec_add(sc.bracket(d.col(i), unit(j)), sc.bracket(unit(i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

CartanData export_cartan_data(const MetricLieGroupSpec& spec, const CurvatureTensor& curv,
                              const std::vector<Matrix>& group_generators,
                              const std::vector<Matrix>& algebra_generators) {
  validate_spec(spec);
  const std::size_t n = spec.dim();
  if (curv.n != n) throw shape_error("curvature and spec dimensions differ");

  for (const auto& k : group_generators) {
    if (k.rows() != n || k.cols() != n) throw shape_error("isotropy generator of wrong size");
    if (!is_orthogonal(k)) throw contract_error("isotropy generator is not orthogonal");
    if (!is_automorphism(spec.h_constants, k))
      throw contract_error("isotropy generator is not an automorphism of the frame constants");
  }

  MatrixLieBasis so_n = so_pq_basis(n, 0);
  std::vector<Vec> isotropy;
  for (const auto& a : algebra_generators) {
    if (a.rows() != n || a.cols() != n) throw shape_error("isotropy algebra generator of wrong size");
    if (!a.is_antisymmetric())
      throw contract_error("isotropy algebra generator is not antisymmetric");
    if (!is_derivation(spec.h_constants, a))
      throw contract_error("isotropy algebra generator is not a derivation of the frame constants");
    auto coords = coordinates_in_basis(so_n, a);
    if (!coords) throw contract_error("isotropy algebra generator left so(n)");
    isotropy.push_back(std::move(*coords));
  }

  HomMap2 r0(n, so_n.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = coordinates_in_basis(so_n, curv.value(i, j));
      if (!coords) throw contract_error("curvature value is not antisymmetric");
      r0.set(i, j, std::move(*coords));
    }

  const std::size_t so_dim = so_n.dim();
  return make_cartan_data(n, std::move(so_n), BaseDescriptor::homogeneous(std::move(isotropy)),
                          HomMap2(n, n), std::move(r0), Matrix::zero(so_dim, n));
}

Matrix connection_anchor_map(const ConnectionTable& conn) {
  const std::size_t n = conn.dim();
  MatrixLieBasis so_n = so_pq_basis(n, 0);
  Matrix f(so_n.dim(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = coordinates_in_basis(so_n, -conn.christoffel[j]);
    if (!coords) throw contract_error("connection matrices must be antisymmetric");
    for (std::size_t a = 0; a < so_n.dim(); ++a) f.at(a, j) = (*coords)[a];
  }
  return f;
}

StructureConstants gram_orthonormalize(const StructureConstants& sc, const Matrix& gram) {
  const std::size_t n = sc.dim();
  if (gram.rows() != n || gram.cols() != n) throw shape_error("Gram matrix of wrong size");
  if (!gram.is_symmetric()) throw contract_error("Gram matrix is not symmetric");

  // G = L D L^T with unit lower-triangular L; every pivot must be positive
  // and a rational square for the scaling to stay rational.
  Matrix l = Matrix::identity(n);
  Vec dvals(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = gram.at(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= l.at(j, k) * l.at(j, k) * dvals[k];
    if (dj.sign() <= 0) throw contract_error("Gram matrix is not positive definite");
    dvals[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = gram.at(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k) * dvals[k];
      l.at(i, j) = v / dj;
    }
  }
  Vec inv_sqrt(n);
  for (std::size_t j = 0; j < n; ++j) {
    const mpz_class num = dvals[j].num(), den = dvals[j].den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      throw contract_error("Gram pivot " + dvals[j].str() +
                           " is not a rational square; exact orthonormalization impossible");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    inv_sqrt[j] = Rational(mpq_class(rd, rn));
  }

  const auto lt_inv = inverse(l.transposed());
  if (!lt_inv) throw error("triangular factor unexpectedly singular");
  // columns of S are the orthonormal frame in the old basis
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = lt_inv->at(i, j) * inv_sqrt[j];

  if (mat_mul(mat_mul(s.transposed(), gram), s) != Matrix::identity(n))
    throw error("orthonormalization did not reach the identity Gram matrix");
  return change_basis(sc, s);
}

}  // namespace cartankit
