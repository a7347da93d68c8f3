#include "cartankit/lie_algebra.hpp"

namespace cartankit {

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

Matrix MatrixLieBasis::realize(const Vec& coeffs) const {
  if (coeffs.size() != basis.size()) throw shape_error("coefficient vector of wrong length");
  Matrix m(ambient, ambient);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (coeffs[a].is_zero()) continue;
    m = m + coeffs[a] * basis[a];
  }
  return m;
}

Vec MatrixLieBasis::act(const Vec& coeffs, const Vec& v) const {
  return realize(coeffs).apply(v);
}

std::optional<Vec> coordinates_in_basis(const MatrixLieBasis& b, const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(b.basis.size());
  for (const auto& g : b.basis) cols.push_back(flatten(g));
  return coordinates_in_span(cols, flatten(m));
}

StructureConstants structure_constants_from_matrices(const MatrixLieBasis& b) {
  const std::size_t d = b.basis.size();
  for (const auto& g : b.basis)
    if (g.rows() != b.ambient || g.cols() != b.ambient)
      throw shape_error("basis matrix has wrong ambient size");
  std::vector<Vec> cols;
  cols.reserve(d);
  for (const auto& g : b.basis) cols.push_back(flatten(g));
  if (span_dimension(cols) != d) throw dependent_basis_error();
  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix c = commutator(b.basis[i], b.basis[j]);
      auto coords = coordinates_in_span(cols, flatten(c));
      if (!coords) throw not_closed_error(i, j);
      sc.set_row(i, j, std::move(*coords));
    }
  return sc;
}

Matrix killing_form(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = 1;
    ads.push_back(sc.ad(e));
  }
  Matrix b(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Rational t = mat_mul(ads[i], ads[j]).trace();
      b.at(i, j) = t;
      b.at(j, i) = t;
    }
  return b;
}

Matrix ad(const StructureConstants& sc, const Vec& x) { return sc.ad(x); }

bool is_automorphism(const StructureConstants& sc, const Matrix& g) {
  const std::size_t d = sc.dim();
  if (g.rows() != d || g.cols() != d) throw shape_error("automorphism candidate of wrong size");
  if (mat_rank(g) != d) throw contract_error("automorphism candidate is singular");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec lhs = g.apply(sc.bracket_basis(i, j));
      const Vec rhs = sc.bracket(g.col(i), g.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

// Dimensions along a descending series; stops once the dimension repeats.
// A zero term is terminal and is not repeated.
std::vector<std::size_t> series_dims(const StructureConstants& sc, bool lower_central) {
  const std::size_t d = sc.dim();
  if (d == 0) return {0};
  std::vector<Vec> full;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = 1;
    full.push_back(e);
  }
  std::vector<std::size_t> dims{d};
  std::vector<Vec> current = full;
  while (true) {
    const std::vector<Vec>& left = lower_central ? full : current;
    std::vector<Vec> brackets;
    for (const auto& x : left)
      for (const auto& y : current) {
        Vec b = sc.bracket(x, y);
        if (!vec_is_zero(b)) brackets.push_back(std::move(b));
      }
    const std::size_t next_dim = span_dimension(brackets);
    dims.push_back(next_dim);
    if (next_dim == 0) break;
    if (next_dim == dims[dims.size() - 2]) break;
    // keep an independent subset as the next term's basis
    std::vector<Vec> reduced;
    for (const auto& b : brackets) {
      reduced.push_back(b);
      if (span_dimension(reduced) < reduced.size()) reduced.pop_back();
      if (reduced.size() == next_dim) break;
    }
    current = std::move(reduced);
  }
  return dims;
}

}  // namespace

AlgebraFingerprint fingerprint(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  AlgebraFingerprint fp;
  fp.dim = d;
  fp.killing_signature = sym_signature(killing_form(sc));
  // center = kernel of x -> ad(x), stacked over all matrix slots
  Matrix stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = 1;
    const Matrix adi = sc.ad(e);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked.at(r * d + c, i) = adi.at(r, c);
  }
  fp.center_dim = d - mat_rank(stacked);
  fp.derived_series_dims = series_dims(sc, false);
  fp.lower_central_dims = series_dims(sc, true);
  return fp;
}

Matrix pq_form(std::size_t p, std::size_t q) {
  Matrix eta(p + q, p + q);
  for (std::size_t i = 0; i < p + q; ++i) eta.at(i, i) = i < p ? 1 : -1;
  return eta;
}

MatrixLieBasis so_pq_basis(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (n == 0) throw contract_error("so(p,q) needs p + q >= 1");
  MatrixLieBasis b;
  b.ambient = n;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      b.basis.push_back(Matrix::unit(n, i, j) - Matrix::unit(n, j, i));
  for (std::size_t i = p; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      b.basis.push_back(Matrix::unit(n, i, j) - Matrix::unit(n, j, i));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = p; j < n; ++j)
      b.basis.push_back(Matrix::unit(n, i, j) + Matrix::unit(n, j, i));
  return b;
}

std::optional<std::pair<std::size_t, std::size_t>> detect_so_pq(const MatrixLieBasis& b) {
  const std::size_t n = b.ambient;
  if (n == 0 || b.dim() != wedge_count(n)) return std::nullopt;
  for (std::size_t p = 0; p <= n; ++p)
    if (b == so_pq_basis(p, n - p)) return std::make_pair(p, n - p);
  return std::nullopt;
}

}  // namespace cartankit
