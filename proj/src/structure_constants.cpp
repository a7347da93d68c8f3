#include "cartankit/structure_constants.hpp"

namespace cartankit {

StructureConstants StructureConstants::from_full(const std::vector<std::vector<Vec>>& c) {
  const std::size_t d = c.size();
  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (c[i].size() != d) throw shape_error("structure constant array is ragged");
    for (std::size_t j = 0; j < d; ++j) {
      if (c[i][j].size() != d) throw shape_error("structure constant array is ragged");
      for (std::size_t k = 0; k < d; ++k)
        if (c[i][j][k] != -c[j][i][k])
          throw contract_error("structure constants violate antisymmetry at (" +
                               std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) sc.table_[wedge_index(d, i, j)] = c[i][j];
  return sc;
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  if (k >= dim_) throw shape_error("structure constant target index out of range");
  if (i < j)
    table_[wedge_index(dim_, i, j)][k] = v;
  else if (j < i)
    table_[wedge_index(dim_, j, i)][k] = -v;
  else if (!v.is_zero())
    throw contract_error("diagonal structure constant must vanish");
}

void StructureConstants::set_row(std::size_t i, std::size_t j, Vec coeffs) {
  if (coeffs.size() != dim_) throw shape_error("structure constant row of wrong length");
  if (i < j)
    table_[wedge_index(dim_, i, j)] = std::move(coeffs);
  else if (j < i)
    table_[wedge_index(dim_, j, i)] = vec_scale(Rational(-1), coeffs);
  else if (!vec_is_zero(coeffs))
    throw contract_error("diagonal structure constant row must vanish");
}

Rational StructureConstants::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw shape_error("structure constant index out of range");
  if (i == j) return Rational(0);
  if (i < j) return table_[wedge_index(dim_, i, j)][k];
  return -table_[wedge_index(dim_, j, i)][k];
}

Vec StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return Vec(dim_);
  if (i < j) return table_[wedge_index(dim_, i, j)];
  return vec_scale(Rational(-1), table_[wedge_index(dim_, j, i)]);
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw shape_error("bracket argument of wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Rational coeff = x[i] * y[j] - x[j] * y[i];
      if (coeff.is_zero()) continue;
      const Vec& row = table_[wedge_index(dim_, i, j)];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += coeff * row[k];
    }
  return out;
}

Matrix StructureConstants::ad(const Vec& x) const {
  if (x.size() != dim_) throw shape_error("ad argument of wrong length");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec e(dim_);
    e[j] = 1;
    const Vec col = bracket(x, e);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

JacobiReport check_jacobi(const StructureConstants& sc) {
  JacobiReport report;
  const std::size_t d = sc.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vec res(d);
        for (std::size_t m = 0; m < d; ++m) {
          const Rational cij = sc.c(i, j, m), cjk = sc.c(j, k, m), cki = sc.c(k, i, m);
          if (cij.is_zero() && cjk.is_zero() && cki.is_zero()) continue;
          for (std::size_t l = 0; l < d; ++l)
            res[l] += cij * sc.c(m, k, l) + cjk * sc.c(m, i, l) + cki * sc.c(m, j, l);
        }
        if (!vec_is_zero(res)) {
          report.ok = false;
          report.violations.push_back({i, j, k, std::move(res)});
        }
      }
  return report;
}

StructureConstants change_basis(const StructureConstants& sc, const Matrix& p) {
  const std::size_t d = sc.dim();
  if (p.rows() != d || p.cols() != d) throw shape_error("basis change matrix of wrong size");
  const auto q = inverse(p);
  if (!q) throw contract_error("basis change matrix is singular");
  StructureConstants out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      // [b'_i, b'_j] in the old basis, then re-expressed in the new one.
      const Vec br = sc.bracket(p.col(i), p.col(j));
      out.set_row(i, j, q->apply(br));
    }
  return out;
}

}  // namespace cartankit
