#include "cartankit/linalg.hpp"

#include <gmpxx.h>

namespace cartankit {

namespace {

// Row-wise denominator clearing; preserves row space and null space.
std::vector<std::vector<mpz_class>> integerized(const Matrix& a) {
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_class d = a.at(i, j).den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a.at(i, j);
      m[i][j] = x.num() * (l / x.den());
    }
  }
  return m;
}

}  // namespace

std::size_t mat_rank(const Matrix& a) {
  auto m = integerized(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    // Bareiss step: division by the previous pivot is exact (Sylvester identity).
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw error("fraction-free elimination lost exact divisibility");
        m[i][j] = q;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

namespace {

// Integer scaling with content 1 and positive leading entry.
Matrix normalized_column(const Vec& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    l = l / g * x.den();
  }
  std::vector<mpz_class> ints(v.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (l / v[i].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (content == 0) content = 1;
  int lead = 0;
  for (const auto& z : ints)
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  if (lead < 0) content = -content;
  Matrix out(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), content.get_mpz_t());
    out.at(i, 0) = Rational(mpq_class(q));
  }
  return out;
}

}  // namespace

std::vector<Matrix> mat_kernel(const Matrix& a) {
  Matrix m = a;
  const std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(normalized_column(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw shape_error("solve: rhs length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw shape_error("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& target) {
  if (basis.empty()) return vec_is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Matrix a(basis.front().size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != a.rows()) throw shape_error("span basis of mixed lengths");
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, j) = basis[j][i];
  }
  return solve(a, target);
}

std::size_t span_dimension(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  Matrix a(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != a.cols()) throw shape_error("span vectors of mixed lengths");
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = vectors[i][j];
  }
  return mat_rank(a);
}

Signature sym_signature(const Matrix& s) {
  if (!s.is_square()) throw contract_error("signature of non-square matrix");
  if (!s.is_symmetric()) throw contract_error("signature of non-symmetric matrix");
  Matrix m = s;
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t l = k + 1;
      while (l < n && m.at(l, l).is_zero()) ++l;
      if (l < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(l, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, l));
      } else {
        // all remaining diagonal entries vanish: pull in an off-diagonal one
        std::size_t p = n;
        for (l = k + 1; l < n && p == n; ++l)
          if (!m.at(k, l).is_zero()) p = l;
        if (p == n) {
          ++sig.zero;  // whole row is zero in the trailing block
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) m.at(k, j) += m.at(p, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, k) += m.at(i, p);
      }
    }
    const Rational pivot = m.at(k, k);
    if (pivot.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const Rational f = m.at(i, k) / pivot;
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      for (std::size_t j = 0; j < n; ++j) m.at(j, i) = m.at(j, i) - f * m.at(j, k);
    }
  }
  return sig;
}

}  // namespace cartankit
