#pragma once

#include <initializer_list>
#include <vector>

#include "cartankit/rational.hpp"

namespace cartankit {

using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Elementary matrix with a single 1 at (i, j).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  Rational trace() const;
  Matrix transposed() const;
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  /// Matrix applied to a column vector.
  Vec apply(const Vec& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix operator-() const { return Rational(-1) * *this; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact product; throws shape_error unless a.cols = b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// ab - ba for square matrices of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

// small exact-vector helpers shared across modules
Vec vec_zero(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace cartankit
