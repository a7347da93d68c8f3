#include "cartankit/matrix.hpp"

namespace cartankit {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw shape_error("ragged initializer for matrix");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Matrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw shape_error("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw shape_error("matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("matrix sum shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("matrix difference shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw shape_error("matrix product inner dimensions differ");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw shape_error("commutator needs square matrices of equal size");
  return mat_mul(a, b) - mat_mul(b, a);
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector sum size mismatch");
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return v;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector difference size mismatch");
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

Vec vec_scale(const Rational& s, const Vec& a) {
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = s * a[i];
  return v;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace cartankit
