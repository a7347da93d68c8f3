#pragma once

#include "cartankit/structure_constants.hpp"

namespace cartankit {

/// Linear map from the second exterior power of R^n into a target space of
/// the given dimension; values stored on the pairs (i, j) with i < j, so
/// antisymmetry is structural.
class HomMap2 {
 public:
  HomMap2() : n_(0), target_dim_(0) {}
  HomMap2(std::size_t n, std::size_t target_dim)
      : n_(n), target_dim_(target_dim), vals_(wedge_count(n), Vec(target_dim)) {}

  std::size_t n() const { return n_; }
  std::size_t target_dim() const { return target_dim_; }

  void set(std::size_t i, std::size_t j, Vec value);
  /// Value on (b_i, b_j); negated when i > j, zero when i = j.
  Vec value(std::size_t i, std::size_t j) const;
  /// Bilinear evaluation on arbitrary vectors.
  Vec eval(const Vec& u, const Vec& v) const;

  bool is_zero() const;

  friend HomMap2 operator+(const HomMap2& a, const HomMap2& b);
  friend HomMap2 operator-(const HomMap2& a, const HomMap2& b);
  friend HomMap2 operator*(const Rational& s, const HomMap2& a);
  friend bool operator==(const HomMap2&, const HomMap2&) = default;

 private:
  std::size_t n_, target_dim_;
  std::vector<Vec> vals_;
};

}  // namespace cartankit
