#include "cartankit/hom_map2.hpp"

namespace cartankit {

void HomMap2::set(std::size_t i, std::size_t j, Vec value) {
  if (value.size() != target_dim_) throw shape_error("hom-map value of wrong length");
  if (i < j)
    vals_[wedge_index(n_, i, j)] = std::move(value);
  else if (j < i)
    vals_[wedge_index(n_, j, i)] = vec_scale(Rational(-1), value);
  else if (!vec_is_zero(value))
    throw contract_error("hom-map diagonal value must vanish");
}

Vec HomMap2::value(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw shape_error("hom-map index out of range");
  if (i == j) return Vec(target_dim_);
  if (i < j) return vals_[wedge_index(n_, i, j)];
  return vec_scale(Rational(-1), vals_[wedge_index(n_, j, i)]);
}

Vec HomMap2::eval(const Vec& u, const Vec& v) const {
  if (u.size() != n_ || v.size() != n_) throw shape_error("hom-map argument of wrong length");
  Vec out(target_dim_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Rational coeff = u[i] * v[j] - u[j] * v[i];
      if (coeff.is_zero()) continue;
      const Vec& val = vals_[wedge_index(n_, i, j)];
      for (std::size_t k = 0; k < target_dim_; ++k) out[k] += coeff * val[k];
    }
  return out;
}

bool HomMap2::is_zero() const {
  for (const auto& v : vals_)
    if (!vec_is_zero(v)) return false;
  return true;
}

HomMap2 operator+(const HomMap2& a, const HomMap2& b) {
  if (a.n_ != b.n_ || a.target_dim_ != b.target_dim_) throw shape_error("hom-map sum shape mismatch");
  HomMap2 out(a.n_, a.target_dim_);
  for (std::size_t w = 0; w < a.vals_.size(); ++w) out.vals_[w] = vec_add(a.vals_[w], b.vals_[w]);
  return out;
}

HomMap2 operator-(const HomMap2& a, const HomMap2& b) {
  if (a.n_ != b.n_ || a.target_dim_ != b.target_dim_)
    throw shape_error("hom-map difference shape mismatch");
  HomMap2 out(a.n_, a.target_dim_);
  for (std::size_t w = 0; w < a.vals_.size(); ++w) out.vals_[w] = vec_sub(a.vals_[w], b.vals_[w]);
  return out;
}

HomMap2 operator*(const Rational& s, const HomMap2& a) {
  HomMap2 out(a.n_, a.target_dim_);
  for (std::size_t w = 0; w < a.vals_.size(); ++w) out.vals_[w] = vec_scale(s, a.vals_[w]);
  return out;
}

}  // namespace cartankit
