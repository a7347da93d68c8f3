#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "cartankit/errors.hpp"

namespace cartankit {

/// Exact rational scalar. Always kept canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den) {
    if (den == 0) throw contract_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" with an optional leading sign on p. Nothing else.
  static Rational parse(const std::string& s) {
    const auto bad = [&s]() -> Rational {
      throw contract_error("not a rational literal: '" + s + "'");
    };
    if (s.empty()) return bad();
    std::size_t slash = s.find('/');
    std::string num = s.substr(0, slash == std::string::npos ? s.size() : slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) return bad();
    mpz_class n(num), d(den);
    if (d == 0) return bad();
    Rational r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
  }

  /// "p/q", or just "p" when q = 1; sign carried by the numerator.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw contract_error("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational operator"" _q(unsigned long long n) { return Rational(static_cast<long>(n)); }

}  // namespace cartankit
