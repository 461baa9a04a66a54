#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "homtwist/errors.hpp"

namespace homtwist {

/// Exact arbitrary-precision rational scalar.
///
/// Always kept canonical: gcd(|num|, den) = 1 and den > 0. This is the only
/// scalar type in the library; swapping it for another exact field would not
/// touch any of the tensor or axiom code.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design, scalars are pervasive
  Rational(long n) : v_(n) {}         // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw BadRational("denominator is zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" (decimal, optional leading '-', q > 0 digits).
  /// Input need not be in lowest terms; the result always is.
  static Rational parse(std::string_view text) {
    if (!looks_like_rational(text))
      throw BadRational("malformed rational literal '" + std::string(text) + "'");
    const auto slash = text.find('/');
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
      throw BadRational("malformed rational literal '" + std::string(text) + "'");
    if (slash != std::string_view::npos && mpz_sgn(v.get_den().get_mpz_t()) == 0)
      throw BadRational("denominator is zero in '" + std::string(text) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw BadRational("division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);  // GMP results of +,-,* on canonical operands are canonical
    return r;
  }

  static bool looks_like_rational(std::string_view s) {
    size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    return digits > 0 && i == s.size();
  }

  mpq_class v_;
};

}  // namespace homtwist
