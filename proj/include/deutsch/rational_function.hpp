#pragma once

// Rational functions in one variable over a field, kept in canonical form.

#include <string>
#include <utility>

#include "deutsch/polynomial.hpp"

namespace deutsch {

/// num/den with gcd(num, den) = 1 and den monic. Two canonical values are
/// equal exactly when their numerators and denominators are equal.
template <class T>
class RationalFunction {
 public:
  using Poly = Polynomial<T>;

  RationalFunction() : num_(), den_(T(1)) {}
  RationalFunction(const T& c) : num_(c), den_(T(1)) {}                     // NOLINT
  RationalFunction(int c) : RationalFunction(T(c)) {}                      // NOLINT
  RationalFunction(const Poly& p) : num_(p), den_(T(1)) {}                 // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// Value at a point; throws DivisionByZero at a pole.
  template <class U>
  U evaluate(const U& x) const {
    U d = den_.template evaluate<U>(x);
    if (d == 0) throw AlgebraError(AlgebraError::Kind::DivisionByZero, "rational function evaluated at a pole");
    return num_.template evaluate<U>(x) / d;
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first so the products stay small.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n = divmod(a.num_, g1).first * divmod(b.num_, g2).first;
    Poly d = divmod(a.den_, g2).first * divmod(b.den_, g1).first;
    return RationalFunction(std::move(n), std::move(d));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw AlgebraError(AlgebraError::Kind::DivisionByZero, "rational function division by zero");
    return a * RationalFunction(b.den_, b.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "v") const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  struct Canonical {};
  RationalFunction(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw AlgebraError(AlgebraError::Kind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(T(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    T lead = den_.leading();
    if (lead != 1) {
      T inv = T(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

template <class T>
RationalFunction<T> pow(const RationalFunction<T>& base, int e) {
  if (e < 0) return RationalFunction<T>(T(1)) / pow(base, -e);
  return RationalFunction<T>(pow(base.num(), static_cast<unsigned>(e)), pow(base.den(), static_cast<unsigned>(e)));
}

using RatFnV = RationalFunction<BigRat>;

}  // namespace deutsch
