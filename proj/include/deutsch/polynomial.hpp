#pragma once

// Dense univariate polynomials over a coefficient ring.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/bigint.hpp"
#include "deutsch/errors.hpp"

namespace deutsch {

/// Dense polynomial sum c[k] x^k. Canonical: no trailing zero coefficient,
/// so the zero polynomial has an empty coefficient list.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  Polynomial(const T& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(int constant) : Polynomial(T(constant)) {}  // NOLINT
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const T& coeff, std::size_t degree) {
    if (coeff == 0) return {};
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  /// The variable itself.
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const noexcept { return c_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  const std::vector<T>& coefficients() const noexcept { return c_; }

  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  const T& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  long valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) return static_cast<long>(k);
    return -1;
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  std::string to_string(const std::string& var = "v") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      T c = c_[k];
      bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const bool unit = (c == 1);
      if (k == 0 || !unit) os << deutsch::to_string(c);
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyV = Polynomial<BigRat>;
using PolyZ = Polynomial<BigInt>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, unsigned e) {
  Polynomial<T> r(T(1)), b = base;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw AlgebraError(AlgebraError::Kind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<T> quot(rem.size() - db, T(0));
  const T& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    T q = rem[k + db] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
  }
  rem.resize(db);
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Rescales a nonzero polynomial so that its leading coefficient is 1.
template <class T>
Polynomial<T> monic(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  T inv = T(1) / p.leading();
  return p * inv;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

/// 1 - x^k.
template <class T>
Polynomial<T> one_minus_power(std::size_t k) {
  return Polynomial<T>(T(1)) - Polynomial<T>::monomial(T(1), k);
}

}  // namespace deutsch
