#pragma once

// Truncated formal power series with an explicit order.

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "deutsch/polynomial.hpp"

namespace deutsch {

/// c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}). Coefficients past the order are
/// unknown; reading one throws. Binary operations keep the smaller order.
template <class T>
class Series {
 public:
  using value_type = T;

  Series() : c_(1, T(0)) {}
  explicit Series(std::size_t order) : c_(order + 1, T(0)) {}
  Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {  // NOLINT
    if (c_.empty()) throw AlgebraError(AlgebraError::Kind::UnknownCoefficient, "series needs at least one coefficient");
  }

  static Series constant(const T& c, std::size_t order) {
    Series s(order);
    s.c_[0] = c;
    return s;
  }

  /// The series variable itself, z + O(z^{N+1}).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  static Series from_polynomial(const Polynomial<T>& p, std::size_t order) {
    Series s(order);
    for (std::size_t k = 0; k <= order; ++k) s.c_[k] = p[k];
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const std::vector<T>& coefficients() const noexcept { return c_; }

  const T& operator[](std::size_t k) const {
    if (k > order())
      throw AlgebraError(AlgebraError::Kind::UnknownCoefficient,
                         "coefficient " + std::to_string(k) + " beyond series order " + std::to_string(order()));
    return c_[k];
  }

  T& coeff(std::size_t k) { return c_.at(k); }

  Series truncated(std::size_t order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    const std::size_t n = r.order();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend Series operator*(Series a, const T& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }

  /// Requires b's constant term to be invertible in T; for integer
  /// coefficients that means +-1.
  friend Series operator/(const Series& a, const Series& b) {
    const T& b0 = b.c_[0];
    if (b0 == 0) throw AlgebraError(AlgebraError::Kind::DivisorNotUnit, "series divisor has zero constant term");
    if constexpr (std::is_same_v<T, BigInt>) {
      if (b0 != 1 && b0 != -1)
        throw AlgebraError(AlgebraError::Kind::DivisorNotUnit, "integer series divisor constant term is not +-1");
    }
    Series r(std::min(a.order(), b.order()));
    const std::size_t n = r.order();
    for (std::size_t k = 0; k <= n; ++k) {
      T acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
      if constexpr (std::is_same_v<T, BigInt>) {
        r.c_[k] = (b0 == 1) ? acc : T(-acc);
      } else {
        r.c_[k] = acc / b0;
      }
    }
    return r;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Same order and same coefficients.
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// Equal on every coefficient both operands know.
  bool agrees_with(const Series& o) const {
    const std::size_t n = std::min(order(), o.order());
    for (std::size_t k = 0; k <= n; ++k)
      if (c_[k] != o.c_[k]) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& c) { return c == 0; });
  }

  /// Evaluates a polynomial at this series (Horner), keeping this order.
  static Series compose(const Polynomial<T>& p, const Series& inner) {
    Series acc(inner.order());
    for (long k = p.degree(); k >= 0; --k) {
      acc = acc * inner;
      acc.c_[0] += p[static_cast<std::size_t>(k)];
    }
    return acc;
  }

 private:
  std::vector<T> c_;
};

using SeriesZ = Series<BigRat>;
using IntSeries = Series<BigInt>;

inline SeriesZ to_rational(const IntSeries& s) {
  std::vector<BigRat> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coefficients()) c.emplace_back(x);
  return SeriesZ(std::move(c));
}

}  // namespace deutsch
