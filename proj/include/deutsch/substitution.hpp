#pragma once

// The substitution z = v/(1+v+v^2): trinomial coefficients, the series v(z),
// and two independent ways to expand a function of v as a series in z.

#include <cstddef>
#include <numeric>
#include <vector>

#include "deutsch/bigint.hpp"
#include "deutsch/rational_function.hpp"
#include "deutsch/series.hpp"

namespace deutsch {

/// Coefficients of (1+v+v^2)^n, built from the holonomic recurrence
/// k a_k = (n-k+1) a_{k-1} + (2n-k+2) a_{k-2}. O(n) big-integer operations.
inline std::vector<BigInt> trinomial_row(std::size_t n) {
  std::vector<BigInt> a(2 * n + 1);
  a[0] = 1;
  if (n == 0) return a;
  a[1] = static_cast<unsigned long>(n);
  const long nn = static_cast<long>(n);
  for (long k = 2; k <= 2 * nn; ++k) {
    BigInt t = BigInt(nn - k + 1) * a[k - 1] + BigInt(2 * nn - k + 2) * a[k - 2];
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    a[k] = std::move(t);
  }
  return a;
}

/// [v^k](1+v+v^2)^n; zero outside 0 <= k <= 2n.
inline BigInt trinomial(std::size_t n, long k) {
  if (k < 0 || k > 2 * static_cast<long>(n)) return 0;
  return trinomial_row(n)[static_cast<std::size_t>(k)];
}

/// Rows 0..max_n of trinomial coefficients, built once by repeated
/// multiplication with 1+v+v^2 and immutable afterwards.
class TrinomialTable {
 public:
  explicit TrinomialTable(std::size_t max_n) {
    rows_.reserve(max_n + 1);
    rows_.push_back({BigInt(1)});
    for (std::size_t n = 1; n <= max_n; ++n) rows_.push_back(next_row(rows_.back()));
  }

  explicit TrinomialTable(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

  std::size_t max_n() const noexcept { return rows_.size() - 1; }

  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

  BigInt operator()(std::size_t n, long k) const {
    const auto& r = row(n);
    if (k < 0 || k >= static_cast<long>(r.size())) return 0;
    return r[static_cast<std::size_t>(k)];
  }

  static std::vector<BigInt> next_row(const std::vector<BigInt>& prev) {
    std::vector<BigInt> r(prev.size() + 2);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      r[k] += prev[k];
      r[k + 1] += prev[k];
      r[k + 2] += prev[k];
    }
    return r;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// v(z) with v(0) = 0 and v = z(1+v+v^2), through z^order. Coefficientwise
/// fixed point: v_{m+1} = [m=0] + v_m + sum_k v_k v_{m-k}.
inline IntSeries v_of_z_int(std::size_t order) {
  IntSeries v(order);
  for (std::size_t m = 0; m + 1 <= order; ++m) {
    BigInt next = (m == 0) ? 1 : 0;
    next += v[m];
    for (std::size_t k = 1; k < m; ++k) next += v[k] * v[m - k];
    v.coeff(m + 1) = next;
  }
  return v;
}

inline SeriesZ v_of_z(std::size_t order) { return to_rational(v_of_z_int(order)); }

namespace detail {

inline BigInt denominator_lcm(const PolyV& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

inline PolyZ scaled_to_integers(const PolyV& p, const BigInt& scale) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    BigRat s = x * BigRat(scale);
    c.push_back(s.get_num());
  }
  return PolyZ(std::move(c));
}

inline void require_analytic(const RatFnV& f) {
  if (f.den()[0] == 0)
    throw AlgebraError(AlgebraError::Kind::PoleAtOrigin, "denominator vanishes at v=0: " + f.to_string());
}

}  // namespace detail

/// f(v(z)) through z^order by composing numerator and denominator with the
/// series v(z) and dividing. Exact; works in integers until the last step.
inline SeriesZ expand_in_z(const RatFnV& f, std::size_t order, const IntSeries* cached_v = nullptr) {
  detail::require_analytic(f);
  BigInt scale = detail::denominator_lcm(f.num());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), detail::denominator_lcm(f.den()).get_mpz_t());
  const PolyZ num = detail::scaled_to_integers(f.num(), scale);
  const PolyZ den = detail::scaled_to_integers(f.den(), scale);

  IntSeries v = (cached_v && cached_v->order() >= order) ? cached_v->truncated(order) : v_of_z_int(order);
  IntSeries a = IntSeries::compose(num, v);
  IntSeries b = IntSeries::compose(den, v);
  if (b[0] == 1 || b[0] == -1) return to_rational(a / b);
  return to_rational(a) / to_rational(b);
}

/// Power series of f in v itself, through v^order.
inline SeriesZ expand_in_v(const RatFnV& f, std::size_t order) {
  detail::require_analytic(f);
  return SeriesZ::from_polynomial(f.num(), order) / SeriesZ::from_polynomial(f.den(), order);
}

/// [z^n] G(v(z)) for a power series G in v known through v^n, using
/// [z^n] G(v(z)) = [v^n] G(v) (1-v^2) (1+v+v^2)^{n-1}  (n >= 1).
/// `row` must be the trinomial row n-1.
template <class T>
T lagrange_coefficient(const Series<T>& g, std::size_t n, const std::vector<BigInt>& row) {
  if (n == 0) return g[0];
  auto tri = [&](long k) -> BigInt {
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  T acc(0);
  for (std::size_t k = 0; k <= n; ++k) {
    if (g[k] == 0) continue;
    const long m = static_cast<long>(n - k);
    BigInt w = tri(m) - tri(m - 2);
    if (w != 0) acc += g[k] * T(w);
  }
  return acc;
}

template <class T>
T lagrange_coefficient(const Series<T>& g, std::size_t n) {
  if (n == 0) return g[0];
  return lagrange_coefficient(g, n, trinomial_row(n - 1));
}

/// G(v(z)) through z^order via the coefficient formula above, one trinomial
/// row per coefficient. Independent of the Horner composition route.
template <class T>
Series<T> compose_lagrange(const Series<T>& g, std::size_t order) {
  Series<T> out(order);
  out.coeff(0) = g[0];
  std::vector<BigInt> row{BigInt(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    out.coeff(n) = lagrange_coefficient(g, n, row);
    row = TrinomialTable::next_row(row);
  }
  return out;
}

/// f(v(z)) through z^order by expanding in v first and then applying the
/// coefficient formula; the second, independent pipeline.
inline SeriesZ expand_via_lagrange(const RatFnV& f, std::size_t order) {
  return compose_lagrange(expand_in_v(f, order), order);
}

/// Converts a series whose coefficients are all integers; throws otherwise.
inline IntSeries to_integer(const SeriesZ& s) {
  std::vector<BigInt> c;
  c.reserve(s.order() + 1);
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (!is_integer(s[k]))
      throw AlgebraError(AlgebraError::Kind::UnknownCoefficient, "non-integer coefficient at z^" + std::to_string(k));
    c.push_back(s[k].get_num());
  }
  return IntSeries(std::move(c));
}

}  // namespace deutsch
