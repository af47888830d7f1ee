#pragma once

// Exact finite-n statistics of Deutsch paths and their comparison with the
// leading-order asymptotic laws.

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "deutsch/bigint.hpp"
#include "deutsch/counting.hpp"
#include "deutsch/errors.hpp"
#include "deutsch/formulas.hpp"
#include "deutsch/substitution.hpp"

namespace deutsch {

enum class Ending { closed, open };

inline Ending parse_ending(std::string_view s) {
  if (s == "closed") return Ending::closed;
  if (s == "open") return Ending::open;
  throw BadParams("unknown family '" + std::string(s) + "' (use closed|open)");
}

/// Exact [z^n] of the total height over paths of length n.
/// `row`, when given, must be the trinomial row n-1 (e.g. from a cache).
inline BigInt height_total(std::size_t n, Ending e, const std::vector<BigInt>* row = nullptr) {
  const IntSeries g = e == Ending::closed ? gf::height_sum_closed_v(n) : gf::height_sum_open_v(n);
  return row && n > 0 ? lagrange_coefficient(g, n, *row) : lagrange_coefficient(g, n);
}

/// Exact [z^n] A(z), the total area over closed paths of length n.
inline BigInt area_total(std::size_t n, const std::vector<BigInt>* row = nullptr) {
  const IntSeries g = gf::integer_v_series(gf::area_A(), n);
  return row && n > 0 ? lagrange_coefficient(g, n, *row) : lagrange_coefficient(g, n);
}

inline BigInt path_count(std::size_t n, Ending e) { return e == Ending::closed ? coeff_closed(n) : coeff_open(n); }

namespace detail {
inline BigRat ratio_or_throw(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0) throw ZeroCount("no " + what + " of this length");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace detail

inline BigRat avg_height(std::size_t n, Ending e, const std::vector<BigInt>* row = nullptr) {
  if (n < 1) throw BadParams("average height needs n >= 1");
  return detail::ratio_or_throw(height_total(n, e, row), path_count(n, e),
                                e == Ending::closed ? "closed paths" : "open paths");
}

/// Same statistic from the (level, running maximum) walk; independent of
/// the generating functions.
inline BigRat avg_height_dp(std::size_t n, Ending e) {
  const auto t = height_walk_deutsch(n);
  return e == Ending::closed ? detail::ratio_or_throw(t.closed_height_sum[n], t.closed_count[n], "closed paths")
                             : detail::ratio_or_throw(t.open_height_sum[n], t.open_count[n], "open paths");
}

inline BigRat avg_area(std::size_t n, const std::vector<BigInt>* row = nullptr) {
  if (n < 1) throw BadParams("average area needs n >= 1");
  return detail::ratio_or_throw(area_total(n, row), coeff_closed(n), "closed paths");
}

inline BigRat avg_elevation(std::size_t n, const std::vector<BigInt>* row = nullptr) {
  return avg_area(n, row) / BigRat(static_cast<unsigned long>(n));
}

/// A leading-order law. The value is reduced(n) * 3^n when `times_3n` is
/// set, so values far beyond double range are still comparable.
struct AsymptoticLaw {
  std::string name;
  std::string formula;
  std::function<double(std::size_t)> reduced;
  bool times_3n = false;
  std::function<BigRat(std::size_t)> exact;
};

struct ComparisonRow {
  std::string law;
  std::size_t n = 0;
  BigRat exact;
  std::string asymptotic;  // decimal scientific notation
  double ratio = 0;        // exact / asymptotic
};

inline const std::vector<AsymptoticLaw>& asymptotic_laws() {
  using std::numbers::pi;
  static const std::vector<AsymptoticLaw> laws = {
      {"avg_height_closed", "2*sqrt(pi*n/3)", [](std::size_t n) { return 2 * std::sqrt(pi * n / 3); }, false,
       [](std::size_t n) { return avg_height(n, Ending::closed); }},
      {"avg_height_open", "2*sqrt(pi*n/3)", [](std::size_t n) { return 2 * std::sqrt(pi * n / 3); }, false,
       [](std::size_t n) { return avg_height(n, Ending::open); }},
      {"closed_vs_motzkin_height", "sqrt(pi*n/3)", [](std::size_t n) { return std::sqrt(pi * n / 3); }, false,
       [](std::size_t n) { return avg_height(n, Ending::closed); }},
      {"closed_height_total", "(3/4)*3^n/n", [](std::size_t n) { return 0.75 / static_cast<double>(n); }, true,
       [](std::size_t n) { return BigRat(height_total(n, Ending::closed)); }},
      {"open_height_total", "3^(n+1)/n", [](std::size_t n) { return 3.0 / static_cast<double>(n); }, true,
       [](std::size_t n) { return BigRat(height_total(n, Ending::open)); }},
      {"closed_count", "9/(8*sqrt(3*pi))*3^n*n^(-3/2)",
       [](std::size_t n) { return 9 / (8 * std::sqrt(3 * pi)) * std::pow(static_cast<double>(n), -1.5); }, true,
       [](std::size_t n) { return BigRat(coeff_closed(n)); }},
      {"motzkin_count", "9/(2*sqrt(3*pi))*3^n*n^(-3/2)",
       [](std::size_t n) { return 9 / (2 * std::sqrt(3 * pi)) * std::pow(static_cast<double>(n), -1.5); }, true,
       [](std::size_t n) { return BigRat(coeff_open(n)); }},
      {"area_total", "(3/8)*3^n", [](std::size_t) { return 0.375; }, true,
       [](std::size_t n) { return BigRat(area_total(n)); }},
      {"avg_area", "sqrt(pi/3)*n^(3/2)",
       [](std::size_t n) { return std::sqrt(pi / 3) * std::pow(static_cast<double>(n), 1.5); }, false,
       [](std::size_t n) { return avg_area(n); }},
      {"avg_elevation", "sqrt(pi*n/3)", [](std::size_t n) { return std::sqrt(pi * n / 3); }, false,
       [](std::size_t n) { return avg_elevation(n); }},
  };
  return laws;
}

inline const AsymptoticLaw& find_law(std::string_view name) {
  for (const auto& law : asymptotic_laws())
    if (law.name == name) return law;
  throw BadParams("unknown asymptotic law '" + std::string(name) + "'");
}

inline std::string scientific(double mantissa_log10) {
  const double e = std::floor(mantissa_log10);
  const double m = std::pow(10.0, mantissa_log10 - e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6fe%+d", m, static_cast<int>(e));
  return buf;
}

inline ComparisonRow compare(const AsymptoticLaw& law, std::size_t n) {
  if (n < 1) throw BadParams("asymptotic comparison needs n >= 1");
  ComparisonRow row;
  row.law = law.name;
  row.n = n;
  row.exact = law.exact(n);
  const double reduced = law.reduced(n);
  const double log3n = law.times_3n ? static_cast<double>(n) * std::log10(3.0) : 0.0;
  row.asymptotic = scientific(std::log10(reduced) + log3n);
  BigRat scaled = row.exact;
  if (law.times_3n) scaled /= BigRat(pow_int(3, n));
  row.ratio = scaled.get_d() / reduced;
  return row;
}

inline std::vector<ComparisonRow> asymptotic_report(const std::vector<std::size_t>& ns,
                                                    const std::vector<std::string>& law_names) {
  std::vector<ComparisonRow> rows;
  for (const auto& name : law_names) {
    const AsymptoticLaw& law = find_law(name);
    for (std::size_t n : ns) rows.push_back(compare(law, n));
  }
  return rows;
}

}  // namespace deutsch
