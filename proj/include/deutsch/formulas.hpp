#pragma once

// Closed-form generating functions for Deutsch, reversed Deutsch and Motzkin
// paths, written as rational functions of v where z = v/(1+v+v^2).

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deutsch/bigint.hpp"
#include "deutsch/errors.hpp"
#include "deutsch/rational_function.hpp"
#include "deutsch/series.hpp"
#include "deutsch/substitution.hpp"

namespace deutsch {

struct FormulaId {
  enum class Kind {
    motzkin_M,
    phi,
    phi0_bounded,
    phi0_limit,
    closed_height_ge,
    open_sum,
    open_sum_limit,
    psi0,
    psi,
    reversed_sum,
    reversed_limit_formal,
    area_A,
    height_sum_closed,
    height_sum_open,
  };

  Kind kind = Kind::motzkin_M;
  int h = 0;
  int i = 0;

  static constexpr std::pair<Kind, std::string_view> names[] = {
      {Kind::motzkin_M, "motzkin_M"},
      {Kind::phi, "phi"},
      {Kind::phi0_bounded, "phi0_bounded"},
      {Kind::phi0_limit, "phi0_limit"},
      {Kind::closed_height_ge, "closed_height_ge"},
      {Kind::open_sum, "open_sum"},
      {Kind::open_sum_limit, "open_sum_limit"},
      {Kind::psi0, "psi0"},
      {Kind::psi, "psi"},
      {Kind::reversed_sum, "reversed_sum"},
      {Kind::reversed_limit_formal, "reversed_limit_formal"},
      {Kind::area_A, "area_A"},
      {Kind::height_sum_closed, "height_sum_closed"},
      {Kind::height_sum_open, "height_sum_open"},
  };

  static std::string_view kind_name(Kind k) {
    for (const auto& [kind, name] : names)
      if (kind == k) return name;
    return "?";
  }

  /// Number of integer parameters the kind takes: 0, 1 (h) or 2 (h, i).
  static int arity(Kind k) {
    switch (k) {
      case Kind::phi:
      case Kind::psi: return 2;
      case Kind::phi0_bounded:
      case Kind::closed_height_ge:
      case Kind::open_sum:
      case Kind::psi0:
      case Kind::reversed_sum: return 1;
      default: return 0;
    }
  }

  /// Whether the series coefficients count (or total a statistic over) a
  /// finite family of paths.
  bool combinatorial() const { return kind != Kind::reversed_limit_formal; }

  /// Height sums are only defined as truncated series.
  bool rational() const { return kind != Kind::height_sum_closed && kind != Kind::height_sum_open; }

  void validate() const {
    auto bad = [&](const std::string& why) { return BadParams(to_string() + ": " + why); };
    switch (arity(kind)) {
      case 2:
        if (h < 0) throw bad("h must be >= 0");
        if (kind == Kind::psi && (i < 1 || i > h)) throw bad("psi needs 1 <= i <= h (use psi0 for i = 0)");
        if (kind == Kind::phi && (i < 0 || i > h)) throw bad("phi needs 0 <= i <= h");
        break;
      case 1:
        if (kind == Kind::closed_height_ge && h < 1) throw bad("closed_height_ge needs h >= 1");
        if (h < 0) throw bad("h must be >= 0");
        break;
      default: break;
    }
  }

  std::string to_string() const {
    std::string s(kind_name(kind));
    switch (arity(kind)) {
      case 2: return s + "(" + std::to_string(h) + "," + std::to_string(i) + ")";
      case 1: return s + "(" + std::to_string(h) + ")";
      default: return s;
    }
  }

  /// Accepts `name`, `name(h)` or `name(h,i)`, plus the aliases `motzkin`,
  /// `area`, `closed`, `open`, `formal`.
  static FormulaId parse(std::string_view text) {
    std::string_view head = text;
    std::vector<int> args;
    if (auto open = text.find('('); open != std::string_view::npos) {
      if (text.back() != ')') throw BadParams("unbalanced parentheses in formula '" + std::string(text) + "'");
      head = text.substr(0, open);
      std::string_view rest = text.substr(open + 1, text.size() - open - 2);
      while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view part = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
          throw BadParams("bad formula parameter '" + std::string(part) + "'");
        args.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
    static constexpr std::pair<std::string_view, Kind> aliases[] = {
        {"motzkin", Kind::motzkin_M}, {"M", Kind::motzkin_M},         {"area", Kind::area_A},
        {"closed", Kind::phi0_limit}, {"open", Kind::open_sum_limit}, {"formal", Kind::reversed_limit_formal},
    };
    std::optional<Kind> kind;
    for (const auto& [k, name] : names)
      if (name == head) kind = k;
    for (const auto& [name, k] : aliases)
      if (name == head) kind = k;
    if (!kind) throw BadParams("unknown formula '" + std::string(head) + "'");
    FormulaId id{*kind};
    if (static_cast<int>(args.size()) != arity(*kind))
      throw BadParams("formula " + std::string(kind_name(*kind)) + " takes " + std::to_string(arity(*kind)) +
                      " parameter(s)");
    if (!args.empty()) id.h = args[0];
    if (args.size() > 1) id.i = args[1];
    id.validate();
    return id;
  }

  friend bool operator==(const FormulaId&, const FormulaId&) = default;
};

namespace gf {

inline PolyV trinomial_poly() { return PolyV{BigRat(1), BigRat(1), BigRat(1)}; }
inline PolyV one_plus_v() { return PolyV{BigRat(1), BigRat(1)}; }
inline PolyV v_power(std::size_t k) { return PolyV::monomial(BigRat(1), k); }
inline PolyV one_minus_v_power(std::size_t k) { return one_minus_power<BigRat>(k); }

inline RatFnV ratio(const PolyV& n, const PolyV& d) { return RatFnV(n, d); }

/// z = v/(1+v+v^2).
inline RatFnV z() { return RatFnV(v_power(1), trinomial_poly()); }

inline RatFnV phi(int h, int i) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uh = static_cast<std::size_t>(h);
  return ratio(v_power(ui) * trinomial_poly(), pow(one_plus_v(), static_cast<unsigned>(i + 1))) *
         ratio(one_minus_v_power(uh - ui + 2), one_minus_v_power(uh + 3));
}

inline RatFnV phi0_limit() { return ratio(trinomial_poly(), one_plus_v()); }

inline RatFnV closed_height_ge(int h) {
  const auto uh = static_cast<std::size_t>(h);
  return phi0_limit() * ratio(v_power(uh + 1) * one_minus_v_power(1), one_minus_v_power(uh + 2));
}

inline RatFnV open_sum(int h) {
  const auto uh = static_cast<std::size_t>(h);
  return ratio(trinomial_poly() * one_minus_v_power(uh + 1), one_minus_v_power(uh + 3));
}

inline RatFnV psi(int h, int i) {
  const auto uh = static_cast<std::size_t>(h);
  const auto ui = static_cast<std::size_t>(i);
  return RatFnV(v_power(1) * trinomial_poly()) * pow(RatFnV(one_plus_v()), i - 2) *
         ratio(one_minus_v_power(uh + 1 - ui), one_minus_v_power(uh + 3));
}

inline RatFnV reversed_sum(int h) {
  const auto uh = static_cast<std::size_t>(h);
  return ratio(trinomial_poly() * pow(one_plus_v(), static_cast<unsigned>(h)) * one_minus_v_power(1),
               one_minus_v_power(uh + 3));
}

inline RatFnV reversed_limit_formal() { return RatFnV(trinomial_poly() * one_minus_v_power(1)); }

inline RatFnV area_A() {
  return ratio(v_power(2) * pow(trinomial_poly(), 2), pow(one_plus_v(), 3) * pow(one_minus_v_power(1), 2));
}

/// Term h of the open height sum: (1+v+v^2)(1-v^2) v^h/(1-v^{h+2}).
inline RatFnV open_height_ge(int h) {
  const auto uh = static_cast<std::size_t>(h);
  return ratio(trinomial_poly() * one_minus_v_power(2) * v_power(uh), one_minus_v_power(uh + 2));
}

/// v-series of sum_{h=1..order} v^{h+shift}/(1-v^{h+2}) through v^order.
/// Terms with h > order start at v^{order+1+shift} and cannot contribute.
inline IntSeries lambert_sum(std::size_t order, std::size_t shift) {
  IntSeries s(order);
  const std::size_t first_omitted_exponent = (order + 1) + shift;
  if (first_omitted_exponent <= order) throw AlgebraError(AlgebraError::Kind::UnknownCoefficient, "height sum truncated too early");
  for (std::size_t h = 1; h <= order; ++h)
    for (std::size_t e = h + shift; e <= order; e += h + 2) s.coeff(e) += 1;
  return s;
}

inline IntSeries integer_v_series(const RatFnV& f, std::size_t order) { return to_integer(expand_in_v(f, order)); }

/// Power series in v of the closed height sum, sum_{h>=1} [closed, height >= h].
inline IntSeries height_sum_closed_v(std::size_t order) {
  const RatFnV prefactor = phi0_limit() * RatFnV(one_minus_v_power(1));
  return integer_v_series(prefactor, order) * lambert_sum(order, 1);
}

/// Power series in v of the open height sum.
inline IntSeries height_sum_open_v(std::size_t order) {
  const RatFnV prefactor = RatFnV(trinomial_poly() * one_minus_v_power(2));
  return integer_v_series(prefactor, order) * lambert_sum(order, 0);
}

}  // namespace gf

/// The closed form of a rational formula. Height sums throw BadParams; use
/// formula_series for them.
inline RatFnV formula(const FormulaId& id) {
  id.validate();
  using K = FormulaId::Kind;
  switch (id.kind) {
    case K::motzkin_M:
    case K::open_sum_limit: return RatFnV(gf::trinomial_poly());
    case K::phi: return gf::phi(id.h, id.i);
    case K::phi0_bounded:
    case K::psi0: return gf::phi(id.h, 0);
    case K::phi0_limit: return gf::phi0_limit();
    case K::closed_height_ge: return gf::closed_height_ge(id.h);
    case K::open_sum: return gf::open_sum(id.h);
    case K::psi: return gf::psi(id.h, id.i);
    case K::reversed_sum: return gf::reversed_sum(id.h);
    case K::reversed_limit_formal: return gf::reversed_limit_formal();
    case K::area_A: return gf::area_A();
    case K::height_sum_closed:
    case K::height_sum_open: break;
  }
  throw BadParams(id.to_string() + " is a series, not a rational function of v");
}

/// Coefficients c_0..c_order of the formula as a series in z.
inline SeriesZ formula_series(const FormulaId& id, std::size_t order, const IntSeries* cached_v = nullptr) {
  id.validate();
  switch (id.kind) {
    case FormulaId::Kind::height_sum_closed: return to_rational(compose_lagrange(gf::height_sum_closed_v(order), order));
    case FormulaId::Kind::height_sum_open: return to_rational(compose_lagrange(gf::height_sum_open_v(order), order));
    default: return expand_in_z(formula(id), order, cached_v);
  }
}

/// Signed sum of trinomial coefficients sum sign * binom(n,3; n - offset).
struct CoefficientFormula {
  std::vector<std::pair<int, int>> terms;  // (offset, sign)

  BigInt operator()(std::size_t n) const {
    const auto row = trinomial_row(n);
    BigInt acc = 0;
    for (const auto& [offset, sign] : terms) {
      const long k = static_cast<long>(n) - offset;
      if (k < 0 || k >= static_cast<long>(row.size())) continue;
      if (sign > 0) acc += row[static_cast<std::size_t>(k)];
      else acc -= row[static_cast<std::size_t>(k)];
    }
    return acc;
  }
};

inline const CoefficientFormula closed_rule{{{0, 1}, {1, -1}}};
inline const CoefficientFormula open_rule{{{0, 1}, {2, -1}}};
inline const CoefficientFormula reversed_formal_rule{{{0, 1}, {1, -1}, {2, -1}, {3, 1}}};

/// Closed Deutsch paths of length n.
inline BigInt coeff_closed(std::size_t n) { return closed_rule(n); }
/// Open Deutsch paths (= Motzkin paths) of length n.
inline BigInt coeff_open(std::size_t n) { return open_rule(n); }
/// [z^n] (1+v+v^2)(1-v); a formal coefficient, negative for some n.
inline BigInt coeff_reversed_formal(std::size_t n) { return reversed_formal_rule(n); }

}  // namespace deutsch
