#pragma once

// Cross-checks every combinatorial formula against brute-force enumeration
// and transfer-matrix counts.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/counting.hpp"
#include "deutsch/formulas.hpp"
#include "deutsch/parallel.hpp"

namespace deutsch {

struct OracleCell {
  std::string formula;
  std::size_t n = 0;
  int h = 0;
  int i = 0;
  std::string source;  // "enumeration" or "dp"
  BigInt expected;     // from the oracle
  BigRat actual;       // series coefficient
  bool ok = false;
};

struct OracleReport {
  std::vector<OracleCell> cells;
  std::vector<std::string> skipped;

  bool ok() const { return !first_mismatch(); }

  const OracleCell* first_mismatch() const {
    for (const auto& c : cells)
      if (!c.ok) return &c;
    return nullptr;
  }

  void throw_if_failed() const {
    if (const OracleCell* c = first_mismatch())
      throw MismatchFound("oracle check", c->formula + " at n=" + std::to_string(c->n) + " (" + c->source +
                                              "): series " + to_string(c->actual) + ", oracle " + to_string(c->expected));
  }

  void append(OracleReport o) {
    cells.insert(cells.end(), std::make_move_iterator(o.cells.begin()), std::make_move_iterator(o.cells.end()));
    skipped.insert(skipped.end(), o.skipped.begin(), o.skipped.end());
  }
};

struct OracleOptions {
  std::size_t n_max = 10;
  std::size_t enumeration_max = 10;  // enumeration oracle used for n <= this
  int h_min = 0;
  int h_max = 5;
  unsigned threads = 1;
  Limits limits{};
};

/// Every instance of a formula kind inside the parameter ranges.
inline std::vector<FormulaId> instances(FormulaId::Kind kind, int h_min, int h_max) {
  std::vector<FormulaId> out;
  switch (FormulaId::arity(kind)) {
    case 0: out.push_back({kind}); break;
    case 1:
      for (int h = std::max(h_min, kind == FormulaId::Kind::closed_height_ge ? 1 : 0); h <= h_max; ++h)
        out.push_back({kind, h});
      break;
    case 2:
      for (int h = std::max(h_min, 0); h <= h_max; ++h)
        for (int i = (kind == FormulaId::Kind::psi ? 1 : 0); i <= h; ++i) out.push_back({kind, h, i});
      break;
  }
  return out;
}

namespace detail {

/// Per-length oracle values for one formula instance, from the DP.
inline std::vector<BigInt> dp_values(const FormulaId& id, std::size_t n_max) {
  using K = FormulaId::Kind;
  const int unbounded = static_cast<int>(n_max);
  auto level = [&](Family f, int h, std::optional<int> end) {
    auto walk = strip_walk(f, h, n_max);
    std::vector<BigInt> out;
    out.reserve(walk.size());
    for (const auto& row : walk) {
      if (end) {
        out.push_back(row[static_cast<std::size_t>(*end)]);
      } else {
        BigInt s = 0;
        for (const auto& c : row) s += c;
        out.push_back(s);
      }
    }
    return out;
  };
  switch (id.kind) {
    case K::motzkin_M: return level(Family::motzkin, unbounded, 0);
    case K::open_sum_limit: return level(Family::deutsch, unbounded, std::nullopt);
    case K::phi: return level(Family::deutsch, id.h, id.i);
    case K::phi0_bounded: return level(Family::deutsch, id.h, 0);
    case K::phi0_limit: return level(Family::deutsch, unbounded, 0);
    case K::closed_height_ge: {
      auto all = level(Family::deutsch, unbounded, 0);
      auto low = level(Family::deutsch, id.h - 1, 0);
      for (std::size_t n = 0; n < all.size(); ++n) all[n] -= low[n];
      return all;
    }
    case K::open_sum: return level(Family::deutsch, id.h, std::nullopt);
    case K::psi0: return level(Family::reversed, id.h, 0);
    case K::psi: return level(Family::reversed, id.h, id.i);
    case K::reversed_sum: return level(Family::reversed, id.h, std::nullopt);
    case K::area_A: return area_walk(Family::deutsch, unbounded, n_max, 0).area;
    case K::height_sum_closed: return height_walk_deutsch(n_max).closed_height_sum;
    case K::height_sum_open: return height_walk_deutsch(n_max).open_height_sum;
    case K::reversed_limit_formal: break;
  }
  throw BadParams(id.to_string() + " has no combinatorial oracle");
}

/// Oracle value at one length by listing every path.
inline BigInt enumeration_value(const FormulaId& id, std::size_t n, const Limits& limits) {
  using K = FormulaId::Kind;
  auto count = [&](Family f, std::optional<int> end, std::optional<int> h) {
    return BigInt(static_cast<unsigned long>(enumerate_count({f, n, end, h}, limits)));
  };
  auto closed = [&] { return enumerate_paths<Family::deutsch>({Family::deutsch, n, 0, std::nullopt}, limits); };
  switch (id.kind) {
    case K::motzkin_M: return count(Family::motzkin, std::nullopt, std::nullopt);
    case K::open_sum_limit: return count(Family::deutsch, std::nullopt, std::nullopt);
    case K::phi: return count(Family::deutsch, id.i, id.h);
    case K::phi0_bounded: return count(Family::deutsch, 0, id.h);
    case K::phi0_limit: return count(Family::deutsch, 0, std::nullopt);
    case K::closed_height_ge: {
      unsigned long c = 0;
      for (const auto& p : closed()) c += p.height() >= id.h;
      return c;
    }
    case K::open_sum: return count(Family::deutsch, std::nullopt, id.h);
    case K::psi0: return count(Family::reversed, 0, id.h);
    case K::psi: return count(Family::reversed, id.i, id.h);
    case K::reversed_sum: return count(Family::reversed, std::nullopt, id.h);
    case K::area_A: {
      BigInt s = 0;
      for (const auto& p : closed()) s += static_cast<long>(p.area());
      return s;
    }
    case K::height_sum_closed: {
      BigInt s = 0;
      for (const auto& p : closed()) s += p.height();
      return s;
    }
    case K::height_sum_open: {
      BigInt s = 0;
      for (const auto& p : enumerate_paths<Family::deutsch>({Family::deutsch, n, std::nullopt, std::nullopt}, limits))
        s += p.height();
      return s;
    }
    case K::reversed_limit_formal: break;
  }
  throw BadParams(id.to_string() + " has no combinatorial oracle");
}

inline OracleReport check_instance(const FormulaId& id, const OracleOptions& opt) {
  OracleReport r;
  const SeriesZ s = formula_series(id, opt.n_max);
  const auto dp = dp_values(id, opt.n_max);
  for (std::size_t n = 0; n <= opt.n_max; ++n) {
    r.cells.push_back({id.to_string(), n, id.h, id.i, "dp", dp[n], s[n], s[n] == BigRat(dp[n])});
    if (n <= opt.enumeration_max) {
      BigInt e = enumeration_value(id, n, opt.limits);
      r.cells.push_back({id.to_string(), n, id.h, id.i, "enumeration", e, s[n], s[n] == BigRat(e)});
    }
  }
  return r;
}

}  // namespace detail

/// Checks every instance of `kind` with h in [h_min, h_max] (all valid i)
/// for n <= n_max. The formal limit is skipped and listed in `skipped`.
inline OracleReport oracle_check(FormulaId::Kind kind, const OracleOptions& opt = {}) {
  OracleReport report;
  if (kind == FormulaId::Kind::reversed_limit_formal) {
    report.skipped.push_back(std::string(FormulaId::kind_name(kind)) + ": formal identity, no finite family");
    return report;
  }
  const auto ids = instances(kind, opt.h_min, opt.h_max);
  std::vector<OracleReport> parts(ids.size());
  parallel_for(ids.size(), opt.threads, [&](std::size_t k) { parts[k] = detail::check_instance(ids[k], opt); });
  for (auto& p : parts) report.append(std::move(p));
  return report;
}

inline OracleReport oracle_check_all(const OracleOptions& opt = {}) {
  OracleReport report;
  for (const auto& [kind, name] : FormulaId::names) report.append(oracle_check(kind, opt));
  return report;
}

}  // namespace deutsch
