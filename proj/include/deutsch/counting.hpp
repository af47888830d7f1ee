#pragma once

// Exhaustive enumeration and transfer-matrix counting of paths in a strip.
// These are the ground-truth oracles for every generating-function formula.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "deutsch/bigint.hpp"
#include "deutsch/errors.hpp"
#include "deutsch/path.hpp"

namespace deutsch {

struct PathFamilyQuery {
  Family family = Family::deutsch;
  std::size_t n = 0;
  std::optional<int> end_level;
  std::optional<int> max_height;
};

struct Limits {
  std::size_t enumeration = 14;
  std::size_t dp = 10'000;
};

namespace detail {

inline void check_query(const PathFamilyQuery& q) {
  if (q.end_level && *q.end_level < 0) throw QueryError(QueryError::Kind::InvalidQuery, "end level must be >= 0");
  if (q.max_height && *q.max_height < 0) throw QueryError(QueryError::Kind::InvalidQuery, "max height must be >= 0");
  if (q.end_level && q.max_height && *q.end_level > *q.max_height)
    throw QueryError(QueryError::Kind::InvalidQuery, "end level exceeds max height");
  if (q.family == Family::motzkin && q.end_level && *q.end_level != 0)
    throw QueryError(QueryError::Kind::InvalidQuery, "Motzkin paths end at level 0; drop --end-level or set it to 0");
  if (q.family == Family::reversed && !q.end_level && !q.max_height)
    throw QueryError(QueryError::Kind::InfiniteFamily,
                     "open reversed paths without a height bound are infinitely many; add --max-height or --end-level");
}

/// Strip height that loses no path of the query.
inline int strip_height(const PathFamilyQuery& q) {
  if (q.max_height) return *q.max_height;
  const int n = static_cast<int>(q.n);
  if (q.family == Family::reversed) return *q.end_level + n;
  return n;
}

inline std::optional<int> effective_end(const PathFamilyQuery& q) {
  if (q.family == Family::motzkin) return 0;
  return q.end_level;
}

}  // namespace detail

/// One transfer step: counts per level after one more step in a strip of
/// height `h` (levels 0..h). Linear in h via running sums.
template <class T>
std::vector<T> strip_step(Family f, const std::vector<T>& cur) {
  const std::size_t size = cur.size();
  std::vector<T> next(size, T(0));
  switch (f) {
    case Family::deutsch: {
      for (std::size_t a = 0; a + 1 < size; ++a) next[a + 1] += cur[a];
      T above(0);
      for (std::size_t b = size; b-- > 0;) {
        next[b] += above;
        above += cur[b];
      }
      break;
    }
    case Family::reversed: {
      for (std::size_t a = 1; a < size; ++a) next[a - 1] += cur[a];
      T below(0);
      for (std::size_t b = 0; b < size; ++b) {
        next[b] += below;
        below += cur[b];
      }
      break;
    }
    case Family::motzkin: {
      for (std::size_t a = 0; a < size; ++a) {
        next[a] += cur[a];
        if (a + 1 < size) next[a + 1] += cur[a];
        if (a > 0) next[a - 1] += cur[a];
      }
      break;
    }
  }
  return next;
}

/// Level-occupancy vectors for lengths 0..n_max in the strip 0..h.
/// Result[n][a] = number of family paths of length n ending at level a.
inline std::vector<std::vector<BigInt>> strip_walk(Family f, int h, std::size_t n_max) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(n_max + 1);
  std::vector<BigInt> cur(static_cast<std::size_t>(h) + 1, BigInt(0));
  cur[0] = 1;
  out.push_back(cur);
  for (std::size_t n = 1; n <= n_max; ++n) {
    cur = strip_step(f, cur);
    out.push_back(cur);
  }
  return out;
}

/// Number of paths matching the query, by transfer-matrix iteration.
inline BigInt count_dp(const PathFamilyQuery& q, const Limits& limits = {}) {
  detail::check_query(q);
  if (q.n > limits.dp)
    throw QueryError(QueryError::Kind::BoundExceeded, "n exceeds the counting bound " + std::to_string(limits.dp));
  const int h = detail::strip_height(q);
  std::vector<BigInt> cur(static_cast<std::size_t>(h) + 1, BigInt(0));
  cur[0] = 1;
  for (std::size_t t = 0; t < q.n; ++t) cur = strip_step(q.family, cur);
  if (auto e = detail::effective_end(q)) return *e <= h ? cur[static_cast<std::size_t>(*e)] : BigInt(0);
  BigInt total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

/// Per-length totals (path count, summed area) for paths in the strip
/// 0..h ending at `end` (or anywhere when empty).
struct AreaTotals {
  std::vector<BigInt> count;
  std::vector<BigInt> area;
};

inline AreaTotals area_walk(Family f, int h, std::size_t n_max, std::optional<int> end) {
  const std::size_t size = static_cast<std::size_t>(h) + 1;
  std::vector<BigInt> cnt(size, BigInt(0)), area(size, BigInt(0));
  cnt[0] = 1;
  AreaTotals out;
  auto record = [&] {
    BigInt c = 0, a = 0;
    for (std::size_t l = 0; l < size; ++l) {
      if (end && static_cast<int>(l) != *end) continue;
      c += cnt[l];
      a += area[l];
    }
    out.count.push_back(c);
    out.area.push_back(a);
  };
  record();
  for (std::size_t n = 1; n <= n_max; ++n) {
    // Areas move along the same transitions as counts; each arrival at
    // level b then adds b once per path.
    std::vector<BigInt> ncnt = strip_step(f, cnt);
    std::vector<BigInt> narea = strip_step(f, area);
    for (std::size_t b = 0; b < size; ++b) narea[b] += BigInt(static_cast<unsigned long>(b)) * ncnt[b];
    cnt = std::move(ncnt);
    area = std::move(narea);
    record();
  }
  return out;
}

/// Per-length totals of heights for unbounded Deutsch paths, from a walk
/// over (level, running maximum). Independent of the height-sum formulas.
struct HeightTotals {
  std::vector<BigInt> closed_count, closed_height_sum;
  std::vector<BigInt> open_count, open_height_sum;
};

inline HeightTotals height_walk_deutsch(std::size_t n_max) {
  const std::size_t size = n_max + 1;
  // layer[m][a]: paths with running maximum m now at level a <= m.
  std::vector<std::vector<BigInt>> layer(size, std::vector<BigInt>(size, BigInt(0)));
  layer[0][0] = 1;
  HeightTotals out;
  auto record = [&] {
    BigInt cc = 0, ch = 0, oc = 0, oh = 0;
    for (std::size_t m = 0; m < size; ++m) {
      BigInt row = 0;
      for (std::size_t a = 0; a <= m; ++a) row += layer[m][a];
      cc += layer[m][0];
      ch += BigInt(static_cast<unsigned long>(m)) * layer[m][0];
      oc += row;
      oh += BigInt(static_cast<unsigned long>(m)) * row;
    }
    out.closed_count.push_back(cc);
    out.closed_height_sum.push_back(ch);
    out.open_count.push_back(oc);
    out.open_height_sum.push_back(oh);
  };
  record();
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::vector<BigInt>> next(size, std::vector<BigInt>(size, BigInt(0)));
    for (std::size_t m = 0; m < size; ++m) {
      const auto& cur = layer[m];
      for (std::size_t a = 0; a <= m; ++a) {
        if (cur[a] == 0) continue;
        if (a + 1 <= m) next[m][a + 1] += cur[a];
        else if (m + 1 < size) next[m + 1][m + 1] += cur[a];
      }
      BigInt above = 0;
      for (std::size_t b = m + 1; b-- > 0;) {
        next[m][b] += above;
        above += cur[b];
      }
    }
    layer = std::move(next);
    record();
  }
  return out;
}

namespace detail {

template <Family F>
struct Enumerator {
  const PathFamilyQuery& q;
  int h;
  std::optional<int> end;
  std::vector<Step> steps;
  std::vector<Path<F>> out;

  bool reachable(int level, std::size_t remaining) const {
    if (!end) return true;
    const int e = *end;
    const int r = static_cast<int>(remaining);
    if (r == 0) return level == e;
    switch (F) {
      case Family::deutsch: return level + r >= e;
      case Family::reversed: return level - r <= e;
      case Family::motzkin: return std::abs(level - e) <= r;
    }
    return true;
  }

  void visit(int level) {
    if (steps.size() == q.n) {
      if (!end || level == *end) out.emplace_back(steps);
      return;
    }
    const std::size_t remaining = q.n - steps.size() - 1;
    auto try_step = [&](Step s) {
      const int next = level + s.delta;
      if (next < 0 || next > h || !reachable(next, remaining)) return;
      steps.push_back(s);
      visit(next);
      steps.pop_back();
    };
    switch (F) {
      case Family::deutsch:
        try_step(Step::up());
        for (int k = 1; k <= level; ++k) try_step(Step::down(k));
        break;
      case Family::reversed:
        for (int k = 1; level + k <= h; ++k) try_step(Step::up(k));
        try_step(Step::down());
        break;
      case Family::motzkin:
        try_step(Step::up());
        try_step(Step::flat());
        try_step(Step::down());
        break;
    }
  }
};

}  // namespace detail

/// Every path of family F matching the query, in the fixed step order
/// (up steps by size, flat, down steps by size), without duplicates.
template <Family F>
std::vector<Path<F>> enumerate_paths(PathFamilyQuery q, const Limits& limits = {}) {
  q.family = F;
  detail::check_query(q);
  if (q.n > limits.enumeration)
    throw QueryError(QueryError::Kind::BoundExceeded,
                     "n = " + std::to_string(q.n) + " exceeds the enumeration bound " + std::to_string(limits.enumeration));
  detail::Enumerator<F> e{q, detail::strip_height(q), detail::effective_end(q), {}, {}};
  e.steps.reserve(q.n);
  e.visit(0);
  return std::move(e.out);
}

/// Token strings of every matching path, for a runtime-chosen family.
inline std::vector<std::string> enumerate_tokens(const PathFamilyQuery& q, const Limits& limits = {}) {
  std::vector<std::string> out;
  auto collect = [&](const auto& paths) {
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(p.to_string());
  };
  switch (q.family) {
    case Family::deutsch: collect(enumerate_paths<Family::deutsch>(q, limits)); break;
    case Family::reversed: collect(enumerate_paths<Family::reversed>(q, limits)); break;
    case Family::motzkin: collect(enumerate_paths<Family::motzkin>(q, limits)); break;
  }
  return out;
}

inline std::size_t enumerate_count(const PathFamilyQuery& q, const Limits& limits = {}) {
  return enumerate_tokens(q, limits).size();
}

}  // namespace deutsch
