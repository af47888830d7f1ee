#pragma once

// Length-preserving bijection between open Deutsch paths and Motzkin paths,
// built on the first-return decomposition w = U w~ D x.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/counting.hpp"
#include "deutsch/parallel.hpp"
#include "deutsch/path.hpp"

namespace deutsch {

struct FirstReturnDecomposition {
  enum class Kind { empty, no_return, returns };

  Kind kind = Kind::empty;
  DeutschPath inner;       // w~, re-based to level 0
  int down_size = 0;       // d = 1 + end level of w~ (returns only)
  DeutschPath remainder;   // x (returns only)
};

/// Splits an open Deutsch path at its first return to level 0.
inline FirstReturnDecomposition decompose(const DeutschPath& w) {
  using Kind = FirstReturnDecomposition::Kind;
  FirstReturnDecomposition d;
  if (w.empty()) return d;
  const auto levels = w.levels();
  const auto steps = w.steps();
  std::size_t t = 1;
  while (t < levels.size() && levels[t] != 0) ++t;
  if (t == levels.size()) {
    d.kind = Kind::no_return;
    d.inner = DeutschPath(std::vector<Step>(steps.begin() + 1, steps.end()));
    return d;
  }
  // Level 0 is first revisited at time t; steps 2..t-1 form w~ and step t is D.
  d.kind = Kind::returns;
  d.inner = DeutschPath(std::vector<Step>(steps.begin() + 1, steps.begin() + static_cast<long>(t) - 1));
  d.down_size = -steps[t - 1].delta;
  d.remainder = DeutschPath(std::vector<Step>(steps.begin() + static_cast<long>(t), steps.end()));
  return d;
}

namespace detail {

inline void to_motzkin_steps(const DeutschPath& w, std::vector<Step>& out) {
  const auto d = decompose(w);
  switch (d.kind) {
    case FirstReturnDecomposition::Kind::empty: return;
    case FirstReturnDecomposition::Kind::no_return:
      out.push_back(Step::flat());
      to_motzkin_steps(d.inner, out);
      return;
    case FirstReturnDecomposition::Kind::returns:
      out.push_back(Step::up());
      to_motzkin_steps(d.inner, out);
      out.push_back(Step::down());
      to_motzkin_steps(d.remainder, out);
      return;
  }
}

inline void from_motzkin_steps(std::span<const Step> m, std::vector<Step>& out) {
  if (m.empty()) return;
  if (m.front().delta == 0) {
    out.push_back(Step::up());
    from_motzkin_steps(m.subspan(1), out);
    return;
  }
  // Leading U: find its matching D (first return of the Motzkin path).
  int level = 0;
  std::size_t t = 0;
  do {
    level += m[t].delta;
    ++t;
  } while (level != 0);
  std::vector<Step> inner;
  from_motzkin_steps(m.subspan(1, t - 2), inner);
  int inner_end = 0;
  for (Step s : inner) inner_end += s.delta;
  out.push_back(Step::up());
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(Step::down(1 + inner_end));
  from_motzkin_steps(m.subspan(t), out);
}

}  // namespace detail

inline MotzkinPath to_motzkin(const DeutschPath& w) {
  std::vector<Step> out;
  out.reserve(w.length());
  detail::to_motzkin_steps(w, out);
  return MotzkinPath(std::move(out));
}

inline DeutschPath from_motzkin(const MotzkinPath& m) {
  std::vector<Step> out;
  out.reserve(m.length());
  detail::from_motzkin_steps(m.steps(), out);
  return DeutschPath(std::move(out));
}

/// Number of `returns` nodes in the recursive decomposition tree of w.
inline std::size_t returns_in_tree(const DeutschPath& w) {
  const auto d = decompose(w);
  switch (d.kind) {
    case FirstReturnDecomposition::Kind::empty: return 0;
    case FirstReturnDecomposition::Kind::no_return: return returns_in_tree(d.inner);
    case FirstReturnDecomposition::Kind::returns: return 1 + returns_in_tree(d.inner) + returns_in_tree(d.remainder);
  }
  return 0;
}

/// Flat steps of a Motzkin path taken at level 0.
inline std::size_t ground_flats(const MotzkinPath& m) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < m.length(); ++t)
    if (m.steps()[t].delta == 0 && m.levels()[t] == 0) ++count;
  return count;
}

struct CertificationRow {
  std::size_t n = 0;
  std::size_t deutsch_count = 0;
  std::size_t motzkin_count = 0;
  std::size_t image_size = 0;
  bool injective = false;
  bool onto = false;
  bool round_trip = false;
  bool length_preserved = false;
  bool up_steps_match_returns = false;
  /// (Deutsch end level, level-0 flats of the image) -> number of paths.
  std::map<std::pair<int, std::size_t>, std::size_t> joint;

  bool ok() const {
    return injective && onto && round_trip && length_preserved && up_steps_match_returns &&
           deutsch_count == motzkin_count && image_size == motzkin_count;
  }
  bool joint_is_diagonal() const {
    for (const auto& [key, count] : joint)
      if (static_cast<std::size_t>(key.first) != key.second) return false;
    return true;
  }
};

struct CertificationReport {
  std::vector<CertificationRow> rows;
  std::string first_failure;

  bool ok() const { return first_failure.empty(); }
};

inline CertificationRow certify_length(std::size_t n, const Limits& limits = {}, std::string* failure = nullptr) {
  CertificationRow row;
  row.n = n;
  PathFamilyQuery dq{Family::deutsch, n, std::nullopt, std::nullopt};
  PathFamilyQuery mq{Family::motzkin, n, std::nullopt, std::nullopt};
  const auto domain = enumerate_paths<Family::deutsch>(dq, limits);
  const auto codomain = enumerate_paths<Family::motzkin>(mq, limits);
  row.deutsch_count = domain.size();
  row.motzkin_count = codomain.size();

  auto fail = [&](const std::string& what) {
    if (failure && failure->empty()) *failure = "n=" + std::to_string(n) + ": " + what;
  };

  std::set<std::string> image;
  row.round_trip = row.length_preserved = row.up_steps_match_returns = true;
  for (const auto& w : domain) {
    const MotzkinPath m = to_motzkin(w);
    if (m.length() != w.length()) {
      row.length_preserved = false;
      fail("length changed for " + w.to_string());
    }
    if (!(from_motzkin(m) == w)) {
      row.round_trip = false;
      fail("round trip broke " + w.to_string());
    }
    std::size_t ups = 0;
    for (Step s : m.steps()) ups += s.delta == 1;
    if (ups != returns_in_tree(w)) {
      row.up_steps_match_returns = false;
      fail("up-step count differs from returns for " + w.to_string());
    }
    ++row.joint[{w.end_level(), ground_flats(m)}];
    image.insert(m.to_string());
  }
  row.image_size = image.size();
  row.injective = image.size() == domain.size();
  if (!row.injective) fail("two paths share an image");

  std::set<std::string> all_motzkin;
  for (const auto& m : codomain) {
    all_motzkin.insert(m.to_string());
    if (!(to_motzkin(from_motzkin(m)) == m)) {
      row.round_trip = false;
      fail("inverse round trip broke " + m.to_string());
    }
  }
  row.onto = image == all_motzkin;
  if (!row.onto) fail("image differs from the Motzkin paths");
  if (row.deutsch_count != row.motzkin_count) fail("cardinalities differ");
  return row;
}

/// Exhaustive certification for every length 0..n_max.
inline CertificationReport certify(std::size_t n_max, const Limits& limits = {}, unsigned threads = 1) {
  CertificationReport report;
  report.rows.resize(n_max + 1);
  std::vector<std::string> failures(n_max + 1);
  parallel_for(n_max + 1, threads, [&](std::size_t n) { report.rows[n] = certify_length(n, limits, &failures[n]); });
  for (const auto& f : failures)
    if (report.first_failure.empty()) report.first_failure = f;
  return report;
}

}  // namespace deutsch
