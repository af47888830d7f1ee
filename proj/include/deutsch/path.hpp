#pragma once

// Validated lattice paths for the three step families.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deutsch/errors.hpp"

namespace deutsch {

enum class Family { deutsch, reversed, motzkin };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::deutsch: return "deutsch";
    case Family::reversed: return "reversed";
    case Family::motzkin: return "motzkin";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "deutsch") return Family::deutsch;
  if (s == "reversed") return Family::reversed;
  if (s == "motzkin") return Family::motzkin;
  throw QueryError(QueryError::Kind::InvalidQuery, "unknown family '" + std::string(s) + "' (use deutsch|reversed|motzkin)");
}

/// One step, stored as its level increment.
struct Step {
  int delta = 0;

  static constexpr Step up(int k = 1) { return {k}; }
  static constexpr Step down(int k = 1) { return {-k}; }
  static constexpr Step flat() { return {0}; }

  friend constexpr bool operator==(Step, Step) = default;
  friend constexpr auto operator<=>(Step, Step) = default;
};

/// Whether a step is legal in a family, ignoring levels.
constexpr bool step_allowed(Family f, Step s) {
  switch (f) {
    case Family::deutsch: return s.delta == 1 || s.delta <= -1;
    case Family::reversed: return s.delta >= 1 || s.delta == -1;
    case Family::motzkin: return s.delta >= -1 && s.delta <= 1;
  }
  return false;
}

/// Token text: Deutsch `U`, `D<k>`; reversed `U<k>`, `D`; Motzkin `U F D`.
inline std::string step_token(Family f, Step s) {
  switch (f) {
    case Family::deutsch: return s.delta == 1 ? "U" : "D" + std::to_string(-s.delta);
    case Family::reversed: return s.delta == -1 ? "D" : "U" + std::to_string(s.delta);
    case Family::motzkin: return s.delta == 1 ? "U" : (s.delta == 0 ? "F" : "D");
  }
  return "?";
}

/// Enumeration order for steps: up steps by size, then flat, then down
/// steps by size. Used for the deterministic listing order of paths.
constexpr int step_rank(Step s) { return s.delta > 0 ? s.delta - 1'000'000 : (s.delta == 0 ? 0 : -s.delta); }

/// A nonnegative path of family F with its level profile a_0 = 0, ..., a_n.
/// Immutable after validation.
template <Family F>
class Path {
 public:
  static constexpr Family family = F;

  Path() : levels_{0} {}

  /// Validates `steps`; throws PathError on the first violation.
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {
    levels_.reserve(steps_.size() + 1);
    levels_.push_back(0);
    for (std::size_t t = 0; t < steps_.size(); ++t) {
      const Step s = steps_[t];
      if (!step_allowed(F, s))
        throw PathError(PathError::Kind::BadStep, t + 1,
                        "step " + std::to_string(t + 1) + " is not a " + std::string(family_name(F)) + " step");
      const int next = levels_.back() + s.delta;
      if (next < 0)
        throw PathError(PathError::Kind::NegativeLevel, t + 1,
                        "level " + std::to_string(next) + " after step " + std::to_string(t + 1));
      levels_.push_back(next);
    }
    if constexpr (F == Family::motzkin) {
      if (levels_.back() != 0)
        throw PathError(PathError::Kind::NonzeroEnd, steps_.size(),
                        "Motzkin path ends at level " + std::to_string(levels_.back()));
    }
  }

  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::span<const int> levels() const noexcept { return levels_; }
  int end_level() const noexcept { return levels_.back(); }
  bool closed() const noexcept { return levels_.back() == 0; }

  int height() const { return *std::max_element(levels_.begin(), levels_.end()); }

  long long area() const { return std::accumulate(levels_.begin(), levels_.end(), 0LL); }

  std::string to_string() const {
    std::string out;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
      if (t) out += ' ';
      out += step_token(F, steps_[t]);
    }
    return out;
  }

  friend bool operator==(const Path& a, const Path& b) { return a.steps_ == b.steps_; }
  friend bool operator<(const Path& a, const Path& b) {
    return std::lexicographical_compare(a.steps_.begin(), a.steps_.end(), b.steps_.begin(), b.steps_.end(),
                                        [](Step x, Step y) { return step_rank(x) < step_rank(y); });
  }

 private:
  std::vector<Step> steps_;
  std::vector<int> levels_;
};

using DeutschPath = Path<Family::deutsch>;
using ReversedDeutschPath = Path<Family::reversed>;
using MotzkinPath = Path<Family::motzkin>;

/// Parses whitespace-separated tokens for family F. Token errors are
/// reported as BadStep at the token's 1-based position.
inline std::vector<Step> parse_steps(Family f, std::string_view text) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const std::size_t pos = steps.size() + 1;
    auto bad = [&] {
      return PathError(PathError::Kind::BadStep, pos,
                       "bad " + std::string(family_name(f)) + " token '" + tok + "' at position " + std::to_string(pos));
    };
    auto size_suffix = [&](std::string_view digits) -> int {
      if (digits.empty() || digits.size() > 6 || digits.front() == '0') throw bad();
      int k = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') throw bad();
        k = k * 10 + (c - '0');
      }
      return k;
    };
    const std::string_view body = std::string_view(tok).substr(1);
    switch (f) {
      case Family::deutsch:
        if (tok == "U") steps.push_back(Step::up());
        else if (tok[0] == 'D') steps.push_back(Step::down(size_suffix(body)));
        else throw bad();
        break;
      case Family::reversed:
        if (tok == "D") steps.push_back(Step::down());
        else if (tok[0] == 'U') steps.push_back(Step::up(size_suffix(body)));
        else throw bad();
        break;
      case Family::motzkin:
        if (tok == "U") steps.push_back(Step::up());
        else if (tok == "F") steps.push_back(Step::flat());
        else if (tok == "D") steps.push_back(Step::down());
        else throw bad();
        break;
    }
  }
  return steps;
}

template <Family F>
Path<F> parse_path(std::string_view text) {
  return Path<F>(parse_steps(F, text));
}

/// Time reversal of a closed Deutsch path: steps reversed and negated.
inline ReversedDeutschPath reverse(const DeutschPath& p) {
  if (!p.closed()) throw PathError(PathError::Kind::NonzeroEnd, p.length(), "only closed paths can be reversed");
  std::vector<Step> steps;
  steps.reserve(p.length());
  for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) steps.push_back(Step{-it->delta});
  return ReversedDeutschPath(std::move(steps));
}

}  // namespace deutsch

namespace deutsch {

using AnyPath = std::variant<DeutschPath, ReversedDeutschPath, MotzkinPath>;

/// Validates a step list for a runtime-chosen family.
inline AnyPath validate_path(std::vector<Step> steps, Family f) {
  switch (f) {
    case Family::deutsch: return DeutschPath(std::move(steps));
    case Family::reversed: return ReversedDeutschPath(std::move(steps));
    case Family::motzkin: return MotzkinPath(std::move(steps));
  }
  throw QueryError(QueryError::Kind::InvalidQuery, "unknown family");
}

}  // namespace deutsch
