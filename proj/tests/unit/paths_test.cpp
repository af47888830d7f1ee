#include <gtest/gtest.h>

#include <set>

#include "../fixtures/figures.hpp"
#include "deutsch/counting.hpp"

namespace deutsch {
namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

// Every word over {+1, -1, ..., -n} of length n, kept if it stays >= 0.
// Deliberately unpruned, so it shares no logic with the enumerator.
std::size_t naive_deutsch_count(int n, std::optional<int> end, std::optional<int> max_h) {
  std::vector<int> word(static_cast<std::size_t>(n), 0);  // index into alphabet
  const int alphabet = n + 1;
  std::size_t count = 0;
  for (;;) {
    int level = 0, top = 0;
    bool ok = true;
    for (int a : word) {
      level += a == 0 ? 1 : -a;
      top = std::max(top, level);
      if (level < 0) {
        ok = false;
        break;
      }
    }
    if (ok && (!end || level == *end) && (!max_h || top <= *max_h)) ++count;
    std::size_t i = 0;
    while (i < word.size() && ++word[i] == alphabet) word[i++] = 0;
    if (i == word.size()) break;
  }
  return count;
}

TEST(Validate, ExampleProfile) {
  const auto p = parse_path<Family::deutsch>("U U D2");
  const std::vector<int> levels(p.levels().begin(), p.levels().end());
  EXPECT_EQ(levels, (std::vector<int>{0, 1, 2, 0}));
  EXPECT_TRUE(p.closed());
  EXPECT_EQ(p.height(), 2);
  EXPECT_EQ(p.area(), 3);
}

TEST(Validate, HeightAndArea) {
  const auto p = parse_path<Family::deutsch>("U U U D3");
  EXPECT_EQ(p.height(), 3);
  EXPECT_EQ(p.area(), 6);
  const DeutschPath empty;
  EXPECT_EQ(empty.height(), 0);
  EXPECT_EQ(empty.area(), 0);
  EXPECT_TRUE(empty.closed());
  EXPECT_EQ(parse_path<Family::motzkin>("U F D").area(), 2);
}

TEST(Validate, ErrorsCarryKindAndPosition) {
  auto expect_error = [](auto&& fn, PathError::Kind kind, std::size_t pos) {
    try {
      fn();
      ADD_FAILURE() << "no PathError";
    } catch (const PathError& e) {
      EXPECT_EQ(e.kind(), kind);
      EXPECT_EQ(e.position(), pos);
    }
  };
  expect_error([] { parse_path<Family::deutsch>("U D2"); }, PathError::Kind::NegativeLevel, 2);
  expect_error([] { parse_path<Family::deutsch>("D1"); }, PathError::Kind::NegativeLevel, 1);
  expect_error([] { DeutschPath({Step::up(), Step::up(2)}); }, PathError::Kind::BadStep, 2);
  expect_error([] { DeutschPath({Step::flat()}); }, PathError::Kind::BadStep, 1);
  expect_error([] { MotzkinPath({Step::up(), Step::flat()}); }, PathError::Kind::NonzeroEnd, 2);
  expect_error([] { ReversedDeutschPath({Step::down(2)}); }, PathError::Kind::BadStep, 1);
  expect_error([] { parse_path<Family::deutsch>("U X"); }, PathError::Kind::BadStep, 2);
  expect_error([] { parse_path<Family::deutsch>("U D0"); }, PathError::Kind::BadStep, 2);
  expect_error([] { parse_path<Family::deutsch>("U D"); }, PathError::Kind::BadStep, 2);
  expect_error([] { parse_path<Family::motzkin>("U D2"); }, PathError::Kind::BadStep, 2);
}

TEST(Validate, RuntimeFamily) {
  const AnyPath p = validate_path({Step::up(3), Step::down()}, Family::reversed);
  EXPECT_EQ(std::get<ReversedDeutschPath>(p).end_level(), 2);
  EXPECT_THROW(validate_path({Step::up(3)}, Family::deutsch), PathError);
}

TEST(Parse, TokenRoundTrip) {
  for (const char* text : {"U U D2 U", "U D1 U D1", ""}) {
    EXPECT_EQ(parse_path<Family::deutsch>(text).to_string(), text);
  }
  EXPECT_EQ(parse_path<Family::reversed>("U3 D D").to_string(), "U3 D D");
  EXPECT_EQ(parse_path<Family::motzkin>("  U   F D ").to_string(), "U F D");
}

TEST(Reverse, InvolutionOnClosedPaths) {
  for (std::size_t n = 0; n <= 9; ++n) {
    const auto paths = enumerate_paths<Family::deutsch>({Family::deutsch, n, 0, std::nullopt});
    std::set<std::string> images;
    for (const auto& p : paths) {
      const ReversedDeutschPath r = reverse(p);
      EXPECT_TRUE(r.closed());
      EXPECT_EQ(r.height(), p.height());
      EXPECT_EQ(r.area(), p.area());
      images.insert(r.to_string());
      // Reverse back by hand.
      std::vector<Step> back;
      for (auto it = r.steps().rbegin(); it != r.steps().rend(); ++it) back.push_back(Step{-it->delta});
      EXPECT_EQ(DeutschPath(back), p);
    }
    EXPECT_EQ(images.size(), paths.size());
    EXPECT_EQ(images.size(), enumerate_count({Family::reversed, n, 0, std::nullopt}));
  }
  EXPECT_THROW(reverse(parse_path<Family::deutsch>("U")), PathError);
}

TEST(Enumerate, FigureSets) {
  for (const auto& fig : fixtures::figures()) {
    const auto listed = enumerate_tokens({fig.family, fig.n, std::nullopt, std::nullopt});
    EXPECT_EQ(listed.size(), fig.profiles.size());
    EXPECT_EQ(as_set(listed), fixtures::figure_tokens(fig)) << family_name(fig.family) << " n=" << fig.n;
  }
}

TEST(Enumerate, OpenLengthThreeListing) {
  EXPECT_EQ(as_set(enumerate_tokens({Family::deutsch, 3, std::nullopt, std::nullopt})),
            (std::set<std::string>{"U D1 U", "U U D1", "U U D2", "U U U"}));
}

TEST(Enumerate, ClosedLengthFour) {
  EXPECT_EQ(as_set(enumerate_tokens({Family::deutsch, 4, 0, std::nullopt})),
            (std::set<std::string>{"U U U D3", "U U D1 D1", "U D1 U D1"}));
}

TEST(Enumerate, OrderIsDeterministicAndSorted) {
  const auto paths = enumerate_paths<Family::deutsch>({Family::deutsch, 7, std::nullopt, std::nullopt});
  for (std::size_t k = 1; k < paths.size(); ++k) EXPECT_TRUE(paths[k - 1] < paths[k]);
  EXPECT_EQ(enumerate_tokens({Family::deutsch, 7, std::nullopt, std::nullopt}),
            enumerate_tokens({Family::deutsch, 7, std::nullopt, std::nullopt}));
}

TEST(Enumerate, MatchesUnprunedBruteForce) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(enumerate_count({Family::deutsch, static_cast<std::size_t>(n), std::nullopt, std::nullopt}),
              naive_deutsch_count(n, std::nullopt, std::nullopt));
    for (int e = 0; e <= n; ++e)
      for (int h = e; h <= n; ++h)
        EXPECT_EQ(enumerate_count({Family::deutsch, static_cast<std::size_t>(n), e, h}), naive_deutsch_count(n, e, h))
            << n << " " << e << " " << h;
  }
}

TEST(CountDp, Examples) {
  EXPECT_EQ(count_dp({Family::deutsch, 4, 0, std::nullopt}), 3);
  EXPECT_EQ(count_dp({Family::motzkin, 4, std::nullopt, std::nullopt}), 9);
  EXPECT_EQ(count_dp({Family::deutsch, 2, 1, std::nullopt}), 0);
  EXPECT_EQ(count_dp({Family::deutsch, 0, std::nullopt, std::nullopt}), 1);
  EXPECT_EQ(count_dp({Family::deutsch, 3, 5, std::nullopt}), 0);
}

TEST(CountDp, ClosedCountsAndOpenEqualsMotzkin) {
  const std::vector<long> closed{1, 0, 1, 1, 3, 6, 15, 36, 91, 232};
  for (std::size_t n = 0; n < closed.size(); ++n) EXPECT_EQ(count_dp({Family::deutsch, n, 0, std::nullopt}), closed[n]);
  for (std::size_t n = 0; n <= 12; ++n)
    EXPECT_EQ(count_dp({Family::deutsch, n, std::nullopt, std::nullopt}),
              count_dp({Family::motzkin, n, std::nullopt, std::nullopt}));
}

TEST(CountDp, AgreesWithEnumerationEverywhere) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (Family f : {Family::deutsch, Family::motzkin}) {
      const PathFamilyQuery q{f, n, std::nullopt, std::nullopt};
      EXPECT_EQ(count_dp(q), enumerate_count(q));
    }
    for (int h = 0; h <= 6; ++h) {
      EXPECT_EQ(count_dp({Family::motzkin, n, std::nullopt, h}), enumerate_count({Family::motzkin, n, std::nullopt, h}));
      for (int e = 0; e <= h; ++e) {
        for (Family f : {Family::deutsch, Family::reversed}) {
          const PathFamilyQuery q{f, n, e, h};
          EXPECT_EQ(count_dp(q), enumerate_count(q)) << family_name(f) << " n=" << n << " e=" << e << " h=" << h;
        }
      }
    }
    for (int e = 0; e <= 4; ++e) {
      const PathFamilyQuery q{Family::reversed, n, e, std::nullopt};
      EXPECT_EQ(count_dp(q), enumerate_count(q));
    }
  }
}

TEST(CountDp, MonotoneInHeightBound) {
  for (std::size_t n = 0; n <= 12; ++n) {
    BigInt prev = 0;
    for (int h = 0; h <= static_cast<int>(n) + 1; ++h) {
      const BigInt c = count_dp({Family::deutsch, n, 0, h});
      EXPECT_GE(c, prev);
      prev = c;
    }
    EXPECT_EQ(prev, count_dp({Family::deutsch, n, 0, std::nullopt}));
  }
}

TEST(Queries, ErrorsAreTyped) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const QueryError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no QueryError";
    return QueryError::Kind::InvalidQuery;
  };
  EXPECT_EQ(kind_of([] { count_dp({Family::reversed, 3, std::nullopt, std::nullopt}); }),
            QueryError::Kind::InfiniteFamily);
  EXPECT_EQ(kind_of([] { enumerate_count({Family::reversed, 3, std::nullopt, std::nullopt}); }),
            QueryError::Kind::InfiniteFamily);
  EXPECT_EQ(kind_of([] { enumerate_count({Family::deutsch, 15, std::nullopt, std::nullopt}); }),
            QueryError::Kind::BoundExceeded);
  EXPECT_EQ(kind_of([] { count_dp({Family::deutsch, 20'000, std::nullopt, std::nullopt}); }),
            QueryError::Kind::BoundExceeded);
  EXPECT_EQ(kind_of([] { count_dp({Family::deutsch, 3, -1, std::nullopt}); }), QueryError::Kind::InvalidQuery);
  EXPECT_EQ(kind_of([] { count_dp({Family::deutsch, 3, 2, 1}); }), QueryError::Kind::InvalidQuery);
  EXPECT_EQ(kind_of([] { count_dp({Family::motzkin, 3, 1, std::nullopt}); }), QueryError::Kind::InvalidQuery);
  EXPECT_THROW(enumerate_count({Family::deutsch, 3, std::nullopt, std::nullopt}, Limits{2, 10}), QueryError);
  EXPECT_EQ(enumerate_count({Family::deutsch, 15, 15, std::nullopt}, Limits{15, 10}), 1u);
}

}  // namespace
}  // namespace deutsch
