// Copyright 2026 The Plinth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "plinth/error.hpp"
#include "plinth/tableau.hpp"

namespace plinth {
namespace {

Tableau rows(std::vector<std::vector<int>> values) {
  std::vector<int> parts;
  std::vector<int> entries;
  for (const auto& row : values) {
    parts.push_back(static_cast<int>(row.size()));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Tableau(SkewShape(Partition(parts)), entries);
}

TEST(Tableau, SsytPredicate) {
  EXPECT_TRUE(is_ssyt(rows({{0, 0, 0}})));
  EXPECT_FALSE(is_ssyt(rows({{0}, {0}})));
  const Tableau t = parse_tableau(". . 0 0\n. 0 1 1\n. 1 2 2\n0 2 3");
  EXPECT_TRUE(is_ssyt(t));
  EXPECT_FALSE(is_ssyt(rows({{1, 0}})));
  EXPECT_FALSE(is_ssyt(rows({{-1}})));
}

TEST(Tableau, SytPredicate) {
  EXPECT_TRUE(is_syt(rows({{1, 2, 3}, {4, 5}})));
  EXPECT_TRUE(is_syt(rows({{1, 3}, {2, 4}})));
  EXPECT_FALSE(is_syt(rows({{2, 1}})));
  EXPECT_FALSE(is_syt(rows({{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_syt(rows({{1, 3}})));
  EXPECT_THROW(StandardTableau(rows({{2, 1}})), DomainError);
}

TEST(Tableau, PositionOf) {
  const StandardTableau q = parse_syt("1 2 3/4 5");
  EXPECT_EQ(position_of(q, 4), (Cell{2, 1}));
  EXPECT_EQ(position_of(parse_syt("1"), 1), (Cell{1, 1}));
  const StandardTableau row_order = parse_syt(". . 1 2/. 3 4 5/. 6 7 8/9 10 11");
  EXPECT_EQ(position_of(row_order, 9), (Cell{4, 1}));
  EXPECT_THROW(position_of(q, 0), DomainError);
  EXPECT_THROW(position_of(q, 6), DomainError);
}

TEST(Tableau, DescentsAndMaj) {
  const StandardTableau a = parse_syt("1 2 5/3 4");
  EXPECT_EQ(descent_set(a), std::vector<int>{2});
  EXPECT_EQ(maj(a), 2);
  const StandardTableau b = parse_syt("1 2 7/3 5/4 6");
  EXPECT_EQ(descent_set(b), (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(maj(b), 10);
  const StandardTableau c = parse_syt("1 2 3 4");
  EXPECT_TRUE(descent_set(c).empty());
  EXPECT_EQ(maj(c), 0);
}

TEST(Tableau, DescentsAcceptArbitraryPlacements) {
  // A state mid-slide: entries need not form a tableau.
  const std::vector<Cell> pos{{1, 2}, {2, 1}, {1, 3}};
  EXPECT_EQ(descent_set(pos), std::vector<int>{1});
}

TEST(Tableau, ReadingPartition) {
  const Tableau t = parse_tableau(". . 0 0/. 0 1 1/. 1 2 2/0 2 3");
  EXPECT_EQ(reading_partition(t).to_string(), "0,0,0,0,1,1,1,2,2,2,3");
  EXPECT_EQ(reading_partition(rows({{0, 0, 0}, {1, 1}})).to_string(), "0,0,0,1,1");
  EXPECT_EQ(reading_partition(Tableau::filled(SkewShape(Partition({2, 2})), 0)).to_string(),
            "0,0,0,0");
  EXPECT_THROW(ReadingPartition({1, 0}), DomainError);
  EXPECT_THROW(ReadingPartition({-1}), DomainError);
  EXPECT_EQ(parse_reading_partition("0, 1,1,2").to_string(), "0,1,1,2");
}

TEST(Tableau, ReadingPartitionIgnoresCellOrder) {
  // Same multiset on differently arranged cells.
  const Tableau a = rows({{3, 1, 2}});
  const Tableau b = rows({{2}, {3}, {1}});
  EXPECT_EQ(reading_partition(a), reading_partition(b));
}

TEST(Tableau, TextRoundTrip) {
  for (const char* text : {"0 0 0\n1 1", ". . 0 0\n. 0 1 1\n. 1 2 2\n0 2 3", ". 1\n2 3", "5"}) {
    EXPECT_EQ(format_tableau(parse_tableau(text)), text);
  }
  EXPECT_EQ(format_tableau_inline(parse_tableau(". 1\n2 3")), ". 1 / 2 3");
  EXPECT_EQ(parse_tableau(". 1/2 3"), parse_tableau(". 1\n2 3"));
}

TEST(Tableau, ParseWithShapeMayOmitDots) {
  const SkewShape shape = parse_shape("2,2/1");
  EXPECT_EQ(parse_tableau("1/2 3", shape), parse_tableau(". 1/2 3"));
  EXPECT_THROW(parse_tableau("1 2/3", shape), DomainError);
  EXPECT_THROW(parse_tableau("x"), DomainError);
  EXPECT_THROW(parse_tableau("1 . 2"), DomainError);
}

TEST(Tableau, EnumerateSytExamples) {
  EXPECT_EQ(enumerate_syt(parse_shape("3,2")).size(), 5U);
  EXPECT_EQ(enumerate_syt(parse_shape("1")).size(), 1U);
  EXPECT_EQ(enumerate_syt(parse_shape("2,2/1")).size(), 2U);
  const auto all = enumerate_syt(parse_shape("3,2"));
  EXPECT_EQ(format_tableau_inline(all.front().tableau()), "1 2 3 / 4 5");
  EXPECT_EQ(format_tableau_inline(all.back().tableau()), "1 3 5 / 2 4");
}

TEST(Tableau, EnumerateSytIsLexicographic) {
  const auto all = enumerate_syt(parse_shape("3,3,1/1"));
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto a = all[i - 1].tableau().entries();
    const auto b = all[i].tableau().entries();
    EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(Tableau, HookLengthAgreesOnStraightShapes) {
  for (const Partition& p : partitions_in_box(8, 8)) {
    if (p.empty() || p.size() > 8) continue;
    const SkewShape s(p);
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_syt(s).size()), oracle::hook_length_count(p))
        << p.to_string();
    EXPECT_EQ(count_syt(s), oracle::hook_length_count(p)) << p.to_string();
  }
}

TEST(Tableau, EnumerateSytMatchesBruteForceOnSkewShapes) {
  for (const SkewShape& s : enumerate_skew_shapes(6, 3, 4)) {
    std::set<oracle::Filling> expected;
    for (const auto& f : oracle::all_syt(s)) expected.insert(f);
    std::set<oracle::Filling> got;
    for (const StandardTableau& q : enumerate_syt(s)) {
      EXPECT_TRUE(got.insert(oracle::filling_of(q.tableau())).second);
    }
    EXPECT_EQ(got, expected) << s.to_string();
    EXPECT_EQ(count_syt(s), static_cast<std::int64_t>(expected.size()));
  }
}

TEST(Tableau, DescentBounds) {
  for (const SkewShape& s : enumerate_skew_shapes(6, 4, 4)) {
    const int n = s.size();
    for (const StandardTableau& q : enumerate_syt(s)) {
      for (int d : descent_set(q)) {
        EXPECT_GE(d, 1);
        EXPECT_LE(d, n - 1);
      }
      EXPECT_LE(maj(q), n * (n - 1) / 2);
    }
  }
}

TEST(Tableau, EnumerationLimit) {
  ASSERT_EQ(setenv("TABLEAUX_BUDGET", "3", 1), 0);
  EXPECT_EQ(enumeration_cell_limit(), 3);
  EXPECT_THROW(enumerate_syt(parse_shape("2,2")), LimitExceeded);
  EXPECT_NO_THROW(enumerate_syt(parse_shape("2,1")));
  ASSERT_EQ(setenv("TABLEAUX_BUDGET", "nope", 1), 0);
  EXPECT_THROW(enumeration_cell_limit(), DomainError);
  ASSERT_EQ(unsetenv("TABLEAUX_BUDGET"), 0);
  EXPECT_EQ(enumeration_cell_limit(), 9);
}

std::vector<std::string> ssyt_list(const char* shape, int max_entry) {
  std::vector<std::string> out;
  for (const Tableau& t : enumerate_ssyt_bounded(parse_shape(shape), max_entry)) {
    out.push_back(format_tableau_inline(t));
  }
  return out;
}

TEST(Tableau, SsytEnumerationExamples) {
  EXPECT_EQ(ssyt_list("1", 2), (std::vector<std::string>{"0", "1", "2"}));
  EXPECT_EQ(ssyt_list("1,1", 2), (std::vector<std::string>{"0 / 1", "0 / 2", "1 / 2"}));
  EXPECT_EQ(ssyt_list("2", 1), (std::vector<std::string>{"0 0", "0 1", "1 1"}));
  EXPECT_THROW(enumerate_ssyt_bounded(parse_shape("1"), -1), DomainError);
}

TEST(Tableau, SsytEnumerationOfEmptyShape) {
  SsytEnumerator e(SkewShape(), 3);
  ASSERT_TRUE(e.next());
  EXPECT_EQ(e.current().size(), 0);
  EXPECT_FALSE(e.next());
}

TEST(Tableau, SsytEnumerationMatchesBruteForce) {
  for (const SkewShape& s : enumerate_skew_shapes(4, 3, 3)) {
    for (int bound = 0; bound <= 3; ++bound) {
      std::set<oracle::Filling> expected;
      for (const auto& f : oracle::all_ssyt(s, bound)) expected.insert(f);
      std::set<oracle::Filling> got;
      for (const Tableau& t : enumerate_ssyt_bounded(s, bound)) {
        EXPECT_TRUE(got.insert(oracle::filling_of(t)).second);
      }
      EXPECT_EQ(got, expected) << s.to_string() << " bound " << bound;
    }
  }
}

TEST(Tableau, SsytEnumerationVolumeBound) {
  const SkewShape s = parse_shape("3,2/1");
  for (int cap = 0; cap <= 6; ++cap) {
    std::size_t expected = 0;
    for (const auto& f : oracle::all_ssyt(s, cap)) {
      int v = 0;
      for (const auto& kv : f) v += kv.second;
      if (v <= cap) ++expected;
    }
    SsytEnumerator e(s, cap, cap);
    std::size_t got = 0;
    while (e.next()) {
      EXPECT_LE(e.volume(), cap);
      EXPECT_EQ(e.volume(), e.current().volume());
      ++got;
    }
    EXPECT_EQ(got, expected) << "cap " << cap;
  }
}

}  // namespace
}  // namespace plinth
