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

#include <map>

#include "plinth/error.hpp"
#include "plinth/jdt.hpp"
#include "plinth/schutzenberger.hpp"

namespace plinth {
namespace {

std::vector<std::string> frames_text(const std::vector<HoledTableau>& frames) {
  std::vector<std::string> out;
  for (const HoledTableau& f : frames) out.push_back(format_holed(f));
  return out;
}

std::string flat(const StandardTableau& q) { return format_tableau_inline(q.tableau()); }

std::vector<Cell> sorted_cells(const StandardTableau& q) {
  std::vector<Cell> v(q.positions().begin(), q.positions().end());
  std::sort(v.begin(), v.end());
  return v;
}

// Reading word (rows bottom to top, each left to right) as a permutation.
Permutation reading_word(const StandardTableau& q) {
  std::map<int, std::vector<std::pair<int, int>>> rows;
  for (int k = 1; k <= q.size(); ++k) rows[q.position(k).row].push_back({q.position(k).col, k});
  std::vector<int> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::sort(it->second.begin(), it->second.end());
    for (const auto& [col, k] : it->second) word.push_back(k);
  }
  return Permutation(word);
}

const char* const kRunning = ". . 2 3/. 1 5 6/4 7/8";

TEST(Slide, FirstSlideOfRunningExample) {
  const StandardTableau q = parse_syt(kRunning);
  const auto frames = frames_text(slide_frames(q, {1, 2}, SlideDirection::inward));
  const std::vector<std::string> expected{
      ". * 2 3\n. 1 5 6\n4 7\n8",
      ". 1 2 3\n. * 5 6\n4 7\n8",
      ". 1 2 3\n. 5 * 6\n4 7\n8",
      ". 1 2 3\n. 5 6\n4 7\n8",
  };
  EXPECT_EQ(frames, expected);
  const StandardTableau slid = slide_into(q, {1, 2}, SlideDirection::inward);
  EXPECT_EQ(slid.position(1), (Cell{1, 2}));
  EXPECT_EQ(slid.position(5), (Cell{2, 2}));
  EXPECT_EQ(slid.position(6), (Cell{2, 3}));
}

TEST(Slide, SecondAndThirdSlides) {
  const StandardTableau q = slide_into(parse_syt(kRunning), {1, 2}, SlideDirection::inward);
  const auto second = frames_text(slide_frames(q, {2, 1}, SlideDirection::inward));
  EXPECT_EQ(second, (std::vector<std::string>{". 1 2 3\n* 5 6\n4 7\n8", ". 1 2 3\n4 5 6\n* 7\n8",
                                              ". 1 2 3\n4 5 6\n7\n8"}));
  const StandardTableau r = slide_into(q, {2, 1}, SlideDirection::inward);
  const auto third = frames_text(slide_frames(r, {1, 1}, SlideDirection::inward));
  EXPECT_EQ(third, (std::vector<std::string>{"* 1 2 3\n4 5 6\n7\n8", "1 * 2 3\n4 5 6\n7\n8",
                                             "1 2 * 3\n4 5 6\n7\n8", "1 2 3\n4 5 6\n7\n8"}));
}

TEST(Slide, RectificationTraceFollowsTopmostCorner) {
  const auto steps = rectification_trace(parse_syt(kRunning));
  ASSERT_EQ(steps.size(), 3U);
  EXPECT_EQ(steps[0].cell, (Cell{1, 2}));
  EXPECT_EQ(steps[1].cell, (Cell{2, 1}));
  EXPECT_EQ(steps[2].cell, (Cell{1, 1}));
}

TEST(Slide, SingleCellOutAndBack) {
  const StandardTableau one = parse_syt("1");
  const StandardTableau out = slide_into(one, {1, 2}, SlideDirection::outward);
  EXPECT_EQ(out.position(1), (Cell{1, 2}));
  const StandardTableau back = slide_into(out, {1, 1}, SlideDirection::inward);
  EXPECT_EQ(back, one);
}

TEST(Slide, IllegalCellsAreRejected) {
  const StandardTableau q = parse_syt(kRunning);
  EXPECT_THROW(slide_into(q, {1, 1}, SlideDirection::inward), DomainError);
  EXPECT_THROW(slide_into(q, {1, 3}, SlideDirection::inward), DomainError);
  EXPECT_THROW(slide_into(q, {3, 3}, SlideDirection::inward), DomainError);
  EXPECT_THROW(slide_into(parse_syt("1 2"), {2, 2}, SlideDirection::outward), DomainError);
  EXPECT_THROW(slide_frames(q, {5, 5}, SlideDirection::outward), DomainError);
}

TEST(Slide, SlideCells) {
  const StandardTableau q = parse_syt(kRunning);
  EXPECT_EQ(slide_cells(q, SlideDirection::inward), (std::vector<Cell>{{1, 2}, {2, 1}}));
  EXPECT_EQ(slide_cells(q, SlideDirection::outward),
            (std::vector<Cell>{{1, 5}, {3, 3}, {4, 2}, {5, 1}}));
  EXPECT_TRUE(slide_cells(parse_syt("1 2/3"), SlideDirection::inward).empty());
}

TEST(Slide, ResultIsStandardWithSameEntries) {
  for (const SkewShape& s : enumerate_skew_shapes(5, 3, 3)) {
    for (const StandardTableau& q : enumerate_syt(s)) {
      for (const SlideDirection dir : {SlideDirection::inward, SlideDirection::outward}) {
        for (const Cell c : slide_cells(q, dir)) {
          const StandardTableau r = slide_into(q, c, dir);
          EXPECT_EQ(r.size(), q.size());
          auto before = sorted_cells(q);
          auto after = sorted_cells(r);
          std::vector<Cell> gone;
          std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                              std::back_inserter(gone));
          EXPECT_EQ(gone.size(), 1U);
          EXPECT_TRUE(std::binary_search(after.begin(), after.end(), c));
        }
      }
    }
  }
}

TEST(Slide, DescentsSurviveEveryMove) {
  for (const SkewShape& s : enumerate_skew_shapes(5, 4, 4)) {
    for (const StandardTableau& q : enumerate_syt(s)) {
      const auto des = descent_set(q);
      for (const SlideDirection dir : {SlideDirection::inward, SlideDirection::outward}) {
        for (const Cell c : slide_cells(q, dir)) {
          for (const HoledTableau& f : slide_frames(q, c, dir)) {
            EXPECT_EQ(descent_set(f.positions), des) << flat(q);
          }
        }
      }
    }
  }
}

TEST(Rectify, Examples) {
  EXPECT_EQ(flat(rectify(parse_syt(kRunning))), "1 2 3 / 4 5 6 / 7 / 8");
  EXPECT_EQ(rectify(parse_syt("1 2/3")), parse_syt("1 2/3"));
  EXPECT_EQ(rectify(parse_syt(". 1/2 3")), parse_syt("1 3/2"));
  EXPECT_EQ(rectify(parse_syt(". 2/1 3")), parse_syt("1 2/3"));
}

TEST(Rectify, AgreesWithInsertionOfReadingWord) {
  for (const SkewShape& s : enumerate_skew_shapes(6, 4, 4)) {
    for (const StandardTableau& q : enumerate_syt(s)) {
      const StandardTableau r = rectify(q);
      EXPECT_TRUE(r.shape().is_straight());
      EXPECT_EQ(r, rs_insert(reading_word(q)).insertion) << flat(q);
    }
  }
}

TEST(Rectify, RandomOrdersAgree) {
  std::mt19937_64 rng(7);
  for (const SkewShape& s : enumerate_skew_shapes(6, 4, 4)) {
    if (s.is_straight()) continue;
    for (const StandardTableau& q : enumerate_syt(s)) {
      const StandardTableau expected = rectify(q);
      for (int i = 0; i < 5; ++i) EXPECT_EQ(rectify(q, rng), expected);
    }
  }
}

TEST(Rectify, SeededRandomIsReproducible) {
  const StandardTableau q = parse_syt(kRunning);
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  EXPECT_EQ(rectify(q, a), rectify(q, b));
  EXPECT_EQ(uniform_index(a, 10), uniform_index(b, 10));
}

TEST(Extension, Predicate) {
  const SkewShape x = parse_shape("1");
  EXPECT_TRUE(extends(parse_shape("2/1"), x));
  EXPECT_TRUE(extends(parse_shape("2,1/1"), x));
  EXPECT_TRUE(extends(parse_shape("2,2/1"), x));
  EXPECT_FALSE(extends(parse_shape("2"), x));
  EXPECT_TRUE(extension_failure(x, parse_shape("2")).has_value());
  // Y on (1,2),(2,2) leaves (2,1) out of the union.
  const auto why = extension_failure(x, SkewShape::from_cells(std::vector<Cell>{{1, 2}, {2, 2}}));
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("skew"), std::string::npos);
}

TEST(VacatingSlides, SingleOutwardSlide) {
  const StandardTableau x = parse_syt("1 2/3");
  const StandardTableau y = StandardTableau::from_positions(std::vector<Cell>{{2, 2}});
  const VacatedSlide v = slide_sequence_with_vacating(x, y, SlideDirection::outward);
  EXPECT_EQ(flat(v.result), ". 2 / 1 3");
  EXPECT_EQ(v.vacating, parse_syt("1"));
}

TEST(VacatingSlides, SingleCellVacatingMatchesSlide) {
  const StandardTableau x = parse_syt("1");
  const StandardTableau y = StandardTableau::from_positions(std::vector<Cell>{{1, 2}});
  const VacatedSlide in = slide_sequence_with_vacating(y, x, SlideDirection::inward);
  const VacatedSlide out = slide_sequence_with_vacating(x, y, SlideDirection::outward);
  EXPECT_EQ(in.vacating, out.result);
  EXPECT_EQ(out.vacating, in.result);
}

TEST(VacatingSlides, RejectsNonExtension) {
  const StandardTableau x = parse_syt("1");
  const StandardTableau y = StandardTableau::from_positions(std::vector<Cell>{{1, 2}, {2, 2}});
  EXPECT_THROW(slide_sequence_with_vacating(x, y, SlideDirection::outward), DomainError);
  EXPECT_THROW(slide_sequence_with_vacating(y, x, SlideDirection::inward), DomainError);
}

struct Pair {
  StandardTableau x;
  StandardTableau y;
};

// Straight X with at most 3 cells and Y with at most 3 cells extending it.
std::vector<Pair> extension_pairs() {
  std::vector<Pair> out;
  for (const Partition& mu : partitions_in_box(3, 3)) {
    if (mu.empty() || mu.size() > 3) continue;
    const SkewShape xs(mu);
    for (const SkewShape& ys : enumerate_skew_shapes(3, 5, 5)) {
      if (!extends(ys, xs)) continue;
      for (const StandardTableau& x : enumerate_syt(xs)) {
        for (const StandardTableau& y : enumerate_syt(ys)) out.push_back({x, y});
      }
    }
  }
  return out;
}

TEST(VacatingSlides, RecoveryIdentities) {
  const auto pairs = extension_pairs();
  ASSERT_GT(pairs.size(), 100U);
  for (const Pair& p : pairs) {
    const VacatedSlide in = slide_sequence_with_vacating(p.y, p.x, SlideDirection::inward);
    const VacatedSlide back =
        slide_sequence_with_vacating(in.result, in.vacating, SlideDirection::outward);
    EXPECT_EQ(back.result, p.y) << flat(p.x) << " | " << flat(p.y);
    EXPECT_EQ(back.vacating, p.x);

    const VacatedSlide out = slide_sequence_with_vacating(p.x, p.y, SlideDirection::outward);
    const VacatedSlide undo =
        slide_sequence_with_vacating(out.result, out.vacating, SlideDirection::inward);
    EXPECT_EQ(undo.result, p.x);
    EXPECT_EQ(undo.vacating, p.y);

    // The vacating tableau of one direction is the slid tableau of the other.
    EXPECT_EQ(in.vacating, out.result);
    EXPECT_EQ(out.vacating, in.result);
  }
}

// Sliding into any filling of the same straight inner shape rectifies.
TEST(VacatingSlides, InnerFillingDoesNotMatter) {
  for (const SkewShape& s : enumerate_skew_shapes(4, 4, 4)) {
    if (s.is_straight() || s.inner().size() > 3) continue;
    const auto inners = enumerate_syt(SkewShape(s.inner()));
    for (const StandardTableau& x : enumerate_syt(s)) {
      const StandardTableau expected = rectify(x);
      std::vector<StandardTableau> vacating;
      for (const StandardTableau& p : inners) {
        const VacatedSlide v = slide_sequence_with_vacating(x, p, SlideDirection::inward);
        EXPECT_EQ(v.result, expected);
        vacating.push_back(v.vacating);
      }
      for (const StandardTableau& v : vacating) {
        EXPECT_TRUE(dual_equivalent(vacating.front(), v, 10, 3));
      }
    }
  }
}

TEST(DualEquivalence, Examples) {
  EXPECT_TRUE(dual_equivalent(parse_syt("1 2/3"), parse_syt("1 3/2"), 20, 1));
  const StandardTableau q = parse_syt(kRunning);
  EXPECT_TRUE(dual_equivalent(q, q, 20, 1));
  EXPECT_TRUE(dual_equivalent(parse_syt(". 1/2 3"), parse_syt(". 2/1 3"), 20, 1));
  EXPECT_FALSE(dual_equivalent(parse_syt(". 1/2"), parse_syt(". 2/1"), 20, 1));
  EXPECT_THROW(dual_equivalent(parse_syt("1 2"), parse_syt("1/2"), 1, 1), DomainError);
}

TEST(DualEquivalence, SameStraightShapeAlwaysEquivalent) {
  for (const Partition& p : partitions_in_box(4, 4)) {
    if (p.empty() || p.size() > 5) continue;
    const auto all = enumerate_syt(SkewShape(p));
    for (const StandardTableau& a : all) {
      EXPECT_TRUE(dual_equivalent(all.front(), a, 10, 5));
    }
  }
}

}  // namespace
}  // namespace plinth
