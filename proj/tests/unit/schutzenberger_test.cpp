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

#include <numeric>

#include "plinth/error.hpp"
#include "plinth/jdt.hpp"
#include "plinth/plinths.hpp"
#include "plinth/schutzenberger.hpp"

namespace plinth {
namespace {

std::string flat(const StandardTableau& q) { return format_tableau_inline(q.tableau()); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

TEST(Evacuate, Examples) {
  EXPECT_EQ(flat(evacuate(parse_syt("1 2 7/3 5/4 6"))), "1 2 4 / 3 5 / 6 7");
  const StandardTableau s = evacuate(parse_syt("1 2 3/4 5"));
  EXPECT_EQ(flat(s), "1 2 5 / 3 4");
  EXPECT_EQ(maj(s), 2);
  EXPECT_EQ(evacuate(parse_syt("1")), parse_syt("1"));
  EXPECT_THROW(evacuate(parse_syt(". 1/2 3")), DomainError);
}

TEST(Evacuate, TraceOfWorkedExample) {
  const auto stages = evacuation_trace(parse_syt("1 2 7/3 5/4 6"));
  std::vector<std::string> got;
  for (const auto& s : stages) got.push_back(format_stage(s));
  const std::vector<std::string> expected{
      "1 4 6\n2 5\n3 [7]",       "1 3 5\n2 4\n[6] [7]",       "1 2 4\n3 [5]\n[6] [7]",
      "1 3 [4]\n2 [5]\n[6] [7]", "1 2 [4]\n[3] [5]\n[6] [7]", "1 [2] [4]\n[3] [5]\n[6] [7]",
      "[1] [2] [4]\n[3] [5]\n[6] [7]",
  };
  EXPECT_EQ(got, expected);
}

TEST(Evacuate, InvolutionOnStraightShapes) {
  for (const Partition& p : partitions_in_box(7, 7)) {
    if (p.empty() || p.size() > 7) continue;
    for (const StandardTableau& q : enumerate_syt(SkewShape(p))) {
      const StandardTableau s = evacuate(q);
      EXPECT_EQ(s.shape(), q.shape());
      EXPECT_EQ(evacuate(s), q) << flat(q);
    }
  }
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_THROW(Permutation({1, 3}), DomainError);
  EXPECT_EQ(Permutation::identity(3), Permutation({1, 2, 3}));
  EXPECT_EQ(descent_set(Permutation({3, 1, 2})), std::vector<int>{1});
}

TEST(RobinsonSchensted, Examples) {
  const RSPair id = rs_insert(Permutation::identity(3));
  EXPECT_EQ(flat(id.insertion), "1 2 3");
  EXPECT_EQ(flat(id.recording), "1 2 3");
  const RSPair rev = rs_insert(Permutation({2, 1}));
  EXPECT_EQ(flat(rev.insertion), "1 / 2");
  EXPECT_EQ(flat(rev.recording), "1 / 2");
  const RSPair w = rs_insert(Permutation({3, 1, 2}));
  EXPECT_EQ(flat(w.recording), "1 3 / 2");
  EXPECT_EQ(flat(w.insertion), "1 2 / 3");
  EXPECT_EQ(descent_set(w.recording), descent_set(Permutation({3, 1, 2})));
}

// RS is a bijection onto pairs of equal-shape standard tableaux, and the
// inverse permutation swaps the two tableaux.
TEST(RobinsonSchensted, BijectionAndSymmetry) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const Permutation& w : all_permutations(n)) {
      const RSPair r = rs_insert(w);
      EXPECT_EQ(r.insertion.shape(), r.recording.shape());
      EXPECT_TRUE(seen.insert({format_tableau_inline(r.insertion.tableau()),
                               format_tableau_inline(r.recording.tableau())})
                      .second);
      std::vector<int> inv(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(w(i) - 1)] = i;
      const RSPair ri = rs_insert(Permutation(inv));
      EXPECT_EQ(ri.insertion, r.recording);
      EXPECT_EQ(ri.recording, r.insertion);
    }
  }
}

TEST(ReverseComplement, Examples) {
  EXPECT_EQ(reverse_complement(Permutation::identity(3)), Permutation::identity(3));
  EXPECT_EQ(reverse_complement(Permutation({2, 1})), Permutation({2, 1}));
  EXPECT_EQ(reverse_complement(Permutation({3, 1, 2})), Permutation({2, 3, 1}));
  for (const Permutation& w : all_permutations(5)) {
    EXPECT_EQ(reverse_complement(reverse_complement(w)), w);
  }
}

TEST(RobinsonSchensted, EvacuationAndDescents) {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const Permutation wp = reverse_complement(w);
      const StandardTableau q = rs_insert(w).recording;
      EXPECT_EQ(descent_set(q), descent_set(w));
      EXPECT_EQ(evacuate(q), rs_insert(wp).recording);
      std::vector<int> mirrored;
      for (int i : descent_set(w)) mirrored.insert(mirrored.begin(), n - i);
      EXPECT_EQ(descent_set(wp), mirrored);
    }
  }
}

TEST(Evacuate, MajorIndexIdentity) {
  for (const Partition& p : partitions_in_box(7, 7)) {
    if (p.empty() || p.size() > 7) continue;
    for (const StandardTableau& q : enumerate_syt(SkewShape(p))) {
      EXPECT_EQ(maj(q) + maj(evacuate(q)),
                static_cast<std::int64_t>(q.size() * descent_set(q).size()));
    }
  }
}

TEST(Superstandard, FillsRowByRow) {
  EXPECT_EQ(flat(superstandard(Partition({3, 1}))), "1 2 3 / 4");
  EXPECT_EQ(superstandard(Partition()).size(), 0);
}

TEST(SkewEvacuate, Examples) {
  EXPECT_EQ(flat(skew_evacuate(parse_syt("1 2 3/4 5"))), "1 2 5 / 3 4");
  const StandardTableau t1 = parse_syt(". 1/2 3");
  const StandardTableau t2 = skew_evacuate(t1);
  EXPECT_EQ(t2, parse_syt(". 2/1 3"));
  EXPECT_EQ(maj(t1), 1);
  EXPECT_EQ(plinth_volume(t1), 2);
  EXPECT_EQ(maj(t2), 2);
  EXPECT_EQ(plinth_volume(t2), 1);
  EXPECT_EQ(skew_evacuate(t2), t1);
}

TEST(SkewEvacuate, KeepsShapeRepresentation) {
  const StandardTableau q = parse_syt(". ./1 2/3", parse_shape("2,2,1/2"));
  const StandardTableau s = skew_evacuate(q);
  EXPECT_EQ(s.shape(), q.shape());
  EXPECT_EQ(skew_evacuate(s), q);
}

TEST(SkewEvacuate, AuxiliaryMustFillInnerShape) {
  const StandardTableau q = parse_syt(". 1/2 3");
  EXPECT_THROW(skew_evacuate(q, parse_syt("1 2")), DomainError);
  EXPECT_EQ(skew_evacuate(q, parse_syt("1")), skew_evacuate(q));
}

TEST(SkewEvacuate, InvolutionAndIndependence) {
  for (const SkewShape& s : enumerate_skew_shapes(5, 4, 4)) {
    if (s.inner().size() > 3) continue;
    const auto auxes = enumerate_syt(SkewShape(s.inner()));
    for (const StandardTableau& q : enumerate_syt(s)) {
      const StandardTableau image = skew_evacuate(q);
      EXPECT_EQ(image.shape(), q.shape());
      EXPECT_EQ(skew_evacuate(image), q) << flat(q);
      for (const StandardTableau& aux : auxes) EXPECT_EQ(skew_evacuate(q, aux), image);
      EXPECT_EQ(maj(image), plinth_volume(q)) << flat(q);
    }
  }
}

TEST(SkewEvacuate, MatchesEvacuationOnStraightShapes) {
  for (const Partition& p : partitions_in_box(5, 5)) {
    if (p.empty() || p.size() > 6) continue;
    for (const StandardTableau& q : enumerate_syt(SkewShape(p))) {
      EXPECT_EQ(skew_evacuate(q), evacuate(q));
    }
  }
}

TEST(Delta, SmallestCase) {
  const StandardTableau p = parse_syt("1");
  const StandardTableau q = StandardTableau::from_positions(std::vector<Cell>{{1, 2}});
  const auto [a, b] = delta(p, q);
  EXPECT_EQ(a, p);
  EXPECT_EQ(b, q);
  const auto [c, d] = delta(a, b);
  EXPECT_EQ(c, p);
  EXPECT_EQ(d, q);
}

TEST(Delta, TwoSlideCase) {
  const StandardTableau p = parse_syt("1");
  const StandardTableau q = parse_syt(". 1/2 3");
  const auto [a, b] = delta(p, q);
  EXPECT_EQ(a, parse_syt("1 3/2"));
  EXPECT_EQ(b, StandardTableau::from_positions(std::vector<Cell>{{2, 2}}));
  const auto back = delta(a, b);
  EXPECT_EQ(back.first, p);
  EXPECT_EQ(back.second, q);
}

TEST(Delta, InvolutionOnSmallPairs) {
  int cases = 0;
  for (const Partition& lambda : partitions_in_box(6, 6)) {
    if (lambda.empty() || lambda.size() > 6) continue;
    for (const Partition& mu : partitions_in_box(6, 6)) {
      if (mu.empty() || !lambda.contains(mu) || mu == lambda) continue;
      for (const StandardTableau& p : enumerate_syt(SkewShape(mu))) {
        for (const StandardTableau& q : enumerate_syt(SkewShape(lambda, mu))) {
          const auto once = delta(p, q);
          const auto twice = delta(once.first, once.second);
          EXPECT_EQ(twice.first, p);
          EXPECT_EQ(twice.second, q);
          ++cases;
        }
      }
    }
  }
  EXPECT_GT(cases, 500);
}

TEST(Delta, Preconditions) {
  EXPECT_THROW(delta(parse_syt(". 1/2"), parse_syt("1")), DomainError);
  const StandardTableau far = StandardTableau::from_positions(std::vector<Cell>{{1, 3}});
  EXPECT_THROW(delta(parse_syt("1"), far), DomainError);
}

}  // namespace
}  // namespace plinth
