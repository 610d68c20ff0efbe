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

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plinth/tableau.hpp"

namespace plinth {

/// Evacuation of a straight-shape standard tableau.
///
/// Repeated n times: drop the smallest regular entry, lower the other
/// regular entries by one, slide the vacancy out through the regular cells,
/// then freeze the previous largest regular value in the vacated cell.
/// Throws DomainError on skew input.
StandardTableau evacuate(const StandardTableau& q);

/// One intermediate tableau Q_m of `evacuate`. frozen[i] flags the i-th
/// cell in row-major order.
struct EvacuationStage {
  Tableau state;
  std::vector<bool> frozen;
};

/// Q_1, ..., Q_n; the last stage equals evacuate(q) with every cell frozen.
std::vector<EvacuationStage> evacuation_trace(const StandardTableau& q);

/// Rows of a stage with frozen entries written as "[k]".
std::string format_stage(const EvacuationStage& stage);

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// {i : w(i) > w(i+1)}.
std::vector<int> descent_set(const Permutation& w);

struct RSPair {
  StandardTableau insertion;
  StandardTableau recording;
};

/// Row insertion of w(1), ..., w(n); the recording tableau marks the cell
/// created at step i with i.
RSPair rs_insert(const Permutation& w);

/// w'(i) = n + 1 - w(n + 1 - i).
Permutation reverse_complement(const Permutation& w);

/// The straight tableau of shape `mu` filled 1..|mu| row by row.
StandardTableau superstandard(const Partition& mu);

/// Evacuation extended to skew shapes: rectify q by sliding it into an
/// auxiliary straight tableau `aux` filling its inner partition, evacuate
/// the rectification, then slide it back out along the vacated cells.
/// The result is independent of `aux`; the single-argument form uses the
/// superstandard filling. The result keeps q's shape representation.
StandardTableau skew_evacuate(const StandardTableau& q);
StandardTableau skew_evacuate(const StandardTableau& q, const StandardTableau& aux);

/// (p, q) -> (q slid into p, p slid out through q). Needs p straight, q
/// extending p, and the union straight. An involution.
std::pair<StandardTableau, StandardTableau> delta(const StandardTableau& p,
                                                  const StandardTableau& q);

}  // namespace plinth
