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

#include "plinth/schutzenberger.hpp"

#include <algorithm>
#include <sstream>

#include "board.hpp"
#include "plinth/error.hpp"
#include "plinth/jdt.hpp"

namespace plinth {
namespace {

void require_straight(const StandardTableau& q, const char* what) {
  if (!q.shape().is_straight()) {
    throw DomainError(std::string(what) + " needs a straight shape, got " +
                      q.shape().to_string());
  }
}

StandardTableau from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  std::vector<int> entries;
  for (const auto& row : rows) {
    parts.push_back(static_cast<int>(row.size()));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return StandardTableau(Tableau(SkewShape(Partition(std::move(parts))), std::move(entries)));
}

// Runs the freezing procedure; `stage` sees the frozen cells after each round.
template <typename OnStage>
StandardTableau run_evacuation(const StandardTableau& q, OnStage&& stage) {
  require_straight(q, "evacuation");
  const int n = q.size();
  detail::Board regular(q);
  std::vector<Cell> frozen_at(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    const Cell hole = regular.remove_smallest();
    const Cell vacated = detail::slide_inward(regular, hole);
    const int value = n - m + 1;
    frozen_at[static_cast<std::size_t>(value - 1)] = vacated;
    stage(regular, frozen_at, value);
  }
  return StandardTableau::from_positions(q.shape(), frozen_at);
}

}  // namespace

StandardTableau evacuate(const StandardTableau& q) {
  return run_evacuation(q, [](const detail::Board&, const std::vector<Cell>&, int) {});
}

std::vector<EvacuationStage> evacuation_trace(const StandardTableau& q) {
  std::vector<EvacuationStage> stages;
  const SkewShape& shape = q.shape();
  run_evacuation(q, [&](const detail::Board& regular, const std::vector<Cell>& frozen_at,
                        int lowest_frozen) {
    Tableau state = Tableau::filled(shape, 0);
    std::vector<bool> frozen(static_cast<std::size_t>(shape.size()), false);
    const auto live = regular.positions();
    for (std::size_t k = 0; k < live.size(); ++k) {
      state.set(live[k], static_cast<int>(k) + 1);
    }
    for (int v = lowest_frozen; v <= shape.size(); ++v) {
      const Cell c = frozen_at[static_cast<std::size_t>(v - 1)];
      state.set(c, v);
      frozen[static_cast<std::size_t>(shape.index_of(c))] = true;
    }
    stages.push_back({std::move(state), std::move(frozen)});
  });
  return stages;
}

std::string format_stage(const EvacuationStage& stage) {
  const SkewShape& shape = stage.state.shape();
  std::ostringstream out;
  for (int r = 1; r <= shape.rows(); ++r) {
    if (r > 1) out << '\n';
    for (int c = 1; c <= shape.row_end(r); ++c) {
      if (c > 1) out << ' ';
      if (c < shape.row_begin(r)) {
        out << '.';
        continue;
      }
      const int v = stage.state.at({r, c});
      if (stage.frozen[static_cast<std::size_t>(shape.index_of({r, c}))]) {
        out << '[' << v << ']';
      } else {
        out << v;
      }
    }
  }
  return out.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

RSPair rs_insert(const Permutation& w) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    for (; r < p.size(); ++r) {
      auto& row = p[r];
      const auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) break;
      std::swap(x, *it);
    }
    if (r == p.size()) {
      p.emplace_back();
      q.emplace_back();
    }
    p[r].push_back(x);
    q[r].push_back(i);
  }
  return {from_rows(p), from_rows(q)};
}

Permutation reverse_complement(const Permutation& w) {
  const int n = w.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i - 1)] = n + 1 - w(n + 1 - i);
  }
  return Permutation(std::move(images));
}

StandardTableau superstandard(const Partition& mu) {
  std::vector<int> entries(static_cast<std::size_t>(mu.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = static_cast<int>(i) + 1;
  return StandardTableau(Tableau(SkewShape(mu), std::move(entries)));
}

StandardTableau skew_evacuate(const StandardTableau& q) {
  return skew_evacuate(q, superstandard(q.shape().inner()));
}

StandardTableau skew_evacuate(const StandardTableau& q, const StandardTableau& aux) {
  if (!aux.shape().is_straight() || aux.shape().outer() != q.shape().inner()) {
    throw DomainError("auxiliary tableau must fill the inner partition " +
                      q.shape().inner().to_string());
  }
  if (q.size() == 0) return q;
  const VacatedSlide in = slide_sequence_with_vacating(q, aux, SlideDirection::inward);
  const StandardTableau flipped = evacuate(in.result);
  const VacatedSlide out =
      slide_sequence_with_vacating(flipped, in.vacating, SlideDirection::outward);
  return StandardTableau::from_positions(q.shape(), out.result.positions());
}

std::pair<StandardTableau, StandardTableau> delta(const StandardTableau& p,
                                                  const StandardTableau& q) {
  require_straight(p, "delta");
  if (const auto failure = extension_failure(p.shape(), q.shape())) {
    throw DomainError("delta: " + *failure);
  }
  std::vector<Cell> all(p.positions().begin(), p.positions().end());
  all.insert(all.end(), q.positions().begin(), q.positions().end());
  if (!SkewShape::from_cells(all).is_straight()) {
    throw DomainError("delta: the union of the two shapes must be straight");
  }
  StandardTableau inward = slide_sequence_with_vacating(q, p, SlideDirection::inward).result;
  StandardTableau outward = slide_sequence_with_vacating(p, q, SlideDirection::outward).result;
  return {std::move(inward), std::move(outward)};
}

}  // namespace plinth
