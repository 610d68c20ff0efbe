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

#include "plinth/plinths.hpp"

#include <algorithm>
#include <stdexcept>

#include "plinth/error.hpp"

namespace plinth {

bool agrees(const Tableau& t, const StandardTableau& q) {
  if (!t.shape().same_cells(q.shape())) {
    throw DomainError("agreement needs tableaux on the same cells");
  }
  const auto pos = q.positions();
  for (std::size_t k = 1; k < pos.size(); ++k) {
    const int before = t.at(pos[k - 1]);
    const int after = t.at(pos[k]);
    if (before > after) return false;
    if (pos[k].row > pos[k - 1].row && before == after) return false;
  }
  return true;
}

StandardTableau order_of(const Tableau& t) {
  if (!is_ssyt(t)) throw DomainError("order_of needs a semistandard tableau");
  std::vector<Cell> cells = t.shape().cells();
  std::stable_sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
    const int va = t.at(a);
    const int vb = t.at(b);
    if (va != vb) return va < vb;
    return a.col < b.col;
  });
  StandardTableau q = StandardTableau::from_positions(t.shape(), cells);
  if (!agrees(t, q)) {
    throw std::logic_error("order_of produced an order the tableau does not agree with");
  }
  return q;
}

Tableau plinth_of(const StandardTableau& q) {
  Tableau out = Tableau::filled(q.shape(), 0);
  const auto pos = q.positions();
  int descents_so_far = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (k > 0 && pos[k].row > pos[k - 1].row) ++descents_so_far;
    out.set(pos[k], descents_so_far);
  }
  return out;
}

std::int64_t plinth_volume(const StandardTableau& q) {
  const std::int64_t n = q.size();
  std::int64_t total = 0;
  for (int d : descent_set(q)) total += n - d;
  return total;
}

std::vector<PlinthTable> plinth_set(const SkewShape& shape) {
  std::vector<PlinthTable> out;
  for (StandardTableau& q : enumerate_syt(shape)) {
    Tableau base = plinth_of(q);
    out.push_back({std::move(base), std::move(q)});
  }
  return out;
}

}  // namespace plinth
