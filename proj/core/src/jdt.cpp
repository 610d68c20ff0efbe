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

#include "plinth/jdt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "board.hpp"
#include "plinth/error.hpp"

namespace plinth {
namespace {

std::vector<Cell> sorted_cells(std::span<const Cell> positions) {
  std::vector<Cell> out(positions.begin(), positions.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool has(const std::vector<Cell>& sorted, Cell c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

// `cells` must be sorted. Adjacency is optional so slide sequences may pass
// through cells that leave the tableau unchanged.
bool legal(const std::vector<Cell>& cells, Cell c, SlideDirection dir, bool need_adjacent) {
  if (c.row < 1 || c.col < 1 || has(cells, c)) return false;
  const Cell n{c.row - 1, c.col};
  const Cell w{c.row, c.col - 1};
  const Cell s{c.row + 1, c.col};
  const Cell e{c.row, c.col + 1};
  if (dir == SlideDirection::inward) {
    if (has(cells, n) || has(cells, w)) return false;
    if (need_adjacent && !has(cells, s) && !has(cells, e)) return false;
  } else {
    if (has(cells, s) || has(cells, e)) return false;
    if (need_adjacent && !has(cells, n) && !has(cells, w)) return false;
  }
  std::vector<Cell> grown = cells;
  grown.push_back(c);
  return SkewShape::try_from_cells(grown).has_value();
}

Cell run_slide(detail::Board& b, Cell c, SlideDirection dir) {
  return dir == SlideDirection::inward ? detail::slide_inward(b, c)
                                       : detail::slide_outward(b, c);
}

std::vector<HoledTableau> frames_on(detail::Board& b, Cell c, SlideDirection dir) {
  std::vector<HoledTableau> frames;
  const auto snapshot = [&](std::optional<Cell> hole) {
    frames.push_back({std::vector<Cell>(b.positions().begin(), b.positions().end()), hole});
  };
  snapshot(c);
  const auto on_move = [&](Cell hole) { snapshot(hole); };
  if (dir == SlideDirection::inward) {
    detail::slide_inward(b, c, on_move);
  } else {
    detail::slide_outward(b, c, on_move);
  }
  // The vacancy has left the cell set after the last move.
  if (frames.size() > 1) {
    frames.back().hole.reset();
  } else {
    snapshot(std::nullopt);
  }
  return frames;
}

std::string describe(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

std::string format_holed(const HoledTableau& h) {
  std::map<int, std::map<int, std::string>> rows;
  int max_row = 0;
  for (std::size_t k = 0; k < h.positions.size(); ++k) {
    const Cell c = h.positions[k];
    rows[c.row][c.col] = std::to_string(k + 1);
    max_row = std::max(max_row, c.row);
  }
  if (h.hole) {
    rows[h.hole->row][h.hole->col] = "*";
    max_row = std::max(max_row, h.hole->row);
  }
  std::ostringstream out;
  for (int r = 1; r <= max_row; ++r) {
    if (r > 1) out << '\n';
    const auto it = rows.find(r);
    if (it == rows.end()) {
      out << '.';
      continue;
    }
    const int last = it->second.rbegin()->first;
    for (int col = 1; col <= last; ++col) {
      if (col > 1) out << ' ';
      const auto cell = it->second.find(col);
      out << (cell == it->second.end() ? std::string(".") : cell->second);
    }
  }
  return out.str();
}

std::vector<Cell> slide_cells(const StandardTableau& q, SlideDirection dir) {
  const std::vector<Cell> cells = sorted_cells(q.positions());
  std::set<Cell> found;
  const int d = dir == SlideDirection::inward ? -1 : 1;
  for (const Cell& c : cells) {
    for (const Cell cand : {Cell{c.row + d, c.col}, Cell{c.row, c.col + d}}) {
      if (legal(cells, cand, dir, true)) found.insert(cand);
    }
  }
  return {found.begin(), found.end()};
}

bool is_slide_cell(const StandardTableau& q, Cell c, SlideDirection dir) {
  return legal(sorted_cells(q.positions()), c, dir, true);
}

StandardTableau slide_into(const StandardTableau& q, Cell c, SlideDirection dir) {
  if (!is_slide_cell(q, c, dir)) {
    throw DomainError(describe(c) + " is not a legal " +
                      (dir == SlideDirection::inward ? "inward" : "outward") +
                      " slide cell");
  }
  detail::Board b(q);
  run_slide(b, c, dir);
  return b.to_tableau();
}

std::vector<HoledTableau> slide_frames(const StandardTableau& q, Cell c, SlideDirection dir) {
  if (!is_slide_cell(q, c, dir)) {
    throw DomainError(describe(c) + " is not a legal slide cell");
  }
  detail::Board b(q);
  return frames_on(b, c, dir);
}

StandardTableau rectify(const StandardTableau& q) {
  detail::Board b(q);
  for (auto corners = detail::inner_corners(b); !corners.empty();
       corners = detail::inner_corners(b)) {
    detail::slide_inward(b, corners.front());
  }
  return b.to_tableau();
}

StandardTableau rectify(const StandardTableau& q, std::mt19937_64& rng) {
  detail::Board b(q);
  for (auto corners = detail::inner_corners(b); !corners.empty();
       corners = detail::inner_corners(b)) {
    detail::slide_inward(b, corners[uniform_index(rng, corners.size())]);
  }
  return b.to_tableau();
}

std::vector<RectificationStep> rectification_trace(const StandardTableau& q) {
  std::vector<RectificationStep> steps;
  detail::Board b(q);
  for (auto corners = detail::inner_corners(b); !corners.empty();
       corners = detail::inner_corners(b)) {
    const Cell c = corners.front();
    steps.push_back({c, frames_on(b, c, SlideDirection::inward)});
  }
  return steps;
}

std::optional<std::string> extension_failure(const SkewShape& base, const SkewShape& ext) {
  const std::vector<Cell> a = base.cells();
  const std::vector<Cell> b = ext.cells();
  for (const Cell& c : b) {
    if (base.contains(c)) return "cell " + describe(c) + " lies in both shapes";
  }
  for (const Cell& e : b) {
    for (const Cell& c : a) {
      if (weakly_northwest(e, c)) {
        return "cell " + describe(e) + " lies north-west of " + describe(c);
      }
    }
  }
  std::vector<Cell> all = a;
  all.insert(all.end(), b.begin(), b.end());
  if (!SkewShape::try_from_cells(all)) return std::string("union is not a skew diagram");
  return std::nullopt;
}

VacatedSlide slide_sequence_with_vacating(const StandardTableau& tableau,
                                          const StandardTableau& order,
                                          SlideDirection dir) {
  const bool outward = dir == SlideDirection::outward;
  const auto failure = outward ? extension_failure(tableau.shape(), order.shape())
                               : extension_failure(order.shape(), tableau.shape());
  if (failure) throw DomainError("shapes do not extend: " + *failure);

  detail::Board b(tableau);
  const int m = order.size();
  std::vector<Cell> vacated(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int k = outward ? i + 1 : m - i;
    vacated[static_cast<std::size_t>(k - 1)] = run_slide(b, order.position(k), dir);
  }
  return {b.to_tableau(), StandardTableau::from_positions(vacated)};
}

bool dual_equivalent(const StandardTableau& p, const StandardTableau& q, int trials,
                     std::uint64_t seed) {
  if (sorted_cells(p.positions()) != sorted_cells(q.positions())) {
    throw DomainError("dual equivalence needs tableaux on the same cells");
  }
  if (!rectify(p).shape().same_cells(rectify(q).shape())) return false;

  std::mt19937_64 rng(seed);
  const int steps = p.size() + 2;
  for (int t = 0; t < trials; ++t) {
    detail::Board a(p);
    detail::Board b(q);
    for (int s = 0; s < steps; ++s) {
      const auto dir = (rng() & 1U) != 0U ? SlideDirection::inward : SlideDirection::outward;
      const std::vector<Cell> here = sorted_cells(a.positions());
      std::vector<Cell> options;
      const int d = dir == SlideDirection::inward ? -1 : 1;
      for (const Cell& c : here) {
        for (const Cell cand : {Cell{c.row + d, c.col}, Cell{c.row, c.col + d}}) {
          if (legal(here, cand, dir, true)) options.push_back(cand);
        }
      }
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
      if (options.empty()) continue;
      const Cell c = options[uniform_index(rng, options.size())];
      run_slide(a, c, dir);
      run_slide(b, c, dir);
      if (sorted_cells(a.positions()) != sorted_cells(b.positions())) return false;
    }
  }
  return true;
}

}  // namespace plinth
