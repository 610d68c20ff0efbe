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

#include <algorithm>
#include <span>
#include <vector>

#include "plinth/shape.hpp"
#include "plinth/tableau.hpp"

namespace plinth::detail {

// Mutable dense grid used while sliding. Entry 0 means "no cell"; entries
// are 1..n and positions_[k - 1] tracks where k sits.
class Board {
 public:
  Board() = default;

  explicit Board(std::span<const Cell> positions)
      : positions_(positions.begin(), positions.end()) {
    int rows = 1;
    int cols = 1;
    for (const Cell& c : positions_) {
      rows = std::max(rows, c.row);
      cols = std::max(cols, c.col);
    }
    resize(rows + 2, cols + 2);
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      grid_[offset(positions_[k])] = static_cast<int>(k) + 1;
    }
  }

  explicit Board(const StandardTableau& q) : Board(q.positions()) {}

  int at(Cell c) const {
    if (c.row < 1 || c.col < 1 || c.row >= rows_ || c.col >= cols_) return 0;
    return grid_[offset(c)];
  }
  bool occupied(Cell c) const { return at(c) != 0; }

  int size() const { return static_cast<int>(positions_.size()); }
  std::span<const Cell> positions() const { return positions_; }

  // Moves the entry at `from` into the empty cell `to`.
  void move(Cell from, Cell to) {
    ensure(to);
    const int v = grid_[offset(from)];
    grid_[offset(from)] = 0;
    grid_[offset(to)] = v;
    positions_[static_cast<std::size_t>(v - 1)] = to;
  }

  // Removes entry 1 and shifts every other entry down by one.
  Cell remove_smallest() {
    const Cell c = positions_.front();
    grid_[offset(c)] = 0;
    positions_.erase(positions_.begin());
    for (const Cell& p : positions_) --grid_[offset(p)];
    return c;
  }

  StandardTableau to_tableau() const { return StandardTableau::from_positions(positions_); }

 private:
  std::size_t offset(Cell c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }

  void ensure(Cell c) {
    if (c.row + 1 < rows_ && c.col + 1 < cols_) return;
    const int rows = std::max(rows_, c.row + 2);
    const int cols = std::max(cols_, c.col + 2);
    std::vector<int> old = std::move(grid_);
    const int old_cols = cols_;
    const int old_rows = rows_;
    resize(rows, cols);
    for (int r = 0; r < old_rows; ++r) {
      for (int col = 0; col < old_cols; ++col) {
        grid_[offset({r, col})] =
            old[static_cast<std::size_t>(r) * static_cast<std::size_t>(old_cols) +
                static_cast<std::size_t>(col)];
      }
    }
  }

  void resize(int rows, int cols) {
    rows_ = rows;
    cols_ = cols;
    grid_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> grid_;
  std::vector<Cell> positions_;
};

// Runs one inward slide from the vacancy `hole`; returns the cell finally
// vacated. `on_move` sees the vacancy after every move.
template <typename OnMove>
Cell slide_inward(Board& b, Cell hole, OnMove&& on_move) {
  while (true) {
    const Cell east{hole.row, hole.col + 1};
    const Cell south{hole.row + 1, hole.col};
    const int e = b.at(east);
    const int s = b.at(south);
    if (e == 0 && s == 0) return hole;
    const Cell from = (e != 0 && (s == 0 || e < s)) ? east : south;
    b.move(from, hole);
    hole = from;
    on_move(hole);
  }
}

template <typename OnMove>
Cell slide_outward(Board& b, Cell hole, OnMove&& on_move) {
  while (true) {
    const Cell west{hole.row, hole.col - 1};
    const Cell north{hole.row - 1, hole.col};
    const int w = b.at(west);
    const int n = b.at(north);
    if (w == 0 && n == 0) return hole;
    const Cell from = (w > n) ? west : north;
    b.move(from, hole);
    hole = from;
    on_move(hole);
  }
}

inline Cell slide_inward(Board& b, Cell hole) {
  return slide_inward(b, hole, [](Cell) {});
}
inline Cell slide_outward(Board& b, Cell hole) {
  return slide_outward(b, hole, [](Cell) {});
}

// Inner corners of the minimal inner partition of the board's cells,
// top to bottom. These are exactly the legal inward slide cells.
inline std::vector<Cell> inner_corners(const Board& b) {
  int max_row = 0;
  for (const Cell& c : b.positions()) max_row = std::max(max_row, c.row);
  std::vector<int> count(static_cast<std::size_t>(max_row) + 2, 0);
  std::vector<int> last(static_cast<std::size_t>(max_row) + 2, 0);
  for (const Cell& c : b.positions()) {
    ++count[static_cast<std::size_t>(c.row)];
    last[static_cast<std::size_t>(c.row)] = std::max(last[static_cast<std::size_t>(c.row)], c.col);
  }
  std::vector<int> mu(static_cast<std::size_t>(max_row) + 2, 0);
  int reach = 0;
  for (int r = max_row; r >= 1; --r) {
    reach = std::max(reach, last[static_cast<std::size_t>(r)]);
    mu[static_cast<std::size_t>(r)] = reach - count[static_cast<std::size_t>(r)];
  }
  std::vector<Cell> out;
  for (int r = 1; r <= max_row; ++r) {
    const int m = mu[static_cast<std::size_t>(r)];
    if (m > 0 && mu[static_cast<std::size_t>(r) + 1] < m) out.push_back({r, m});
  }
  return out;
}

}  // namespace plinth::detail
