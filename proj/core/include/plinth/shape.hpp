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

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plinth {

/// A box of a Young diagram. Rows grow downward, columns grow rightward,
/// both 1-based. The defaulted ordering is row-major.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Product order on cells: `a` is weakly north-west of `b`.
constexpr bool weakly_northwest(Cell a, Cell b) {
  return a.row <= b.row && a.col <= b.col;
}

/// Weakly decreasing list of positive parts. Trailing zeros on input are
/// dropped; any other zero or an increase is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Length of 1-based row `row`; zero past the last row.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  /// True when every row of `other` fits inside the matching row of *this.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The skew diagram outer/inner: cells (i, j) with inner_i < j <= outer_i.
///
/// Construction trims trailing rows where outer and inner coincide; beyond
/// that the pair is kept as given, so two shapes may share a cell set while
/// comparing unequal. Use `same_cells` or `canonical` when only the cell set
/// matters.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {});

  /// Builds the minimal representative of a cell set (outer = down-closure
  /// of the cells). Throws DomainError when the set is not a skew diagram,
  /// i.e. not convex in the product order.
  static SkewShape from_cells(std::span<const Cell> cells);
  static std::optional<SkewShape> try_from_cells(std::span<const Cell> cells);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }

  /// First and last column of row `row` (1-based); empty when begin > end.
  int row_begin(int row) const { return inner_.part(row) + 1; }
  int row_end(int row) const { return outer_.part(row); }
  int row_length(int row) const { return outer_.part(row) - inner_.part(row); }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= rows() && c.col >= row_begin(c.row) &&
           c.col <= row_end(c.row);
  }

  /// Row-major index of `c` among the cells, or -1 when absent.
  int index_of(Cell c) const;

  /// All cells in row-major order.
  std::vector<Cell> cells() const;

  bool same_cells(const SkewShape& other) const;
  SkewShape canonical() const { return from_cells(cells()); }

  /// "4,4,4,3/2,1,1"; straight shapes omit the slash, the empty shape is "0".
  std::string to_string() const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
  int size_ = 0;
};

/// Free-function spelling of `SkewShape::cells`.
inline std::vector<Cell> cells(const SkewShape& shape) { return shape.cells(); }

Partition parse_partition(std::string_view text);

/// Parses "outer" or "outer/inner" with comma separated parts.
SkewShape parse_shape(std::string_view text);

/// Size first, then outer, then inner. Used to order enumeration universes.
bool shape_order_less(const SkewShape& a, const SkewShape& b);

/// Every non-empty skew diagram fitting in a max_rows x max_cols box with at
/// most max_cells cells, once per cell set, as its minimal representative,
/// sorted by `shape_order_less`.
std::vector<SkewShape> enumerate_skew_shapes(int max_cells, int max_rows,
                                             int max_cols);

/// Every partition fitting in a max_rows x max_cols box (including the empty
/// one), in lexicographic order of parts.
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

}  // namespace plinth
