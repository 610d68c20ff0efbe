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

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plinth/shape.hpp"

namespace plinth {

/// A filling of a skew shape by integers, stored row-major.
///
/// Semistandard tableaux here take entries from 0 upward, not from 1.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<int> entries);

  static Tableau filled(SkewShape shape, int value);

  const SkewShape& shape() const { return shape_; }
  int size() const { return static_cast<int>(entries_.size()); }

  int at(Cell c) const;
  void set(Cell c, int value);

  std::span<const int> entries() const { return entries_; }
  std::int64_t volume() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// A tableau holding 1..n once each, strictly increasing along rows and
/// down columns. Also caches the inverse map k -> cell.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(Tableau t);

  /// positions[k - 1] is the cell holding k. The shape is the minimal
  /// representative of the cell set unless one is supplied.
  static StandardTableau from_positions(std::span<const Cell> positions);
  static StandardTableau from_positions(SkewShape shape,
                                        std::span<const Cell> positions);

  const Tableau& tableau() const { return tableau_; }
  const SkewShape& shape() const { return tableau_.shape(); }
  int size() const { return tableau_.size(); }
  int at(Cell c) const { return tableau_.at(c); }

  /// The cell holding `k`, 1 <= k <= n.
  Cell position(int k) const { return positions_[static_cast<std::size_t>(k - 1)]; }
  std::span<const Cell> positions() const { return positions_; }

  // Compared as fillings of a cell set, so two representatives of the same
  // skew diagram compare equal.
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.positions_ <=> b.positions_;
  }
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.positions_ == b.positions_;
  }

 private:
  Tableau tableau_;
  std::vector<Cell> positions_;
};

/// Weakly increasing list of non-negative integers.
class ReadingPartition {
 public:
  ReadingPartition() = default;
  explicit ReadingPartition(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }
  std::int64_t sum() const;

  /// "0,1,1,2"
  std::string to_string() const;

  friend bool operator==(const ReadingPartition&, const ReadingPartition&) = default;

 private:
  std::vector<int> values_;
};

ReadingPartition parse_reading_partition(std::string_view text);

bool is_ssyt(const Tableau& t);
bool is_syt(const Tableau& t);

/// Throws DomainError when k is outside 1..n.
Cell position_of(const StandardTableau& q, int k);

/// {k : the cell of k+1 lies in a lower row than the cell of k}, ascending.
/// The positional form accepts any injective placement of 1..n, including
/// intermediate states of a slide with a hole.
std::vector<int> descent_set(std::span<const Cell> positions);
std::vector<int> descent_set(const StandardTableau& q);

std::int64_t maj(const StandardTableau& q);
std::int64_t maj(std::span<const int> descents);

/// Entries sorted ascending. Works on any filling, valid or not.
ReadingPartition reading_partition(const Tableau& t);

/// Text form: one row per line, entries separated by single spaces, `.` for
/// cells of the inner partition. `/` is accepted as a row separator.
/// When `shape` is given, rows may omit the leading dots.
Tableau parse_tableau(std::string_view text,
                      const std::optional<SkewShape>& shape = std::nullopt);
StandardTableau parse_syt(std::string_view text,
                          const std::optional<SkewShape>& shape = std::nullopt);
std::string format_tableau(const Tableau& t);
std::string format_tableau(const StandardTableau& q);
/// Same rows joined with " / " on one line.
std::string format_tableau_inline(const Tableau& t);

/// Maximum number of cells for exhaustive tableau enumeration. Reads the
/// TABLEAUX_BUDGET environment variable; defaults to 9.
int enumeration_cell_limit();

/// Every standard filling of `shape`, ordered lexicographically by the
/// row-major entry list. Throws LimitExceeded past the cell limit.
std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);

/// Count of standard fillings, without materializing them.
std::int64_t count_syt(const SkewShape& shape);

/// Lazily walks the semistandard fillings of a shape with entries in
/// [0, max_entry] (and, optionally, total volume at most max_volume), in
/// lexicographic order of the row-major entry list.
class SsytEnumerator {
 public:
  SsytEnumerator(SkewShape shape, int max_entry,
                 std::optional<std::int64_t> max_volume = std::nullopt);

  /// Moves to the next filling; false once exhausted. Must be called
  /// before the first `values()`.
  bool next();

  std::span<const int> values() const { return values_; }
  std::int64_t volume() const { return volume_; }
  Tableau current() const { return Tableau(shape_, values_); }
  const SkewShape& shape() const { return shape_; }

 private:
  bool feasible(std::size_t i, int v) const;
  int lower_bound(std::size_t i) const;
  bool bump();
  bool descend();

  SkewShape shape_;
  int max_entry_;
  std::int64_t max_volume_;
  std::vector<int> left_;   // row-major index of west neighbour or -1
  std::vector<int> up_;     // row-major index of north neighbour or -1
  std::vector<int> cap_;    // largest value leaving room below in the column
  std::vector<int> values_;
  std::size_t filled_ = 0;
  std::int64_t volume_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Input range over SsytEnumerator, yielding Tableau values.
class SsytRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tableau;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(SsytEnumerator* e) : e_(e) { advance(); }

    Tableau operator*() const { return e_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) { return a.e_ == b.e_; }

   private:
    void advance() {
      if (e_ != nullptr && !e_->next()) e_ = nullptr;
    }
    SsytEnumerator* e_ = nullptr;
  };

  SsytRange(SkewShape shape, int max_entry) : e_(std::move(shape), max_entry) {}
  iterator begin() { return iterator(&e_); }
  iterator end() { return iterator(); }

 private:
  SsytEnumerator e_;
};

SsytRange enumerate_ssyt_bounded(const SkewShape& shape, int max_entry);

}  // namespace plinth
