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

#include "plinth/shape.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "plinth/error.hpp"

namespace plinth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing: " +
                        to_string());
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int r = 1; r <= other.length(); ++r) {
    if (other.part(r) > part(r)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) {
  if (!outer.contains(inner)) {
    throw DomainError("inner partition " + inner.to_string() +
                      " is not contained in " + outer.to_string());
  }
  std::vector<int> lam(outer.parts().begin(), outer.parts().end());
  std::vector<int> mu(inner.parts().begin(), inner.parts().end());
  while (!lam.empty()) {
    const auto r = static_cast<int>(lam.size());
    if (lam.back() != inner.part(r)) break;
    lam.pop_back();
    if (static_cast<int>(mu.size()) == r) mu.pop_back();
  }
  outer_ = Partition(std::move(lam));
  inner_ = Partition(std::move(mu));
  size_ = outer_.size() - inner_.size();
}

std::optional<SkewShape> SkewShape::try_from_cells(std::span<const Cell> cells) {
  if (cells.empty()) return SkewShape();
  int max_row = 0;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) return std::nullopt;
    max_row = std::max(max_row, c.row);
  }
  std::vector<int> count(max_row + 1, 0);
  std::vector<int> first(max_row + 1, 0);
  std::vector<int> last(max_row + 1, 0);
  for (const Cell& c : cells) {
    if (count[c.row] == 0) {
      first[c.row] = last[c.row] = c.col;
    } else {
      first[c.row] = std::min(first[c.row], c.col);
      last[c.row] = std::max(last[c.row], c.col);
    }
    ++count[c.row];
  }
  std::vector<int> lam(max_row, 0);
  std::vector<int> mu(max_row, 0);
  int reach = 0;
  for (int r = max_row; r >= 1; --r) {
    if (count[r] > 0) {
      // A row of a skew diagram is one contiguous run without repeats.
      if (last[r] - first[r] + 1 != count[r]) return std::nullopt;
      reach = std::max(reach, last[r]);
      if (last[r] != reach) return std::nullopt;
    }
    lam[r - 1] = reach;
    mu[r - 1] = reach - count[r];
  }
  for (int r = 1; r < max_row; ++r) {
    if (mu[r] > mu[r - 1]) return std::nullopt;
  }
  return SkewShape(Partition(std::move(lam)), Partition(std::move(mu)));
}

SkewShape SkewShape::from_cells(std::span<const Cell> cells) {
  auto shape = try_from_cells(cells);
  if (!shape) throw DomainError("cell set is not a skew diagram");
  return *shape;
}

int SkewShape::index_of(Cell c) const {
  if (!contains(c)) return -1;
  int index = 0;
  for (int r = 1; r < c.row; ++r) index += row_length(r);
  return index + (c.col - row_begin(c.row));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 1; r <= rows(); ++r) {
    for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
  }
  return out;
}

bool SkewShape::same_cells(const SkewShape& other) const {
  if (size_ != other.size_) return false;
  const int n = std::max(rows(), other.rows());
  for (int r = 1; r <= n; ++r) {
    const bool empty_here = row_length(r) == 0;
    const bool empty_there = other.row_length(r) == 0;
    if (empty_here != empty_there) return false;
    if (empty_here) continue;
    if (row_begin(r) != other.row_begin(r) || row_end(r) != other.row_end(r)) {
      return false;
    }
  }
  return true;
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

SkewShape parse_shape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

bool shape_order_less(const SkewShape& a, const SkewShape& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.outer() != b.outer()) return a.outer() < b.outer();
  return a.inner() < b.inner();
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  // Depth-first over row lengths, each bounded by the previous one.
  auto extend = [&](auto&& self, int bound) -> void {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == max_rows) return;
    for (int v = 1; v <= bound; ++v) {
      parts.push_back(v);
      self(self, v);
      parts.pop_back();
    }
  };
  extend(extend, max_cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewShape> enumerate_skew_shapes(int max_cells, int max_rows,
                                             int max_cols) {
  if (max_cells < 1 || max_rows < 1 || max_cols < 1) {
    throw DomainError("shape enumeration bounds must be positive");
  }
  const auto box = partitions_in_box(max_rows, max_cols);
  std::vector<SkewShape> out;
  for (const Partition& outer : box) {
    for (const Partition& inner : box) {
      const int n = outer.size() - inner.size();
      if (n < 1 || n > max_cells || !outer.contains(inner)) continue;
      SkewShape shape(outer, inner);
      if (shape.outer() != outer) continue;  // trailing rows trimmed away
      if (shape.canonical() == shape) out.push_back(std::move(shape));
    }
  }
  std::sort(out.begin(), out.end(), shape_order_less);
  return out;
}

}  // namespace plinth
