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

#include "plinth/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "plinth/error.hpp"

namespace plinth {

Tableau::Tableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size()) {
    throw DomainError("tableau has " + std::to_string(entries_.size()) +
                      " entries but shape " + shape_.to_string() + " has " +
                      std::to_string(shape_.size()) + " cells");
  }
}

Tableau Tableau::filled(SkewShape shape, int value) {
  const auto n = static_cast<std::size_t>(shape.size());
  return Tableau(std::move(shape), std::vector<int>(n, value));
}

int Tableau::at(Cell c) const {
  const int i = shape_.index_of(c);
  if (i < 0) throw DomainError("cell outside tableau shape");
  return entries_[static_cast<std::size_t>(i)];
}

void Tableau::set(Cell c, int value) {
  const int i = shape_.index_of(c);
  if (i < 0) throw DomainError("cell outside tableau shape");
  entries_[static_cast<std::size_t>(i)] = value;
}

std::int64_t Tableau::volume() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

namespace {

// Visits horizontally and vertically adjacent pairs inside the shape, in
// row-major order of the first cell.
template <typename F>
bool all_adjacent_pairs(const Tableau& t, F&& ok) {
  const SkewShape& s = t.shape();
  auto values = t.entries();
  int index = 0;
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c, ++index) {
      const int here = values[static_cast<std::size_t>(index)];
      if (c < s.row_end(r) && !ok(here, values[static_cast<std::size_t>(index + 1)], false)) {
        return false;
      }
      const int below = s.index_of({r + 1, c});
      if (below >= 0 && !ok(here, values[static_cast<std::size_t>(below)], true)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_ssyt(const Tableau& t) {
  for (int v : t.entries()) {
    if (v < 0) return false;
  }
  return all_adjacent_pairs(t, [](int a, int b, bool vertical) {
    return vertical ? a < b : a <= b;
  });
}

bool is_syt(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : t.entries()) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return all_adjacent_pairs(t, [](int a, int b, bool) { return a < b; });
}

StandardTableau::StandardTableau(Tableau t) : tableau_(std::move(t)) {
  if (!is_syt(tableau_)) {
    throw DomainError("not a standard Young tableau:\n" + format_tableau(tableau_));
  }
  positions_.resize(static_cast<std::size_t>(tableau_.size()));
  const auto cells = tableau_.shape().cells();
  const auto values = tableau_.entries();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    positions_[static_cast<std::size_t>(values[i] - 1)] = cells[i];
  }
}

StandardTableau StandardTableau::from_positions(std::span<const Cell> positions) {
  return from_positions(SkewShape::from_cells(positions), positions);
}

StandardTableau StandardTableau::from_positions(SkewShape shape,
                                                std::span<const Cell> positions) {
  if (static_cast<int>(positions.size()) != shape.size()) {
    throw DomainError("position list does not cover the shape");
  }
  std::vector<int> entries(positions.size(), 0);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const int i = shape.index_of(positions[k]);
    if (i < 0 || entries[static_cast<std::size_t>(i)] != 0) {
      throw DomainError("positions are not a bijection onto the shape");
    }
    entries[static_cast<std::size_t>(i)] = static_cast<int>(k) + 1;
  }
  return StandardTableau(Tableau(std::move(shape), std::move(entries)));
}

ReadingPartition::ReadingPartition(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0) throw DomainError("reading partition has a negative part");
    if (k > 0 && values_[k] < values_[k - 1]) {
      throw DomainError("reading partition must be weakly increasing");
    }
  }
}

std::int64_t ReadingPartition::sum() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::string ReadingPartition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values_[k]);
  }
  return out;
}

ReadingPartition parse_reading_partition(std::string_view text) {
  std::vector<int> values;
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("malformed diagram '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ReadingPartition(std::move(values));
}

Cell position_of(const StandardTableau& q, int k) {
  if (k < 1 || k > q.size()) {
    throw DomainError("entry " + std::to_string(k) + " outside 1.." +
                      std::to_string(q.size()));
  }
  return q.position(k);
}

std::vector<int> descent_set(std::span<const Cell> positions) {
  std::vector<int> out;
  for (std::size_t k = 1; k < positions.size(); ++k) {
    if (positions[k].row > positions[k - 1].row) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> descent_set(const StandardTableau& q) { return descent_set(q.positions()); }

std::int64_t maj(std::span<const int> descents) {
  return std::accumulate(descents.begin(), descents.end(), std::int64_t{0});
}

std::int64_t maj(const StandardTableau& q) {
  std::int64_t total = 0;
  const auto pos = q.positions();
  for (std::size_t k = 1; k < pos.size(); ++k) {
    if (pos[k].row > pos[k - 1].row) total += static_cast<std::int64_t>(k);
  }
  return total;
}

ReadingPartition reading_partition(const Tableau& t) {
  std::vector<int> values(t.entries().begin(), t.entries().end());
  std::sort(values.begin(), values.end());
  return ReadingPartition(std::move(values));
}

namespace {

std::vector<std::vector<std::string_view>> split_rows(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n/", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    rows.push_back(std::move(tokens));
    start = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

int parse_entry(std::string_view token) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw DomainError("malformed tableau entry '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

Tableau parse_tableau(std::string_view text, const std::optional<SkewShape>& shape) {
  const auto rows = split_rows(text);
  std::vector<int> entries;
  if (shape) {
    if (static_cast<int>(rows.size()) != shape->rows()) {
      throw DomainError("tableau has " + std::to_string(rows.size()) +
                        " rows but shape " + shape->to_string() + " has " +
                        std::to_string(shape->rows()));
    }
    for (int r = 1; r <= shape->rows(); ++r) {
      const auto& tokens = rows[static_cast<std::size_t>(r - 1)];
      std::size_t skip = 0;
      if (static_cast<int>(tokens.size()) == shape->row_end(r)) {
        skip = static_cast<std::size_t>(shape->inner().part(r));
        for (std::size_t i = 0; i < skip; ++i) {
          if (tokens[i] != ".") throw DomainError("expected '.' for an inner cell");
        }
      } else if (static_cast<int>(tokens.size()) != shape->row_length(r)) {
        throw DomainError("row " + std::to_string(r) + " does not match shape " +
                          shape->to_string());
      }
      for (std::size_t i = skip; i < tokens.size(); ++i) entries.push_back(parse_entry(tokens[i]));
    }
    return Tableau(*shape, std::move(entries));
  }
  std::vector<int> outer;
  std::vector<int> inner;
  for (const auto& tokens : rows) {
    std::size_t dots = 0;
    while (dots < tokens.size() && tokens[dots] == ".") ++dots;
    for (std::size_t i = dots; i < tokens.size(); ++i) {
      if (tokens[i] == ".") throw DomainError("'.' may only lead a row");
      entries.push_back(parse_entry(tokens[i]));
    }
    outer.push_back(static_cast<int>(tokens.size()));
    inner.push_back(static_cast<int>(dots));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return Tableau(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))),
                 std::move(entries));
}

StandardTableau parse_syt(std::string_view text, const std::optional<SkewShape>& shape) {
  return StandardTableau(parse_tableau(text, shape));
}

namespace {

std::string format_rows(const Tableau& t, std::string_view separator) {
  const SkewShape& s = t.shape();
  std::string out;
  int index = 0;
  for (int r = 1; r <= s.rows(); ++r) {
    if (r > 1) out += separator;
    for (int c = 1; c <= s.row_end(r); ++c) {
      if (c > 1) out += ' ';
      if (c < s.row_begin(r)) {
        out += '.';
      } else {
        out += std::to_string(t.entries()[static_cast<std::size_t>(index++)]);
      }
    }
  }
  return out;
}

}  // namespace

std::string format_tableau(const Tableau& t) { return format_rows(t, "\n"); }
std::string format_tableau(const StandardTableau& q) { return format_tableau(q.tableau()); }
std::string format_tableau_inline(const Tableau& t) { return format_rows(t, " / "); }

int enumeration_cell_limit() {
  constexpr int kDefault = 9;
  const char* env = std::getenv("TABLEAUX_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  int v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw DomainError("TABLEAUX_BUDGET must be a non-negative integer");
  }
  return v;
}

namespace {

// Row-major neighbour indices, -1 when the neighbour is outside the shape.
struct Neighbours {
  std::vector<int> west;
  std::vector<int> north;
};

Neighbours neighbours_of(const SkewShape& shape) {
  Neighbours nb;
  for (const Cell& c : shape.cells()) {
    nb.west.push_back(shape.index_of({c.row, c.col - 1}));
    nb.north.push_back(shape.index_of({c.row - 1, c.col}));
  }
  return nb;
}

void check_limit(const SkewShape& shape) {
  if (shape.size() > enumeration_cell_limit()) {
    throw LimitExceeded("shape " + shape.to_string() + " has " +
                        std::to_string(shape.size()) +
                        " cells, above the enumeration limit of " +
                        std::to_string(enumeration_cell_limit()));
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape) {
  check_limit(shape);
  const int n = shape.size();
  const Neighbours nb = neighbours_of(shape);
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> found;
  // Place 1, 2, ... in turn into any cell whose west and north neighbours
  // are already filled.
  auto place = [&](auto&& self, int k) -> void {
    if (k > n) {
      found.push_back(entries);
      return;
    }
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (entries[u] != 0) continue;
      if (nb.west[u] >= 0 && entries[static_cast<std::size_t>(nb.west[u])] == 0) continue;
      if (nb.north[u] >= 0 && entries[static_cast<std::size_t>(nb.north[u])] == 0) continue;
      entries[u] = k;
      self(self, k + 1);
      entries[u] = 0;
    }
  };
  place(place, 1);
  std::sort(found.begin(), found.end());
  std::vector<StandardTableau> out;
  out.reserve(found.size());
  for (auto& e : found) out.emplace_back(Tableau(shape, std::move(e)));
  return out;
}

std::int64_t count_syt(const SkewShape& shape) {
  const int n = shape.size();
  if (n > 62) throw LimitExceeded("shape too large to count by subsets");
  const Neighbours nb = neighbours_of(shape);
  std::unordered_map<std::uint64_t, std::int64_t> memo;
  auto count = [&](auto&& self, std::uint64_t filled) -> std::int64_t {
    if (filled == (1ULL << n) - 1) return 1;
    if (auto it = memo.find(filled); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (filled >> i & 1ULL) continue;
      if (nb.west[u] >= 0 && !(filled >> nb.west[u] & 1ULL)) continue;
      if (nb.north[u] >= 0 && !(filled >> nb.north[u] & 1ULL)) continue;
      total += self(self, filled | (1ULL << i));
    }
    memo.emplace(filled, total);
    return total;
  };
  return count(count, 0);
}

SsytEnumerator::SsytEnumerator(SkewShape shape, int max_entry,
                               std::optional<std::int64_t> max_volume)
    : shape_(std::move(shape)),
      max_entry_(max_entry),
      max_volume_(max_volume.value_or(std::numeric_limits<std::int64_t>::max())) {
  if (max_entry < 0) throw DomainError("max_entry must be non-negative");
  const auto cells = shape_.cells();
  for (const Cell& c : cells) {
    left_.push_back(shape_.index_of({c.row, c.col - 1}));
    up_.push_back(shape_.index_of({c.row - 1, c.col}));
    int below = 0;
    while (shape_.contains({c.row + below + 1, c.col})) ++below;
    cap_.push_back(max_entry_ - below);
  }
  values_.assign(cells.size(), 0);
}

int SsytEnumerator::lower_bound(std::size_t i) const {
  int lo = 0;
  if (left_[i] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(left_[i])]);
  if (up_[i] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(up_[i])] + 1);
  return lo;
}

bool SsytEnumerator::feasible(std::size_t i, int v) const {
  return v <= cap_[i] && volume_ + v <= max_volume_;
}

// Increments the deepest assigned cell that still has room, discarding
// everything after it.
bool SsytEnumerator::bump() {
  while (filled_ > 0) {
    const std::size_t i = filled_ - 1;
    volume_ -= values_[i];
    const int v = values_[i] + 1;
    if (feasible(i, v)) {
      values_[i] = v;
      volume_ += v;
      return true;
    }
    --filled_;
  }
  return false;
}

// Completes the assignment with the smallest admissible values.
bool SsytEnumerator::descend() {
  while (filled_ < values_.size()) {
    const int v = lower_bound(filled_);
    if (feasible(filled_, v)) {
      values_[filled_] = v;
      volume_ += v;
      ++filled_;
    } else if (!bump()) {
      return false;
    }
  }
  return true;
}

bool SsytEnumerator::next() {
  if (done_) return false;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = descend();
  } else {
    ok = bump() && descend();
  }
  if (!ok) done_ = true;
  return ok;
}

SsytRange enumerate_ssyt_bounded(const SkewShape& shape, int max_entry) {
  return SsytRange(shape, max_entry);
}

}  // namespace plinth
