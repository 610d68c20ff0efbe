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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plinth/tableau.hpp"

namespace plinth {

/// Jeu de taquin on standard tableaux.
///
/// Slides are defined on cell sets, so the result of a slide is reported on
/// the minimal representative of its cells (see SkewShape::from_cells).
///
/// An inward slide starts at a vacant cell c whose west and north
/// neighbours are outside the tableau and which keeps the cells a skew
/// diagram. The smaller of the east and south entries moves into the
/// vacancy until the vacancy has neither. An outward slide mirrors this:
/// the larger of the west and north entries moves, starting from a vacant
/// cell with no east or south neighbour.
enum class SlideDirection { inward, outward };

/// An intermediate slide state: entry k sits at positions[k - 1], and at
/// most one cell is vacant.
struct HoledTableau {
  std::vector<Cell> positions;
  std::optional<Cell> hole;
};

/// Renders a holed state row by row: `*` marks the vacancy and `.` any
/// absent cell left of an entry.
std::string format_holed(const HoledTableau& h);

/// Legal slide cells adjacent to q in the given direction, row-major.
std::vector<Cell> slide_cells(const StandardTableau& q, SlideDirection dir);
bool is_slide_cell(const StandardTableau& q, Cell c, SlideDirection dir);

/// One slide into `c`. Throws DomainError unless `c` is an adjacent legal
/// slide cell.
StandardTableau slide_into(const StandardTableau& q, Cell c, SlideDirection dir);

/// Every state of one slide: the vacancy at `c`, the vacancy after each
/// move but the last, and the final tableau without a vacancy.
std::vector<HoledTableau> slide_frames(const StandardTableau& q, Cell c,
                                       SlideDirection dir);

/// The unique straight-shape tableau jdt-equivalent to q. The deterministic
/// overload always slides into the topmost inner corner; the randomized one
/// picks an inner corner uniformly.
StandardTableau rectify(const StandardTableau& q);
StandardTableau rectify(const StandardTableau& q, std::mt19937_64& rng);

struct RectificationStep {
  Cell cell;
  std::vector<HoledTableau> frames;
};

/// The slides performed by the deterministic `rectify`, frame by frame.
std::vector<RectificationStep> rectification_trace(const StandardTableau& q);

/// Why the cells of `ext` fail to extend those of `base` (disjoint, union a
/// skew diagram, no cell of ext weakly north-west of a cell of base), or
/// nullopt when they do.
std::optional<std::string> extension_failure(const SkewShape& base, const SkewShape& ext);
inline bool extends(const SkewShape& ext, const SkewShape& base) {
  return !extension_failure(base, ext).has_value();
}

struct VacatedSlide {
  StandardTableau result;
  StandardTableau vacating;
};

/// Slides `tableau` through the cells of `order`.
///
/// outward: `order` extends `tableau`; slides into order's cells 1, 2, ...
///   and returns the slid tableau with its vacating tableau to the NW.
/// inward: `tableau` extends `order`; slides into order's cells from the
///   largest label down and returns the result with the vacating tableau
///   to the SE.
/// The cell vacated by the slide into order's cell k is labelled k.
VacatedSlide slide_sequence_with_vacating(const StandardTableau& tableau,
                                          const StandardTableau& order,
                                          SlideDirection dir);

/// Decides dual equivalence of two tableaux on the same cells: both must
/// rectify to the same straight shape, and `trials` random slide sequences
/// (seeded) must never separate their shapes.
bool dual_equivalent(const StandardTableau& p, const StandardTableau& q, int trials,
                     std::uint64_t seed);

/// Uniform index in [0, n) using the raw engine output, so sequences do not
/// depend on the standard library's distribution implementation.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace plinth
