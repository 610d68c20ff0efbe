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

#include "plinth/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plinth/bijection.hpp"
#include "plinth/error.hpp"
#include "plinth/jdt.hpp"
#include "plinth/plinths.hpp"
#include "plinth/qseries.hpp"
#include "plinth/schutzenberger.hpp"

namespace plinth {
namespace {

std::string join(std::span<const int> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string render(const StandardTableau& q) {
  return q.shape().to_string() + ": " + format_tableau_inline(q.tableau());
}

std::string render(const Permutation& w) {
  return "w = " + join(w.images());
}

// Calls fn on every filling of `shape`, or on a seeded sample once the shape
// passes the enumeration limit. Returns true when sampled.
template <typename Fn>
bool for_each_syt(const SkewShape& shape, std::uint64_t seed, Fn&& fn) {
  if (shape.size() <= enumeration_cell_limit()) {
    for (const StandardTableau& q : enumerate_syt(shape)) fn(q);
    return false;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kSamplesPerShape; ++i) fn(random_syt(shape, rng));
  return true;
}

std::vector<SkewShape> straight_shapes(int max_cells) {
  std::vector<SkewShape> out;
  if (max_cells < 1) return out;
  for (const Partition& p : partitions_in_box(max_cells, max_cells)) {
    if (!p.empty() && p.size() <= max_cells) out.emplace_back(p);
  }
  std::sort(out.begin(), out.end(), shape_order_less);
  return out;
}

VerificationReport start(std::string check, std::string universe) {
  VerificationReport r;
  r.check = std::move(check);
  r.universe = std::move(universe);
  return r;
}

}  // namespace

std::vector<SkewShape> Universe::shapes() const {
  if (max_cells < 1) return {};
  return enumerate_skew_shapes(max_cells, max_rows, max_cols);
}

std::string Universe::describe() const {
  return "skew shapes with at most " + std::to_string(max_cells) + " cells in a " +
         std::to_string(max_rows) + "x" + std::to_string(max_cols) + " box";
}

void VerificationReport::record(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxRecorded) failures.push_back(std::move(f));
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  out << (passed() ? "[PASS] " : "[FAIL] ") << check << ": " << cases << " cases, "
      << failure_count << (failure_count == 1 ? " failure" : " failures") << " (" << universe
      << (sampled ? "; sampled beyond the enumeration limit" : "") << ")";
  for (const Failure& f : failures) {
    out << "\n  input:    " << f.input << "\n  expected: " << f.expected
        << "\n  actual:   " << f.actual;
  }
  return out.str();
}

StandardTableau random_syt(const SkewShape& shape, std::mt19937_64& rng) {
  const std::vector<Cell> cells = shape.cells();
  std::vector<bool> placed(cells.size(), false);
  std::vector<Cell> positions;
  positions.reserve(cells.size());
  const auto ready = [&](Cell c) {
    for (const Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row, c.col - 1}}) {
      const int i = shape.index_of(nb);
      if (i >= 0 && !placed[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  };
  std::vector<std::size_t> addable;
  while (positions.size() < cells.size()) {
    addable.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!placed[i] && ready(cells[i])) addable.push_back(i);
    }
    const std::size_t pick = addable[uniform_index(rng, addable.size())];
    placed[pick] = true;
    positions.push_back(cells[pick]);
  }
  return StandardTableau::from_positions(shape, positions);
}

VerificationReport check_main_theorem(const Universe& u, std::uint64_t seed) {
  VerificationReport r = start("main-theorem", u.describe());
  for (const SkewShape& shape : u.shapes()) {
    r.sampled |= for_each_syt(shape, seed, [&](const StandardTableau& q) {
      ++r.cases;
      const std::int64_t volume = plinth_volume(q);
      const StandardTableau image = skew_evacuate(q);
      const std::int64_t m = maj(image);
      if (volume != m) {
        r.record({render(q), "maj(S~ch(Q)) = |p(Q)| = " + std::to_string(volume),
                  "maj(S~ch(Q)) = " + std::to_string(m) + " with S~ch(Q) = " +
                      format_tableau_inline(image.tableau())});
      }
    });
  }
  return r;
}

VerificationReport check_equidistribution(const Universe& u) {
  VerificationReport r = start("equidistribution", u.describe());
  const int limit = enumeration_cell_limit();
  for (const SkewShape& shape : u.shapes()) {
    if (shape.size() > limit) {
      r.sampled = true;
      continue;
    }
    ++r.cases;
    const QSeries plinths = plinth_polynomial(shape);
    const QSeries majors = maj_polynomial(shape);
    if (plinths != majors) {
      r.record({shape.to_string(), "sum q^maj = " + majors.to_string(),
                "sum q^|p| = " + plinths.to_string()});
    }
  }
  return r;
}

VerificationReport check_genfun_identity(const Universe& u, int trunc) {
  VerificationReport r = start("genfun", u.describe() + ", through q^" + std::to_string(trunc));
  for (const SkewShape& shape : u.shapes()) {
    ++r.cases;
    const QSeries a = genfun_plinth(shape, trunc);
    const QSeries b = genfun_stanley(shape, trunc);
    const QSeries c = genfun_bruteforce(shape, trunc);
    if (a != c || b != c) {
      r.record({shape.to_string(), "bruteforce " + c.to_string(),
                "plinth " + a.to_string() + "; stanley " + b.to_string()});
    }
  }
  return r;
}

VerificationReport check_descent_invariance(const Universe& u, std::uint64_t seed) {
  VerificationReport r = start("descents", u.describe() + ", every slide state");
  for (const SkewShape& shape : u.shapes()) {
    r.sampled |= for_each_syt(shape, seed, [&](const StandardTableau& q) {
      const std::vector<int> des = descent_set(q);
      for (const SlideDirection dir : {SlideDirection::inward, SlideDirection::outward}) {
        for (const Cell c : slide_cells(q, dir)) {
          ++r.cases;
          for (const HoledTableau& frame : slide_frames(q, c, dir)) {
            const std::vector<int> now = descent_set(frame.positions);
            if (now != des) {
              r.record({render(q) + " sliding into (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ")",
                        "Des = " + join(des),
                        "Des = " + join(now) + " at\n" + format_holed(frame)});
              break;
            }
          }
        }
      }
    });
  }
  return r;
}

VerificationReport check_involutions(int max_straight, const Universe& skew, int max_inner,
                                     std::uint64_t seed) {
  VerificationReport r = start(
      "involutions", "straight shapes with at most " + std::to_string(max_straight) +
                         " cells; " + skew.describe() + " and inner size at most " +
                         std::to_string(max_inner));
  for (const SkewShape& shape : straight_shapes(max_straight)) {
    r.sampled |= for_each_syt(shape, seed, [&](const StandardTableau& q) {
      ++r.cases;
      const StandardTableau back = evacuate(evacuate(q));
      if (back != q) {
        r.record({render(q), "Sch(Sch(Q)) = Q", format_tableau_inline(back.tableau())});
      }
    });
  }
  for (const SkewShape& shape : skew.shapes()) {
    if (shape.is_straight() || shape.inner().size() > max_inner) continue;
    const std::vector<StandardTableau> auxes = enumerate_syt(SkewShape(shape.inner()));
    r.sampled |= for_each_syt(shape, seed, [&](const StandardTableau& q) {
      ++r.cases;
      const StandardTableau image = skew_evacuate(q);
      if (image.shape() != q.shape()) {
        r.record({render(q), "shape " + q.shape().to_string(),
                  "shape " + image.shape().to_string()});
        return;
      }
      const StandardTableau back = skew_evacuate(image);
      if (back != q) {
        r.record({render(q), "S~ch(S~ch(Q)) = Q", format_tableau_inline(back.tableau())});
      }
      for (const StandardTableau& aux : auxes) {
        const StandardTableau other = skew_evacuate(q, aux);
        if (other != image) {
          r.record({render(q) + " with auxiliary " + format_tableau_inline(aux.tableau()),
                    format_tableau_inline(image.tableau()),
                    format_tableau_inline(other.tableau())});
        }
      }
    });
  }
  return r;
}

VerificationReport check_rsk_facts(int max_n, int max_straight) {
  VerificationReport r = start("rsk", "all permutations of size at most " +
                                          std::to_string(max_n) +
                                          "; straight shapes with at most " +
                                          std::to_string(max_straight) + " cells");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
      const Permutation w(images);
      const Permutation wp = reverse_complement(w);
      const StandardTableau q = rs_insert(w).recording;
      const std::vector<int> dw = descent_set(w);
      ++r.cases;
      if (descent_set(q) != dw) {
        r.record({render(w), "Des(Q) = " + join(dw), "Des(Q) = " + join(descent_set(q))});
      }
      ++r.cases;
      const StandardTableau qp = rs_insert(wp).recording;
      const StandardTableau sch = evacuate(q);
      if (sch != qp) {
        r.record({render(w), "Sch(Q) = Q(w') = " + format_tableau_inline(qp.tableau()),
                  format_tableau_inline(sch.tableau())});
      }
      ++r.cases;
      std::vector<int> mirrored;
      for (int i : dw) mirrored.push_back(n - i);
      std::sort(mirrored.begin(), mirrored.end());
      if (descent_set(wp) != mirrored) {
        r.record({render(w), "Des(w') = " + join(mirrored), "Des(w') = " + join(descent_set(wp))});
      }
    } while (std::next_permutation(images.begin(), images.end()));
  }
  for (const SkewShape& shape : straight_shapes(max_straight)) {
    for_each_syt(shape, 1, [&](const StandardTableau& q) {
      ++r.cases;
      const std::int64_t lhs = maj(q) + maj(evacuate(q));
      const std::int64_t rhs =
          static_cast<std::int64_t>(q.size()) * static_cast<std::int64_t>(descent_set(q).size());
      if (lhs != rhs) {
        r.record({render(q), "n*l = " + std::to_string(rhs),
                  "maj(Q) + maj(Sch(Q)) = " + std::to_string(lhs)});
      }
    });
  }
  return r;
}

VerificationReport check_rectification_uniqueness(const Universe& u, int orders,
                                                  std::uint64_t seed) {
  VerificationReport r =
      start("rectify", u.describe() + ", " + std::to_string(orders) + " random orders each");
  std::mt19937_64 rng(seed);
  for (const SkewShape& shape : u.shapes()) {
    if (shape.is_straight()) continue;
    r.sampled |= for_each_syt(shape, seed, [&](const StandardTableau& q) {
      ++r.cases;
      const StandardTableau expected = rectify(q);
      for (int i = 0; i < orders; ++i) {
        const StandardTableau got = rectify(q, rng);
        if (got != expected) {
          r.record({render(q), format_tableau_inline(expected.tableau()),
                    format_tableau_inline(got.tableau())});
          break;
        }
      }
    });
  }
  return r;
}

VerificationReport check_bijection_roundtrip(const Universe& u, int max_entry) {
  VerificationReport r = start("bijection", u.describe() + ", entries at most " +
                                                std::to_string(max_entry));
  for (const SkewShape& shape : u.shapes()) {
    for (const Tableau& t : enumerate_ssyt_bounded(shape, max_entry)) {
      ++r.cases;
      const SsytDecomposition d = decompose(t);
      const StandardTableau q = order_of(t);
      const Tableau back = recompose(q, d.diagram);
      if (back != t || d.plinth != plinth_of(q) || d.plinth.volume() + d.diagram.sum() != t.volume()) {
        r.record({shape.to_string() + ": " + format_tableau_inline(t),
                  format_tableau_inline(t),
                  format_tableau_inline(back) + " via plinth " + format_tableau_inline(d.plinth) +
                      " and diagram " + d.diagram.to_string()});
      }
    }
    // Diagrams: weakly increasing sequences of n values in [0, max_entry].
    const int n = shape.size();
    const std::vector<StandardTableau> fillings = enumerate_syt(shape);
    std::vector<int> y(static_cast<std::size_t>(n), 0);
    while (true) {
      const ReadingPartition diagram(y);
      for (const StandardTableau& q : fillings) {
        ++r.cases;
        const Tableau t = recompose(q, diagram);
        const SsytDecomposition d = is_ssyt(t) ? decompose(t) : SsytDecomposition{};
        if (!is_ssyt(t) || d.plinth != plinth_of(q) || !(d.diagram == diagram) ||
            t.volume() != plinth_volume(q) + diagram.sum()) {
          r.record({render(q) + " with diagram " + diagram.to_string(),
                    format_tableau_inline(plinth_of(q)) + " and " + diagram.to_string(),
                    format_tableau_inline(t)});
        }
      }
      int i = n - 1;
      while (i >= 0 && y[static_cast<std::size_t>(i)] == max_entry) --i;
      if (i < 0) break;
      const int v = y[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) y[static_cast<std::size_t>(j)] = v;
    }
  }
  return r;
}

VerificationReport run_check(const std::string& name, const VerifyOptions& opts) {
  const auto universe = [&](int cap) {
    return Universe{std::min(opts.max_cells, cap), opts.max_rows, opts.max_cols};
  };
  const int all = opts.max_cells;
  if (name == "main-theorem") return check_main_theorem(universe(all), opts.seed);
  if (name == "equidistribution") return check_equidistribution(universe(all));
  if (name == "genfun") return check_genfun_identity(universe(6), opts.trunc);
  if (name == "descents") return check_descent_invariance(universe(6), opts.seed);
  if (name == "involutions") return check_involutions(all, universe(6), 3, opts.seed);
  if (name == "rsk") return check_rsk_facts(std::min(all, 6), all);
  if (name == "rectify") return check_rectification_uniqueness(universe(7), 50, opts.seed);
  if (name == "bijection") return check_bijection_roundtrip(universe(5), 3);
  throw DomainError("unknown check '" + name + "'");
}

std::vector<VerificationReport> run_all(const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (const char* name : kCheckNames) out.push_back(run_check(name, opts));
  return out;
}

}  // namespace plinth
