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

#include "plinth/bijection.hpp"

#include <stdexcept>

#include "plinth/error.hpp"
#include "plinth/plinths.hpp"

namespace plinth {

ParticleConfig::ParticleConfig(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw DomainError("particle counts must be non-negative");
  }
}

std::int64_t ParticleConfig::weight() const {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    total += static_cast<std::int64_t>(k + 1) * counts_[k];
  }
  return total;
}

ReadingPartition b0_forward(const ParticleConfig& config) {
  const auto xi = config.counts();
  const std::size_t n = xi.size();
  std::vector<int> y(n, 0);
  int running = 0;
  for (std::size_t k = 0; k < n; ++k) {
    running += xi[n - 1 - k];
    y[k] = running;
  }
  return ReadingPartition(std::move(y));
}

ParticleConfig b0_inverse(const ReadingPartition& y) {
  const auto values = y.values();
  const std::size_t n = values.size();
  std::vector<int> xi(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    xi[n - 1 - k] = values[k] - (k == 0 ? 0 : values[k - 1]);
  }
  return ParticleConfig(std::move(xi));
}

SsytDecomposition decompose(const Tableau& t) {
  if (!is_ssyt(t)) throw DomainError("decompose needs a semistandard tableau");
  const StandardTableau q = order_of(t);
  Tableau base = plinth_of(q);
  std::vector<int> residue(static_cast<std::size_t>(t.size()));
  for (std::size_t i = 0; i < residue.size(); ++i) {
    residue[i] = t.entries()[i] - base.entries()[i];
    if (residue[i] < 0) {
      throw std::logic_error("tableau lies below the plinth of its own order");
    }
  }
  Tableau difference(t.shape(), std::move(residue));
  return {std::move(base), reading_partition(difference)};
}

Tableau recompose(const StandardTableau& witness, const ReadingPartition& y) {
  if (y.size() != witness.size()) {
    throw DomainError("diagram has " + std::to_string(y.size()) + " parts, tableau has " +
                      std::to_string(witness.size()) + " cells");
  }
  Tableau out = plinth_of(witness);
  for (int k = 1; k <= witness.size(); ++k) {
    const Cell c = witness.position(k);
    out.set(c, out.at(c) + y[k - 1]);
  }
  return out;
}

}  // namespace plinth
