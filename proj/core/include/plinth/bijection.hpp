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
#include <span>
#include <vector>

#include "plinth/tableau.hpp"

namespace plinth {

/// Occupation numbers of n independent boxes; box k carries weight k.
class ParticleConfig {
 public:
  ParticleConfig() = default;
  explicit ParticleConfig(std::vector<int> counts);

  std::span<const int> counts() const { return counts_; }
  int size() const { return static_cast<int>(counts_.size()); }

  /// Sum of k * counts[k-1].
  std::int64_t weight() const;

  friend bool operator==(const ParticleConfig&, const ParticleConfig&) = default;

 private:
  std::vector<int> counts_;
};

/// y_1 = counts_n and y_k - y_{k-1} = counts_{n-k+1}.
ReadingPartition b0_forward(const ParticleConfig& config);
ParticleConfig b0_inverse(const ReadingPartition& y);

/// A semistandard tableau split into its plinth and the sorted residue.
struct SsytDecomposition {
  Tableau plinth;
  ReadingPartition diagram;
};

SsytDecomposition decompose(const Tableau& t);

/// Inverse of `decompose`: adds y_k to the plinth of `witness` at the cell
/// holding k. The witness stands in for the plinth because the sum needs
/// its order; `order_of(plinth)` recovers it.
Tableau recompose(const StandardTableau& witness, const ReadingPartition& y);

}  // namespace plinth
