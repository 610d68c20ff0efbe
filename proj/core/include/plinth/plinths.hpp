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
#include <vector>

#include "plinth/tableau.hpp"

namespace plinth {

/// A semistandard tableau `t` agrees with a standard tableau `q` of the same
/// cell set when t is weakly increasing along q's order 1, 2, ..., n and
/// strictly increasing across every descent of q.
///
/// Every semistandard tableau agrees with exactly one standard tableau
/// (see `order_of`); the smallest tableau agreeing with q is its plinth.
bool agrees(const Tableau& t, const StandardTableau& q);

/// The unique standard tableau that `t` agrees with: cells sorted by value,
/// equal values (which always form a horizontal strip) left to right.
/// Throws DomainError if t is not semistandard.
StandardTableau order_of(const Tableau& t);

/// Cellwise-minimal semistandard tableau agreeing with q. The value at the
/// cell of k is the number of descents of q smaller than k.
Tableau plinth_of(const StandardTableau& q);

/// |plinth_of(q)| = sum over descents d of (n - d).
std::int64_t plinth_volume(const StandardTableau& q);

struct PlinthTable {
  Tableau base;
  StandardTableau witness;
};

/// One plinth per standard filling of `shape`, in enumerate_syt order.
std::vector<PlinthTable> plinth_set(const SkewShape& shape);

}  // namespace plinth
