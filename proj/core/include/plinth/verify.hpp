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
#include <random>
#include <string>
#include <vector>

#include "plinth/tableau.hpp"

namespace plinth {

/// Skew shapes with at most max_cells cells inside a max_rows x max_cols box.
struct Universe {
  int max_cells = 0;
  int max_rows = 5;
  int max_cols = 5;

  std::vector<SkewShape> shapes() const;
  std::string describe() const;
};

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one check. Cases are visited smallest shape first, then in
/// enumeration order, so the first recorded failure is the minimal one.
struct VerificationReport {
  static constexpr std::size_t kMaxRecorded = 10;

  std::string check;
  std::string universe;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;
  /// True when some shape exceeded the enumeration limit and was sampled.
  bool sampled = false;

  bool passed() const { return failure_count == 0; }
  void record(Failure f);
  /// One status line, followed by one indented block per recorded failure.
  std::string render() const;
};

/// A random standard filling built by repeatedly placing the next entry in
/// a uniformly chosen addable cell. Not uniform over fillings.
StandardTableau random_syt(const SkewShape& shape, std::mt19937_64& rng);

/// Tableaux sampled per shape once a shape passes the enumeration limit.
inline constexpr int kSamplesPerShape = 25;

/// |p(Q)| = maj(S~ch(Q)) for every filling of every shape in `u`.
VerificationReport check_main_theorem(const Universe& u, std::uint64_t seed = 1);

/// Per shape, the multiset of plinth volumes equals the multiset of major
/// indices. Shapes above the enumeration limit are skipped (and flagged).
VerificationReport check_equidistribution(const Universe& u);

/// plinth, Stanley and brute-force generating functions agree through q^trunc.
VerificationReport check_genfun_identity(const Universe& u, int trunc);

/// Every state of every legal single slide, in both directions, has the
/// descent set of the starting tableau.
VerificationReport check_descent_invariance(const Universe& u, std::uint64_t seed = 1);

/// Sch(Sch(Q)) = Q for every straight filling with at most max_straight
/// cells; on the skew shapes of `skew` whose inner partition has at most
/// max_inner cells, S~ch is a shape-preserving involution whose value does
/// not depend on the auxiliary filling.
VerificationReport check_involutions(int max_straight, const Universe& skew, int max_inner = 3,
                                     std::uint64_t seed = 1);

/// Over every w in S_n, n <= max_n: Des(Q(w)) = Des(w), Sch(Q(w)) = Q(w'),
/// and i in Des(w) iff n - i in Des(w'). Over straight fillings with at most
/// max_straight cells: maj(Q) + maj(Sch(Q)) = n * |Des(Q)|.
VerificationReport check_rsk_facts(int max_n, int max_straight);

/// `orders` random rectification orders per skew filling all agree with the
/// deterministic rectification.
VerificationReport check_rectification_uniqueness(const Universe& u, int orders,
                                                  std::uint64_t seed);

/// decompose and recompose are mutually inverse and volume preserving over
/// every semistandard filling with entries at most max_entry, and every
/// (filling, diagram) pair with diagram parts at most max_entry.
VerificationReport check_bijection_roundtrip(const Universe& u, int max_entry);

/// Settings for `run_all`. Each check caps the cell count at the size where
/// its exhaustive sweep stays cheap.
struct VerifyOptions {
  int max_cells = 8;
  int trunc = 12;
  std::uint64_t seed = 1;
  int max_rows = 5;
  int max_cols = 5;
};

inline constexpr const char* kCheckNames[] = {
    "main-theorem", "equidistribution", "genfun",    "descents",
    "involutions",  "rsk",              "rectify",   "bijection",
};

/// Runs one named check (see kCheckNames) under `opts`. Throws DomainError
/// on an unknown name.
VerificationReport run_check(const std::string& name, const VerifyOptions& opts);
std::vector<VerificationReport> run_all(const VerifyOptions& opts);

}  // namespace plinth
