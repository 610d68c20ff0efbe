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

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <vector>

#include "plinth/shape.hpp"

namespace plinth {

using Integer = boost::multiprecision::cpp_int;

/// A power series in q known through q^trunc, with exact integer
/// coefficients. Series with different truncation orders never mix.
class QSeries {
 public:
  QSeries() = default;
  /// The zero series through q^trunc.
  explicit QSeries(int trunc);
  /// Coefficients beyond q^trunc are dropped; missing ones are zero.
  QSeries(std::vector<Integer> coeffs, int trunc);

  static QSeries one(int trunc);
  /// Sum of q^e over `exponents`, truncated.
  static QSeries from_exponents(std::span<const std::int64_t> exponents, int trunc);

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const Integer> coefficients() const { return coeffs_; }

  /// "1 + q + 2*q^2"; "0" for the zero series.
  std::string to_string() const;
  /// "[1,1,2]"
  std::string to_json() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Cauchy product through the common truncation order. Throws DomainError
/// when the orders differ.
QSeries series_mul(const QSeries& a, const QSeries& b);

/// prod_{k=1..n} 1/(1 - q^k) through q^trunc.
QSeries euler_product(int n, int trunc);

/// Exact polynomials sum q^{|p(Q)|} and sum q^{maj(Q)} over the standard
/// fillings of `shape`, truncated at their largest possible degree
/// n(n-1)/2.
QSeries plinth_polynomial(const SkewShape& shape);
QSeries maj_polynomial(const SkewShape& shape);

/// Sum of q^{volume} over semistandard fillings, three ways: plinth
/// polynomial times the Euler product, major index polynomial times the
/// Euler product, and direct enumeration. Throws LimitExceeded past the
/// enumeration cell limit.
QSeries genfun_plinth(const SkewShape& shape, int trunc);
QSeries genfun_stanley(const SkewShape& shape, int trunc);
QSeries genfun_bruteforce(const SkewShape& shape, int trunc);

}  // namespace plinth
