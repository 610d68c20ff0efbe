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

#include "plinth/qseries.hpp"

#include <sstream>

#include "plinth/error.hpp"
#include "plinth/plinths.hpp"
#include "plinth/tableau.hpp"

namespace plinth {
namespace {

void require_trunc(int trunc) {
  if (trunc < 0) throw DomainError("truncation order must be non-negative");
}

void require_budget(const SkewShape& shape) {
  const int limit = enumeration_cell_limit();
  if (shape.size() > limit) {
    throw LimitExceeded("shape " + shape.to_string() + " has " + std::to_string(shape.size()) +
                        " cells; the enumeration limit is " + std::to_string(limit));
  }
}

int max_degree(const SkewShape& shape) { return shape.size() * (shape.size() - 1) / 2; }

}  // namespace

QSeries::QSeries(int trunc) {
  require_trunc(trunc);
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, Integer(0));
}

QSeries::QSeries(std::vector<Integer> coeffs, int trunc) : QSeries(trunc) {
  const std::size_t keep = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t k = 0; k < keep; ++k) coeffs_[k] = std::move(coeffs[k]);
}

QSeries QSeries::one(int trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::from_exponents(std::span<const std::int64_t> exponents, int trunc) {
  QSeries s(trunc);
  for (std::int64_t e : exponents) {
    if (e < 0) throw DomainError("negative exponent");
    if (e <= trunc) s.coeffs_[static_cast<std::size_t>(e)] += 1;
  }
  return s;
}

std::string QSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return first ? "0" : out.str();
}

std::string QSeries::to_json() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out << ',';
    out << coeffs_[k];
  }
  out << ']';
  return out.str();
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  if (a.trunc() != b.trunc()) {
    throw DomainError("truncation mismatch: q^" + std::to_string(a.trunc()) + " vs q^" +
                      std::to_string(b.trunc()));
  }
  const int n = a.trunc();
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return QSeries(std::move(out), n);
}

QSeries euler_product(int n, int trunc) {
  if (n < 0) throw DomainError("euler_product needs n >= 0");
  require_trunc(trunc);
  std::vector<Integer> c(static_cast<std::size_t>(trunc) + 1);
  c[0] = 1;
  // Multiplying by 1/(1 - q^k) is the running sum c[j] += c[j - k].
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j <= trunc; ++j) {
      c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - k)];
    }
  }
  return QSeries(std::move(c), trunc);
}

QSeries plinth_polynomial(const SkewShape& shape) {
  std::vector<std::int64_t> volumes;
  for (const StandardTableau& q : enumerate_syt(shape)) volumes.push_back(plinth_volume(q));
  return QSeries::from_exponents(volumes, max_degree(shape));
}

QSeries maj_polynomial(const SkewShape& shape) {
  std::vector<std::int64_t> majors;
  for (const StandardTableau& q : enumerate_syt(shape)) majors.push_back(maj(q));
  return QSeries::from_exponents(majors, max_degree(shape));
}

QSeries genfun_plinth(const SkewShape& shape, int trunc) {
  require_trunc(trunc);
  const QSeries poly = plinth_polynomial(shape);
  const std::vector<Integer> c(poly.coefficients().begin(), poly.coefficients().end());
  return series_mul(QSeries(c, trunc), euler_product(shape.size(), trunc));
}

QSeries genfun_stanley(const SkewShape& shape, int trunc) {
  require_trunc(trunc);
  const QSeries poly = maj_polynomial(shape);
  const std::vector<Integer> c(poly.coefficients().begin(), poly.coefficients().end());
  return series_mul(QSeries(c, trunc), euler_product(shape.size(), trunc));
}

QSeries genfun_bruteforce(const SkewShape& shape, int trunc) {
  require_trunc(trunc);
  require_budget(shape);
  // Any entry above trunc already pushes the volume past trunc.
  SsytEnumerator e(shape, trunc, trunc);
  std::vector<Integer> c(static_cast<std::size_t>(trunc) + 1);
  while (e.next()) c[static_cast<std::size_t>(e.volume())] += 1;
  return QSeries(std::move(c), trunc);
}

}  // namespace plinth
