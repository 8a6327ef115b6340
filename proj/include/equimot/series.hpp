// Copyright 2026 The equimot Authors
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

#ifndef EQUIMOT_SERIES_HPP
#define EQUIMOT_SERIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "equimot/grothring.hpp"

namespace equimot {

/// Power series in t over the ring, truncated after t^order.
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Coefficients of t^0..t^N; throws Error(invalid_argument) when empty.
  explicit PowerSeries(std::vector<RingElement> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<RingElement>& coeffs() const noexcept { return coeffs_; }
  const RingElement& operator[](std::size_t n) const { return coeffs_.at(n); }

  PowerSeries truncated(std::size_t order) const;
  std::string to_string() const;

  // The result order is the smaller of the two operand orders.
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<RingElement> coeffs_;
};

/// Polynomial in t with ring coefficients, stored as strictly increasing
/// (degree, nonzero coefficient) pairs.
class TPoly {
 public:
  using Term = std::pair<std::size_t, RingElement>;

  TPoly() = default;
  TPoly(const RingElement& constant);  // NOLINT(google-explicit-constructor)
  TPoly(long constant) : TPoly(RingElement(constant)) {}  // NOLINT(google-explicit-constructor)

  static TPoly monomial(const RingElement& coef, std::size_t degree);
  static TPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.back().first; }
  RingElement coeff(std::size_t degree) const;
  TPoly shifted(std::size_t k) const;
  std::string to_string() const;

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// A pair (num, den) with den * f = num certifying that f is rational. The
/// denominator always has constant term 1, so the expansion is division-free.
/// The factor list records how den was built; it drives deduplication in
/// witness_combine and always multiplies out to den.
class RationalWitness {
 public:
  /// Throws Error(non_invertible_denominator) unless den(0) == 1.
  RationalWitness(TPoly num, TPoly den);
  static RationalWitness from_factors(TPoly num, std::vector<TPoly> den_factors);

  const TPoly& num() const noexcept { return num_; }
  const TPoly& den() const noexcept { return den_; }
  const std::vector<TPoly>& den_factors() const noexcept { return factors_; }
  std::string to_string() const;

  friend bool operator==(const RationalWitness& a, const RationalWitness& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalWitness() = default;
  TPoly num_;
  TPoly den_;
  std::vector<TPoly> factors_;
};

/// The unique f with den * f == num modulo t^(order+1).
PowerSeries ps_expand(const RationalWitness& w, std::size_t order);

/// True iff den * f agrees with num on every coefficient up to f.order().
bool witness_check(const RationalWitness& w, const PowerSeries& f);

/// Sum of t^shift_k * w_k over a common denominator. Equal factors (compared
/// canonically) are shared: each distinct factor appears with the largest
/// multiplicity any input uses.
RationalWitness witness_combine(const std::vector<RationalWitness>& ws,
                                const std::vector<std::size_t>& shifts);

}  // namespace equimot

#endif  // EQUIMOT_SERIES_HPP
