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

#ifndef EQUIMOT_FFREALIZE_HPP
#define EQUIMOT_FFREALIZE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "equimot/groups.hpp"
#include "equimot/grothring.hpp"
#include "equimot/zeta.hpp"

namespace equimot {

/// F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept { return (a * b) % p_; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const noexcept;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t multiplicative_order(std::int64_t a) const;
  /// Smallest generator of F_p^*.
  std::int64_t primitive_root() const;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n) noexcept;

/// P^1 over F_q with Z/r acting by [x : y] -> [zeta_r^g x : y]. zeta_r is
/// w^((q-1)/r) for the smallest primitive root w, so it has order exactly r.
class P1Scenario {
 public:
  /// Throws Error(unsupported_scenario) unless q is prime and r divides q - 1.
  P1Scenario(std::int64_t q, std::int64_t r);

  std::int64_t q() const noexcept { return field_.p(); }
  std::int64_t r() const noexcept { return group_.order(); }
  std::int64_t zeta_r() const noexcept { return zeta_; }
  const PrimeField& field() const noexcept { return field_; }
  const AbelianGroup& group() const noexcept { return group_; }

  /// zeta_r^k in F_q.
  std::int64_t root(std::int64_t k) const noexcept;
  /// chi(g) as an element of F_q.
  std::int64_t value(const Character& chi, const GroupElement& g) const;

 private:
  PrimeField field_;
  AbelianGroup group_;
  std::int64_t zeta_;
};

/// Values of a ring homomorphism on generators. Fixed-point counting for a
/// single group element is one such homomorphism.
class GeneratorTable {
 public:
  /// Throws Error(invalid_argument) for a negative value.
  void set(const Generator& g, const Integer& value);
  const Integer* find(const Generator& g) const;
  const std::map<Generator, Integer>& entries() const noexcept { return values_; }

 private:
  std::map<Generator, Integer> values_;
};

/// Extends the table to the unique ring homomorphism and evaluates it.
/// Throws Error(uncovered_generator) naming every missing generator.
Integer realize(const RingElement& elem, const GeneratorTable& table);

/// Sign of the weight exponent on the section x^a y^(n-a): precomposition
/// f -> f o sigma_{g^{-1}} gives zeta^{-a g}; pushforward gives zeta^{a g}.
enum class WeightConvention { precompose, pushforward };

/// [A^1, chi] -> q if chi(g) = 1, else 1 (only the origin is fixed).
GeneratorTable scaling_affine_table(const P1Scenario& sc, const GroupElement& g);

/// Fixed-point table for C = P^1 with the scaling action: affine lines as
/// above, SymC(n) for 1 <= n <= r as fixed points on P^n, E0(i, j) as
/// q^(dim of the lambda_j-twisted fixed subspace of H^0(O(n_i))).
/// Throws Error(unsupported_scenario) unless the curve has genus 0 and the
/// scenario's group.
GeneratorTable p1_table(const P1Scenario& sc, const GroupElement& g, const CurveSpec& spec,
                        WeightConvention convention = WeightConvention::precompose);

/// Monic degree-n polynomials over F_q whose root multiset is stable under
/// multiplication by chi(g), by enumerating all q^n of them.
/// Throws Error(too_large) when q^n > 10^7.
Integer brute_fixed_sym_a1(std::int64_t n, const Character& chi, const P1Scenario& sc,
                           const GroupElement& g);

/// Points of P^n(F_q) = Sym^n P^1 fixed by g acting on binary forms, by
/// enumerating normalized coefficient tuples. Throws Error(too_large) when
/// #P^n(F_q) > 10^9.
Integer brute_fixed_sym_p1(std::int64_t n, const P1Scenario& sc, const GroupElement& g);

inline constexpr std::int64_t kMaxA1Enumeration = 10'000'000;
inline constexpr std::int64_t kMaxP1Enumeration = 1'000'000'000;

/// Coefficients c_0..c_n of exp(sum_i N_i t^i / i), i.e. the number of
/// effective degree-k divisors given the point counts N_i over F_{q^i}.
/// Throws Error(inconsistent_counts) if some c_k is not a nonnegative integer.
std::vector<Integer> classical_sym_counts(const std::vector<Integer>& point_counts, std::size_t n);

/// #E(F_{p^s}) for E: y^2 = x^3 + a x + b, s >= 1. N_1 is counted directly;
/// higher s follow from the Frobenius trace recurrence.
Integer count_curve_points(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t s);

}  // namespace equimot

#endif  // EQUIMOT_FFREALIZE_HPP
