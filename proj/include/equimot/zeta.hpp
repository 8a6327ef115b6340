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

#ifndef EQUIMOT_ZETA_HPP
#define EQUIMOT_ZETA_HPP

#include <cstdint>
#include <vector>

#include "equimot/groups.hpp"
#include "equimot/grothring.hpp"
#include "equimot/series.hpp"

namespace equimot {

/// A curve of genus g with an action of G, described only by the data the
/// symbolic formulas need: g and an ordering lambda_1..lambda_r of the
/// characters of G (canonical order unless given).
class CurveSpec {
 public:
  CurveSpec(std::int64_t genus, AbelianGroup group);
  /// `order` must be a permutation of the characters of `group`.
  CurveSpec(std::int64_t genus, AbelianGroup group, std::vector<Character> order);

  std::int64_t genus() const noexcept { return genus_; }
  const AbelianGroup& group() const noexcept { return group_; }
  std::int64_t r() const noexcept { return group_.order(); }
  /// lambda_j, 1-based.
  const Character& lambda(std::int64_t j) const;
  const std::vector<Character>& character_order() const noexcept { return order_; }
  /// n_i = 2g + i.
  std::int64_t base_degree(std::int64_t i) const noexcept { return 2 * genus_ + i; }

 private:
  std::int64_t genus_;
  AbelianGroup group_;
  std::vector<Character> order_;
};

/// [Sym^n(A^1, chi)] = [A^1, chi][A^1, chi^2]...[A^1, chi^n].
RingElement sym_affine_line(std::int64_t n, const Character& chi);

/// Zeta function of (A^1, chi) as num / (1 - [Sym^r(A^1, chi)] t^r).
RationalWitness zeta_affine_line(const Character& chi, const AbelianGroup& group);

/// [Sym^n(A^k, chi_1 + ... + chi_k)] as the product of the line classes.
RingElement sym_affine_space(std::int64_t n, const std::vector<Character>& chars);

RationalWitness zeta_affine_space(const std::vector<Character>& chars, const AbelianGroup& group);

/// Omega_j = prod_{k > j} [A^1, lambda_j^{-1} lambda_k]; 1 when j = r.
RingElement omega(std::int64_t j, const CurveSpec& spec);
inline RingElement omega(std::int64_t j, const AbelianGroup& group) {
  return omega(j, CurveSpec(0, group));
}

/// [Sym^n(C, sigma)]. Degrees up to 2g + r are the opaque generators SymC(n);
/// beyond that, n = n_i + r m with m >= 1 and
///   SymC(n_i) + sum_j E0(i, j) (1 + L + ... + L^{m-1}) Omega_j^m.
RingElement sym_curve_class(std::int64_t n, const CurveSpec& spec);

/// The whole zeta function of (C, sigma) as one witness: the polynomial head
/// up to t^{2g}, plus for each i the shifted pieces
///   SymC(n_i) / (1 - t^r)  and  E0(i, j) Omega_j t^r / ((1 - Omega_j t^r)(1 - Omega_j L t^r)).
RationalWitness zeta_curve(const CurveSpec& spec);

}  // namespace equimot

#endif  // EQUIMOT_ZETA_HPP
