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

#include "equimot/zeta.hpp"

#include <algorithm>
#include <string>

#include "equimot/error.hpp"

namespace equimot {

CurveSpec::CurveSpec(std::int64_t genus, AbelianGroup group)
    : CurveSpec(genus, group, group.characters()) {}

CurveSpec::CurveSpec(std::int64_t genus, AbelianGroup group, std::vector<Character> order)
    : genus_(genus), group_(std::move(group)), order_(std::move(order)) {
  if (genus_ < 0)
    throw Error(ErrorCode::invalid_argument, "genus must be nonnegative, got " + std::to_string(genus_));
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != group_.characters())
    throw Error(ErrorCode::invalid_argument,
                "character order must list every character of the group exactly once");
}

const Character& CurveSpec::lambda(std::int64_t j) const {
  if (j < 1 || j > r())
    throw Error(ErrorCode::invalid_argument,
                "character index j=" + std::to_string(j) + " outside [1, " + std::to_string(r()) + "]");
  return order_[static_cast<std::size_t>(j - 1)];
}

RingElement sym_affine_line(std::int64_t n, const Character& chi) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "symmetric power degree must be nonnegative");
  std::vector<Monomial::Factor> factors;
  for (std::int64_t i = 1; i <= n; ++i) factors.emplace_back(Generator::aff(char_pow(chi, i)), 1);
  return RingElement(Monomial::from_factors(std::move(factors)));
}

namespace {

void require_members(const std::vector<Character>& chars, const AbelianGroup& group) {
  for (const auto& chi : chars)
    if (!group.contains(chi))
      throw Error(ErrorCode::invalid_argument, "character does not belong to the group");
}

// Sum_{l < r} S(l) t^l over 1 - S(r) t^r, for a class sequence S that is
// multiplicative with period r: S(l + r) = S(l) S(r).
template <class Sym>
RationalWitness periodic_witness(std::int64_t r, Sym&& sym) {
  std::vector<TPoly::Term> num;
  for (std::int64_t l = 0; l < r; ++l) num.emplace_back(static_cast<std::size_t>(l), sym(l));
  auto den = TPoly(1L) - TPoly::monomial(sym(r), static_cast<std::size_t>(r));
  return RationalWitness(TPoly::from_terms(std::move(num)), std::move(den));
}

}  // namespace

RationalWitness zeta_affine_line(const Character& chi, const AbelianGroup& group) {
  require_members({chi}, group);
  return periodic_witness(group.order(), [&](std::int64_t n) { return sym_affine_line(n, chi); });
}

RingElement sym_affine_space(std::int64_t n, const std::vector<Character>& chars) {
  for (const auto& chi : chars)
    if (chi.divisors() != chars.front().divisors())
      throw Error(ErrorCode::invalid_argument, "characters come from different groups");
  RingElement out(1L);
  for (const auto& chi : chars) out *= sym_affine_line(n, chi);
  return out;
}

RationalWitness zeta_affine_space(const std::vector<Character>& chars, const AbelianGroup& group) {
  require_members(chars, group);
  return periodic_witness(group.order(), [&](std::int64_t n) { return sym_affine_space(n, chars); });
}

RingElement omega(std::int64_t j, const CurveSpec& spec) {
  const auto inv = char_inv(spec.lambda(j));
  std::vector<Monomial::Factor> factors;
  for (auto k = j + 1; k <= spec.r(); ++k)
    factors.emplace_back(Generator::aff(char_mul(inv, spec.lambda(k))), 1);
  return RingElement(Monomial::from_factors(std::move(factors)));
}

RingElement sym_curve_class(std::int64_t n, const CurveSpec& spec) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "symmetric power degree must be nonnegative");
  if (n == 0) return RingElement(1L);
  const auto r = spec.r();
  const auto top = 2 * spec.genus() + r;
  if (n <= top) return RingElement(Generator::sym_base(n));

  // n = n_i + r m with i in [1, r] and m >= 1.
  const auto excess = n - 2 * spec.genus();
  const auto i = (excess - 1) % r + 1;
  const auto m = (excess - i) / r;

  const RingElement lef(Generator::lefschetz(spec.group()));
  RingElement geometric;
  for (std::int64_t s = 0; s < m; ++s) geometric += pow(lef, s);

  RingElement out(Generator::sym_base(spec.base_degree(i)));
  for (std::int64_t j = 1; j <= r; ++j)
    out += RingElement(Generator::e0_twist(i, j)) * geometric * pow(omega(j, spec), m);
  return out;
}

RationalWitness zeta_curve(const CurveSpec& spec) {
  const auto r = static_cast<std::size_t>(spec.r());
  const RingElement lef(Generator::lefschetz(spec.group()));

  std::vector<RationalWitness> pieces;
  std::vector<std::size_t> shifts;

  std::vector<TPoly::Term> head;
  for (std::int64_t n = 0; n <= 2 * spec.genus(); ++n)
    head.emplace_back(static_cast<std::size_t>(n), sym_curve_class(n, spec));
  pieces.emplace_back(TPoly::from_terms(std::move(head)), TPoly(1L));
  shifts.push_back(0);

  const TPoly period = TPoly(1L) - TPoly::monomial(RingElement(1L), r);
  for (std::int64_t i = 1; i <= spec.r(); ++i) {
    const auto shift = static_cast<std::size_t>(spec.base_degree(i));
    pieces.push_back(RationalWitness::from_factors(
        TPoly(RingElement(Generator::sym_base(spec.base_degree(i)))), {period}));
    shifts.push_back(shift);
    for (std::int64_t j = 1; j <= spec.r(); ++j) {
      const auto om = omega(j, spec);
      auto num = TPoly::monomial(RingElement(Generator::e0_twist(i, j)) * om, r);
      pieces.push_back(RationalWitness::from_factors(
          std::move(num), {TPoly(1L) - TPoly::monomial(om, r), TPoly(1L) - TPoly::monomial(om * lef, r)}));
      shifts.push_back(shift);
    }
  }
  return witness_combine(pieces, shifts);
}

}  // namespace equimot
