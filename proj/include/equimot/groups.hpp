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

#ifndef EQUIMOT_GROUPS_HPP
#define EQUIMOT_GROUPS_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace equimot {

using Residues = std::vector<std::int64_t>;

class AbelianGroup;

namespace detail {
struct ElementTag {};
struct CharacterTag {};
}  // namespace detail

// A residue tuple tied to the cyclic decomposition it lives in. Elements and
// characters share the representation but are distinct types.
template <class Tag>
class GroupValue {
 public:
  const Residues& residues() const noexcept { return residues_; }
  const std::vector<std::int64_t>& divisors() const noexcept { return divisors_; }

  bool is_zero() const noexcept {
    for (auto x : residues_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const GroupValue&, const GroupValue&) = default;
  friend auto operator<=>(const GroupValue& a, const GroupValue& b) {
    if (auto c = a.divisors_ <=> b.divisors_; c != 0) return c;
    return a.residues_ <=> b.residues_;
  }

 private:
  friend class AbelianGroup;
  GroupValue(std::vector<std::int64_t> divisors, Residues residues)
      : divisors_(std::move(divisors)), residues_(std::move(residues)) {}

  std::vector<std::int64_t> divisors_;
  Residues residues_;
};

using GroupElement = GroupValue<detail::ElementTag>;
using Character = GroupValue<detail::CharacterTag>;

// Value chi(g) = zeta_E^exponent for an abstract primitive E-th root zeta_E.
struct RootOfUnity {
  std::int64_t exponent = 0;
  std::int64_t order = 1;

  bool is_one() const noexcept { return exponent == 0; }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Finite abelian group Z/d_1 x ... x Z/d_m. The dual group has the same
/// divisors, so characters and elements are both residue tuples.
class AbelianGroup {
 public:
  /// Throws Error(invalid_group) if any divisor is <= 0. An empty list is the
  /// trivial group and is stored as [1].
  explicit AbelianGroup(std::vector<std::int64_t> divisors);

  const std::vector<std::int64_t>& divisors() const noexcept { return divisors_; }
  std::size_t rank() const noexcept { return divisors_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  // Residues are reduced into [0, d_i); a length mismatch is invalid_argument.
  GroupElement element(const Residues& residues) const;
  Character character(const Residues& residues) const;

  GroupElement identity() const;
  Character trivial_character() const;

  /// All r characters in ascending lexicographic order; the first is trivial.
  std::vector<Character> characters() const;
  /// All r elements, same ordering.
  std::vector<GroupElement> elements() const;

  bool contains(const Character& chi) const noexcept { return chi.divisors() == divisors_; }
  bool contains(const GroupElement& g) const noexcept { return g.divisors() == divisors_; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.divisors_ == b.divisors_;
  }

 private:
  Residues reduce(const Residues& residues) const;
  std::vector<Residues> enumerate() const;

  std::vector<std::int64_t> divisors_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

inline AbelianGroup make_group(std::vector<std::int64_t> divisors) {
  return AbelianGroup(std::move(divisors));
}

inline std::vector<Character> characters(const AbelianGroup& group) {
  return group.characters();
}

RootOfUnity pair(const Character& chi, const GroupElement& g);

Character char_mul(const Character& a, const Character& b);
Character char_inv(const Character& chi);
Character char_pow(const Character& chi, std::int64_t k);

GroupElement elem_mul(const GroupElement& a, const GroupElement& b);
GroupElement elem_pow(const GroupElement& g, std::int64_t k);

}  // namespace equimot

#endif  // EQUIMOT_GROUPS_HPP
