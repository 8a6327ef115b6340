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

#ifndef EQUIMOT_GROTHRING_HPP
#define EQUIMOT_GROTHRING_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equimot/groups.hpp"

namespace equimot {

using Integer = mpz_class;

// Generator payloads. The variant index gives the canonical kind order
// (affine lines, then symmetric powers of the curve, then twisted bundles).

/// [A^1, chi]: the affine line with G acting through the character chi.
struct AffLine {
  Residues chi;
  friend auto operator<=>(const AffLine&, const AffLine&) = default;
};

/// [Sym^n(C, sigma)] kept opaque, n >= 1.
struct SymBase {
  std::int64_t n = 1;
  friend auto operator<=>(const SymBase&, const SymBase&) = default;
};

/// [E_0, lambda_j^{-1} (x) sigma_0] over the base degree n_i = 2g + i.
struct E0Twist {
  std::int64_t i = 1;
  std::int64_t j = 1;
  friend auto operator<=>(const E0Twist&, const E0Twist&) = default;
};

class Generator {
 public:
  using Payload = std::variant<AffLine, SymBase, E0Twist>;

  static Generator aff(const Character& chi) { return Generator(AffLine{chi.residues()}); }
  static Generator aff(Residues chi);
  static Generator lefschetz(const AbelianGroup& group) { return aff(group.trivial_character()); }
  /// n must be >= 1; the degree-0 symmetric power is the ring unit, not a generator.
  static Generator sym_base(std::int64_t n);
  static Generator e0_twist(std::int64_t i, std::int64_t j);

  const Payload& payload() const noexcept { return payload_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&payload_);
  }

  bool is_lefschetz() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  explicit Generator(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

/// Product of generator powers, factors sorted by generator order, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<Generator, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Generator g, std::uint32_t exponent = 1);

  /// Sorts, merges equal generators and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  // Total degree first, then lexicographic on the factor list.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// An element of the free commutative polynomial ring over Z on the generator
/// alphabet. The term map never holds a zero coefficient, so structural
/// equality is equality of values.
class RingElement {
 public:
  using Terms = std::map<Monomial, Integer>;

  RingElement() = default;
  RingElement(long c);  // NOLINT(google-explicit-constructor)
  RingElement(const Integer& c);  // NOLINT(google-explicit-constructor)
  RingElement(const Generator& g);  // NOLINT(google-explicit-constructor)
  RingElement(const Monomial& m, const Integer& c = 1);

  /// Builds the canonical form of an arbitrary term list.
  static RingElement from_terms(const std::vector<std::pair<Monomial, Integer>>& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint64_t degree() const noexcept;
  std::set<Generator> generators() const;
  std::string to_string() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

/// Throws Error(invalid_argument) for a negative exponent.
RingElement pow(const RingElement& base, std::int64_t exponent);

inline bool ring_eq(const RingElement& a, const RingElement& b) { return a == b; }

/// [A^r, tau] for the regular representation: the product of [A^1, chi] over
/// every character of the group.
RingElement regular_rep_class(const AbelianGroup& group);

/// [E_m, sigma_m] = [E_0, sigma_0] [A^r, tau]^m. Requires 1 <= i <= r.
RingElement e_m_class(std::int64_t i, std::int64_t m, const AbelianGroup& group);

}  // namespace equimot

#endif  // EQUIMOT_GROTHRING_HPP
