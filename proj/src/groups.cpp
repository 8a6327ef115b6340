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

#include "equimot/groups.hpp"

#include <numeric>
#include <string>

#include "equimot/error.hpp"

namespace equimot {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

template <class A, class B>
void require_same_group(const A& a, const B& b, const char* op) {
  if (a.divisors() != b.divisors())
    throw Error(ErrorCode::invalid_argument,
                std::string(op) + ": operands belong to different groups");
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> divisors)
    : divisors_(std::move(divisors)) {
  if (divisors_.empty()) divisors_.push_back(1);
  for (auto d : divisors_) {
    if (d <= 0)
      throw Error(ErrorCode::invalid_group,
                  "group divisor must be positive, got " + std::to_string(d));
    order_ *= d;
    exponent_ = std::lcm(exponent_, d);
  }
}

Residues AbelianGroup::reduce(const Residues& residues) const {
  if (residues.size() != divisors_.size())
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(divisors_.size()) + " residues, got " +
                    std::to_string(residues.size()));
  Residues out(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) out[i] = mod(residues[i], divisors_[i]);
  return out;
}

GroupElement AbelianGroup::element(const Residues& residues) const {
  return GroupElement(divisors_, reduce(residues));
}

Character AbelianGroup::character(const Residues& residues) const {
  return Character(divisors_, reduce(residues));
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(divisors_, Residues(divisors_.size(), 0));
}

Character AbelianGroup::trivial_character() const {
  return Character(divisors_, Residues(divisors_.size(), 0));
}

// Odometer over the residue box, last coordinate fastest: lexicographic order.
std::vector<Residues> AbelianGroup::enumerate() const {
  std::vector<Residues> out;
  out.reserve(static_cast<std::size_t>(order_));
  Residues cur(divisors_.size(), 0);
  for (std::int64_t k = 0; k < order_; ++k) {
    out.push_back(cur);
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (++cur[i] < divisors_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::vector<Character> AbelianGroup::characters() const {
  std::vector<Character> out;
  for (auto& r : enumerate()) out.push_back(Character(divisors_, std::move(r)));
  return out;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  for (auto& r : enumerate()) out.push_back(GroupElement(divisors_, std::move(r)));
  return out;
}

RootOfUnity pair(const Character& chi, const GroupElement& g) {
  require_same_group(chi, g, "pair");
  AbelianGroup group(chi.divisors());
  const auto e = group.exponent();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < chi.residues().size(); ++i) {
    const auto d = chi.divisors()[i];
    const auto local = (chi.residues()[i] * g.residues()[i]) % d;
    acc = (acc + local * (e / d)) % e;
  }
  return RootOfUnity{acc, e};
}

Character char_mul(const Character& a, const Character& b) {
  require_same_group(a, b, "char_mul");
  Residues r(a.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.residues()[i] + b.residues()[i];
  return AbelianGroup(a.divisors()).character(r);
}

Character char_inv(const Character& chi) { return char_pow(chi, -1); }

Character char_pow(const Character& chi, std::int64_t k) {
  Residues r(chi.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto d = chi.divisors()[i];
    r[i] = mod(chi.residues()[i] * mod(k, d), d);
  }
  return AbelianGroup(chi.divisors()).character(r);
}

GroupElement elem_mul(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b, "elem_mul");
  Residues r(a.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.residues()[i] + b.residues()[i];
  return AbelianGroup(a.divisors()).element(r);
}

GroupElement elem_pow(const GroupElement& g, std::int64_t k) {
  Residues r(g.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto d = g.divisors()[i];
    r[i] = mod(g.residues()[i] * mod(k, d), d);
  }
  return AbelianGroup(g.divisors()).element(r);
}

}  // namespace equimot
