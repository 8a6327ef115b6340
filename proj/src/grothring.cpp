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

#include "equimot/grothring.hpp"

#include <algorithm>
#include <sstream>

#include "equimot/error.hpp"

namespace equimot {

Generator Generator::aff(Residues chi) {
  for (auto x : chi)
    if (x < 0) throw Error(ErrorCode::invalid_argument, "character residues must be reduced");
  return Generator(AffLine{std::move(chi)});
}

Generator Generator::sym_base(std::int64_t n) {
  if (n < 1)
    throw Error(ErrorCode::invalid_argument,
                "SymC(n) requires n >= 1, got " + std::to_string(n));
  return Generator(SymBase{n});
}

Generator Generator::e0_twist(std::int64_t i, std::int64_t j) {
  if (i < 1 || j < 1)
    throw Error(ErrorCode::invalid_argument, "E0 twist indices are 1-based");
  return Generator(E0Twist{i, j});
}

bool Generator::is_lefschetz() const noexcept {
  const auto* a = get_if<AffLine>();
  return a && std::all_of(a->chi.begin(), a->chi.end(), [](auto x) { return x == 0; });
}

std::string Generator::to_string() const {
  if (is_lefschetz()) return "L";
  std::ostringstream os;
  if (const auto* a = get_if<AffLine>()) {
    os << "Aff(";
    for (std::size_t k = 0; k < a->chi.size(); ++k) os << (k ? "," : "") << a->chi[k];
    os << ")";
  } else if (const auto* s = get_if<SymBase>()) {
    os << "SymC(" << s->n << ")";
  } else if (const auto* e = get_if<E0Twist>()) {
    os << "E0(" << e->i << "," << e->j << ")";
  }
  return os.str();
}

Monomial::Monomial(Generator g, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(std::move(g), exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    m.degree_ += f.second;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(std::move(f));
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.factors_ <=> b.factors_;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors_) {
    if (!out.empty()) out += "*";
    out += g.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

RingElement::RingElement(long c) : RingElement(Integer(c)) {}

RingElement::RingElement(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

RingElement::RingElement(const Generator& g) { terms_.emplace(Monomial(g), 1); }

RingElement::RingElement(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.emplace(m, c);
}

RingElement RingElement::from_terms(const std::vector<std::pair<Monomial, Integer>>& terms) {
  RingElement out;
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

void RingElement::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElement::is_one() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

std::uint64_t RingElement::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::set<Generator> RingElement::generators() const {
  std::set<Generator> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

RingElement operator-(const RingElement& a) {
  RingElement out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

RingElement pow(const RingElement& base, std::int64_t exponent) {
  if (exponent < 0)
    throw Error(ErrorCode::invalid_argument, "negative exponent in ring power");
  RingElement result(1L);
  RingElement b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

RingElement regular_rep_class(const AbelianGroup& group) {
  std::vector<Monomial::Factor> factors;
  for (const auto& chi : group.characters()) factors.emplace_back(Generator::aff(chi), 1);
  return RingElement(Monomial::from_factors(std::move(factors)));
}

RingElement e_m_class(std::int64_t i, std::int64_t m, const AbelianGroup& group) {
  if (i < 1 || i > group.order())
    throw Error(ErrorCode::invalid_argument,
                "bundle index i=" + std::to_string(i) + " outside [1, " +
                    std::to_string(group.order()) + "]");
  if (m < 0) throw Error(ErrorCode::invalid_argument, "m must be nonnegative");
  return RingElement(Generator::e0_twist(i, 1)) * pow(regular_rep_class(group), m);
}

}  // namespace equimot
