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

#include "equimot/series.hpp"

#include <algorithm>
#include <map>

#include "equimot/error.hpp"

namespace equimot {

PowerSeries::PowerSeries(std::vector<RingElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(ErrorCode::invalid_argument, "a power series needs at least one coefficient");
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<RingElement> c(coeffs_.begin(),
                             coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return PowerSeries(std::move(c));
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    out += "t^" + std::to_string(n) + ": " + coeffs_[n].to_string() + "\n";
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<RingElement> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const auto n = std::min(a.order(), b.order());
  std::vector<RingElement> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(c));
}

TPoly::TPoly(const RingElement& constant) {
  if (!constant.is_zero()) terms_.emplace_back(0, constant);
}

TPoly TPoly::monomial(const RingElement& coef, std::size_t degree) {
  TPoly p;
  if (!coef.is_zero()) p.terms_.emplace_back(degree, coef);
  return p;
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
  std::map<std::size_t, RingElement> acc;
  for (auto& [d, c] : terms) acc[d] += c;
  TPoly p;
  for (auto& [d, c] : acc)
    if (!c.is_zero()) p.terms_.emplace_back(d, std::move(c));
  return p;
}

RingElement TPoly::coeff(std::size_t degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, std::size_t d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) return it->second;
  return RingElement{};
}

TPoly TPoly::shifted(std::size_t k) const {
  TPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

std::string TPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    const bool neg = c.size() == 1 && c.terms().begin()->second < 0;
    const RingElement mag = neg ? -c : c;
    const std::string cs = mag.size() == 1 ? mag.to_string() : "(" + mag.to_string() + ")";
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (d == 0) {
      out += cs;
    } else {
      if (!mag.is_one()) out += cs + "*";
      out += d == 1 ? std::string("t") : "t^" + std::to_string(d);
    }
  }
  return out;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  std::vector<TPoly::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return TPoly::from_terms(std::move(t));
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  std::vector<TPoly::Term> t = a.terms_;
  for (const auto& [d, c] : b.terms_) t.emplace_back(d, -c);
  return TPoly::from_terms(std::move(t));
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  std::vector<TPoly::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) t.emplace_back(da + db, ca * cb);
  return TPoly::from_terms(std::move(t));
}

namespace {

void require_unit_constant(const TPoly& den) {
  if (!den.coeff(0).is_one())
    throw Error(ErrorCode::non_invertible_denominator,
                "denominator constant term must be 1, got " + den.coeff(0).to_string());
}

TPoly product(const std::vector<TPoly>& factors) {
  TPoly p(1L);
  for (const auto& f : factors) p = p * f;
  return p;
}

}  // namespace

RationalWitness::RationalWitness(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_unit_constant(den_);
  if (!(den_ == TPoly(1L))) factors_.push_back(den_);
}

RationalWitness RationalWitness::from_factors(TPoly num, std::vector<TPoly> den_factors) {
  for (const auto& f : den_factors) require_unit_constant(f);
  RationalWitness w;
  w.num_ = std::move(num);
  w.den_ = product(den_factors);
  w.factors_ = std::move(den_factors);
  return w;
}

std::string RationalWitness::to_string() const {
  std::string den;
  if (factors_.size() <= 1) {
    den = den_.to_string();
  } else {
    for (const auto& f : factors_) den += "(" + f.to_string() + ")";
  }
  return "(" + num_.to_string() + ") / (" + den + ")";
}

PowerSeries ps_expand(const RationalWitness& w, std::size_t order) {
  std::vector<RingElement> f(order + 1);
  const auto& den = w.den().terms();
  for (std::size_t n = 0; n <= order; ++n) {
    RingElement c = w.num().coeff(n);
    // den(0) == 1, so f_n = num_n - sum_{k>=1} den_k f_{n-k}.
    for (const auto& [k, dk] : den) {
      if (k == 0) continue;
      if (k > n) break;
      if (!f[n - k].is_zero()) c -= dk * f[n - k];
    }
    f[n] = std::move(c);
  }
  return PowerSeries(std::move(f));
}

bool witness_check(const RationalWitness& w, const PowerSeries& f) {
  const auto& den = w.den().terms();
  for (std::size_t n = 0; n <= f.order(); ++n) {
    RingElement lhs;
    for (const auto& [k, dk] : den) {
      if (k > n) break;
      lhs += dk * f[n - k];
    }
    if (!(lhs == w.num().coeff(n))) return false;
  }
  return true;
}

namespace {

// Removes one copy of each factor of `sub` from `pool`; `pool` must contain them.
std::vector<TPoly> multiset_difference(std::vector<TPoly> pool, const std::vector<TPoly>& sub) {
  for (const auto& f : sub) {
    auto it = std::find(pool.begin(), pool.end(), f);
    pool.erase(it);
  }
  return pool;
}

}  // namespace

RationalWitness witness_combine(const std::vector<RationalWitness>& ws,
                                const std::vector<std::size_t>& shifts) {
  if (ws.size() != shifts.size())
    throw Error(ErrorCode::invalid_argument, "witness_combine: one shift per witness required");
  if (ws.empty()) return RationalWitness(TPoly{}, TPoly(1L));

  std::vector<TPoly> common;
  for (const auto& w : ws) {
    std::vector<TPoly> available = common;
    for (const auto& f : w.den_factors()) {
      auto it = std::find(available.begin(), available.end(), f);
      if (it != available.end()) {
        available.erase(it);
      } else {
        common.push_back(f);
      }
    }
  }

  TPoly num;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const auto cofactor = product(multiset_difference(common, ws[k].den_factors()));
    num = num + (ws[k].num() * cofactor).shifted(shifts[k]);
  }
  return RationalWitness::from_factors(std::move(num), std::move(common));
}

}  // namespace equimot
