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

#include "equimot/ffrealize.hpp"

#include <algorithm>
#include <string>

#include "equimot/error.hpp"

namespace equimot {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a prime below 2^31");
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const noexcept {
  std::int64_t result = 1 % p_;
  a %= p_;
  if (a < 0) a += p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::invalid_argument, "zero has no inverse");
  return pow(a, p_ - 2);
}

std::int64_t PrimeField::multiplicative_order(std::int64_t a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) throw Error(ErrorCode::invalid_argument, "zero has no multiplicative order");
  std::int64_t order = p_ - 1;
  std::int64_t rest = p_ - 1;
  for (std::int64_t f = 2; rest > 1; ++f) {
    if (f * f > rest) f = rest;
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    while (order % f == 0 && pow(a, order / f) == 1) order /= f;
  }
  return order;
}

std::int64_t PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  for (std::int64_t w = 2; w < p_; ++w)
    if (multiplicative_order(w) == p_ - 1) return w;
  throw Error(ErrorCode::invalid_argument, "no primitive root found");
}

namespace {

PrimeField scenario_field(std::int64_t q) {
  if (!is_prime(q) || q >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::unsupported_scenario, "q=" + std::to_string(q) + " must be a prime below 2^31");
  return PrimeField(q);
}

}  // namespace

P1Scenario::P1Scenario(std::int64_t q, std::int64_t r)
    : field_(scenario_field(q)), group_(std::vector<std::int64_t>{r > 0 ? r : 1}), zeta_(1) {
  if (r < 1 || (q - 1) % r != 0)
    throw Error(ErrorCode::unsupported_scenario,
                "r=" + std::to_string(r) + " must be positive and divide q-1=" + std::to_string(q - 1));
  zeta_ = field_.pow(field_.primitive_root(), (q - 1) / r);
}

std::int64_t P1Scenario::root(std::int64_t k) const noexcept {
  const auto r = group_.order();
  k %= r;
  if (k < 0) k += r;
  return field_.pow(zeta_, k);
}

std::int64_t P1Scenario::value(const Character& chi, const GroupElement& g) const {
  if (!group_.contains(chi) || !group_.contains(g))
    throw Error(ErrorCode::unsupported_scenario, "character or element outside the scenario group");
  const auto e = pair(chi, g);
  return root(e.exponent * (group_.order() / e.order));
}

void GeneratorTable::set(const Generator& g, const Integer& value) {
  if (value < 0)
    throw Error(ErrorCode::invalid_argument, "table value for " + g.to_string() + " is negative");
  values_[g] = value;
}

const Integer* GeneratorTable::find(const Generator& g) const {
  auto it = values_.find(g);
  return it == values_.end() ? nullptr : &it->second;
}

Integer realize(const RingElement& elem, const GeneratorTable& table) {
  std::string missing;
  for (const auto& g : elem.generators())
    if (!table.find(g)) missing += (missing.empty() ? "" : ", ") + g.to_string();
  if (!missing.empty())
    throw Error(ErrorCode::uncovered_generator, "no table value for: " + missing);

  Integer total = 0;
  for (const auto& [mono, coef] : elem.terms()) {
    Integer term = coef;
    for (const auto& [g, e] : mono.factors()) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), table.find(g)->get_mpz_t(), e);
      term *= p;
    }
    total += term;
  }
  return total;
}

namespace {

Integer int_pow(std::int64_t base, std::int64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

std::int64_t element_index(const P1Scenario& sc, const GroupElement& g) {
  if (!sc.group().contains(g))
    throw Error(ErrorCode::unsupported_scenario, "group element outside the scenario group");
  return g.residues().front();
}

// F_q values of the weights on x^a y^(n-a), a = 0..n.
std::vector<std::int64_t> section_weights(const P1Scenario& sc, std::int64_t k, std::int64_t n,
                                          WeightConvention convention) {
  const std::int64_t sign = convention == WeightConvention::precompose ? -1 : 1;
  std::vector<std::int64_t> w(static_cast<std::size_t>(n + 1));
  for (std::int64_t a = 0; a <= n; ++a) w[static_cast<std::size_t>(a)] = sc.root(sign * a * k);
  return w;
}

}  // namespace

GeneratorTable scaling_affine_table(const P1Scenario& sc, const GroupElement& g) {
  element_index(sc, g);
  GeneratorTable table;
  for (const auto& chi : sc.group().characters())
    table.set(Generator::aff(chi), sc.value(chi, g) == 1 ? Integer(sc.q()) : Integer(1));
  return table;
}

GeneratorTable p1_table(const P1Scenario& sc, const GroupElement& g, const CurveSpec& spec,
                        WeightConvention convention) {
  if (spec.genus() != 0)
    throw Error(ErrorCode::unsupported_scenario, "the P^1 scenario only realizes genus 0");
  if (!(spec.group() == sc.group()))
    throw Error(ErrorCode::unsupported_scenario, "curve group differs from the scenario group");
  const auto k = element_index(sc, g);
  const auto q = sc.q();
  const auto r = sc.r();

  GeneratorTable table = scaling_affine_table(sc, g);

  for (std::int64_t n = 1; n <= r; ++n) {
    auto w = section_weights(sc, k, n, convention);
    std::sort(w.begin(), w.end());
    Integer fixed = 0;
    for (auto it = w.begin(); it != w.end();) {
      auto next = std::upper_bound(it, w.end(), *it);
      // A projectivized eigenspace of dimension m contributes #P^{m-1}(F_q).
      fixed += (int_pow(q, next - it) - 1) / (q - 1);
      it = next;
    }
    table.set(Generator::sym_base(n), fixed);
  }

  for (std::int64_t i = 1; i <= r; ++i) {
    const auto w = section_weights(sc, k, spec.base_degree(i), convention);
    for (std::int64_t j = 1; j <= r; ++j) {
      const auto twist = sc.field().inv(sc.value(spec.lambda(j), g));
      const auto dim = std::count_if(w.begin(), w.end(),
                                     [&](std::int64_t x) { return sc.field().mul(x, twist) == 1; });
      table.set(Generator::e0_twist(i, j), int_pow(q, dim));
    }
  }
  return table;
}

Integer brute_fixed_sym_a1(std::int64_t n, const Character& chi, const P1Scenario& sc,
                           const GroupElement& g) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "degree must be nonnegative");
  const auto q = sc.q();
  std::int64_t total = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    total *= q;
    if (total > kMaxA1Enumeration)
      throw Error(ErrorCode::too_large, "q^n exceeds the A^1 enumeration bound");
  }
  const auto& F = sc.field();
  const auto c = sc.value(chi, g);

  // f(x) = x^n + sum_{k<n} a_k x^k maps to c^n f(x/c), whose x^k coefficient
  // is a_k c^(n-k).
  const auto len = static_cast<std::size_t>(n);
  std::vector<std::int64_t> scale(len);
  for (std::size_t k = 0; k < len; ++k) scale[k] = F.pow(c, n - static_cast<std::int64_t>(k));

  std::vector<std::int64_t> coeffs(len, 0);
  std::int64_t fixed = 0;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    bool same = true;
    for (std::size_t k = 0; k < len && same; ++k) same = F.mul(coeffs[k], scale[k]) == coeffs[k];
    if (same) ++fixed;
    for (std::size_t k = 0; k < len; ++k) {
      if (++coeffs[k] < q) break;
      coeffs[k] = 0;
    }
  }
  return Integer(static_cast<long>(fixed));
}

namespace {

// Depth-first walk over tuples (1, v_{lead+1}, ..., v_n) that are fixed so
// far: the image of the normalized point has entries w_k v_k / w_lead, so a
// coordinate is consistent iff w_k v_k == w_lead v_k.
class FixedPointWalk {
 public:
  FixedPointWalk(std::int64_t q, std::vector<std::int64_t> weights)
      : q_(q), w_(std::move(weights)) {}

  std::uint64_t count() {
    std::uint64_t total = 0;
    for (std::size_t lead = 0; lead < w_.size(); ++lead) {
      mu_ = w_[lead];
      total += walk(lead + 1);
    }
    return total;
  }

 private:
  std::uint64_t walk(std::size_t k) const {
    if (k == w_.size()) return 1;
    const auto wk = w_[k];
    std::uint64_t total = 0;
    // Running products wk*v and mu*v mod q for v = 0, 1, ..., q-1.
    std::int64_t image = 0;
    std::int64_t scaled = 0;
    const bool last = k + 1 == w_.size();
    for (std::int64_t v = 0; v < q_; ++v) {
      if (image == scaled) total += last ? 1 : walk(k + 1);
      image += wk;
      if (image >= q_) image -= q_;
      scaled += mu_;
      if (scaled >= q_) scaled -= q_;
    }
    return total;
  }

  std::int64_t q_;
  std::vector<std::int64_t> w_;
  std::int64_t mu_ = 1;
};

}  // namespace

Integer brute_fixed_sym_p1(std::int64_t n, const P1Scenario& sc, const GroupElement& g) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "degree must be nonnegative");
  const auto q = sc.q();
  if ((int_pow(q, n + 1) - 1) / (q - 1) > kMaxP1Enumeration)
    throw Error(ErrorCode::too_large, "#P^n(F_q) exceeds the P^1 enumeration bound");
  const auto k = element_index(sc, g);
  // Moving the divisor of F(x, y) by [x : y] -> [zeta^k x : y] gives the form
  // F(zeta^{-k} x, y): the x^a y^(n-a) coefficient is scaled by zeta^{-a k}.
  std::vector<std::int64_t> w(static_cast<std::size_t>(n + 1));
  for (std::int64_t a = 0; a <= n; ++a) w[static_cast<std::size_t>(a)] = sc.root(-a * k);
  FixedPointWalk walk(q, std::move(w));
  const auto fixed = walk.count();
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(fixed), 0, 0, &fixed);
  return out;
}

std::vector<Integer> classical_sym_counts(const std::vector<Integer>& point_counts, std::size_t n) {
  if (point_counts.size() < n)
    throw Error(ErrorCode::invalid_argument,
                "need N_1..N_" + std::to_string(n) + ", got " + std::to_string(point_counts.size()));
  // Z = exp(P) with P = sum N_i t^i / i satisfies Z' = P' Z, so
  // k c_k = sum_{i=1}^k N_i c_{k-i}.
  std::vector<mpq_class> c(n + 1);
  c[0] = 1;
  std::vector<Integer> out{Integer(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += mpq_class(point_counts[i - 1]) * c[k - i];
    acc /= static_cast<unsigned long>(k);
    acc.canonicalize();
    if (acc.get_den() != 1 || acc < 0)
      throw Error(ErrorCode::inconsistent_counts,
                  "c_" + std::to_string(k) + " = " + acc.get_str() + " is not a nonnegative integer");
    c[k] = acc;
    out.push_back(acc.get_num());
  }
  return out;
}

Integer count_curve_points(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t s) {
  if (p <= 3) throw Error(ErrorCode::unsupported, "curve point counting needs p > 3");
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a prime below 2^31");
  if (s < 1) throw Error(ErrorCode::invalid_argument, "extension degree must be >= 1");
  const PrimeField F(p);
  a = ((a % p) + p) % p;
  b = ((b % p) + p) % p;
  const auto disc = (4 * F.mul(F.mul(a, a), a) + 27 * F.mul(b, b)) % p;
  if (disc == 0) throw Error(ErrorCode::singular_curve, "4a^3 + 27b^2 vanishes mod p");

  std::vector<std::int64_t> square_roots(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) ++square_roots[static_cast<std::size_t>(F.mul(y, y))];
  std::int64_t n1 = 1;  // point at infinity
  for (std::int64_t x = 0; x < p; ++x) {
    const auto rhs = (F.mul(F.mul(x, x), x) + F.mul(a, x) + b) % p;
    n1 += square_roots[static_cast<std::size_t>(rhs)];
  }
  if (s == 1) return Integer(static_cast<long>(n1));

  // t_s = a_p t_{s-1} - p t_{s-2}, N_s = p^s + 1 - t_s.
  const Integer ap = p + 1 - n1;
  Integer prev = 2;
  Integer cur = ap;
  for (std::int64_t k = 2; k <= s; ++k) {
    Integer next = ap * cur - Integer(static_cast<long>(p)) * prev;
    prev = cur;
    cur = next;
  }
  return int_pow(p, s) + 1 - cur;
}

}  // namespace equimot
