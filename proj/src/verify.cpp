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

#include "equimot/verify.hpp"

#include <algorithm>
#include <functional>

#include "equimot/error.hpp"
#include "equimot/ffrealize.hpp"
#include "equimot/series.hpp"
#include "equimot/zeta.hpp"

namespace equimot {

void VerifyReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back(CheckResult{std::move(name), passed, std::move(detail)});
}

std::size_t VerifyReport::passed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; }));
}

std::string VerifyReport::summary() const {
  std::string out;
  for (const auto& c : checks_)
    if (!c.passed) out += "FAIL " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  out += std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed\n";
  return out;
}

namespace {

// Fails before any work when the largest enumeration would exceed its bound:
// q^nmax monic polynomials, or #P^nmax(F_q) binary forms.
void require_feasible(std::int64_t q, std::int64_t nmax, bool projective) {
  Integer size = 0;
  Integer power = 1;
  for (std::int64_t k = 0; k <= nmax; ++k) {
    size = projective ? size + power : power;
    power *= q;
  }
  const auto bound = projective ? kMaxP1Enumeration : kMaxA1Enumeration;
  if (size > bound)
    throw Error(ErrorCode::too_large, "enumeration of " + size.get_str() + " points exceeds " + std::to_string(bound));
}

std::string residues_text(const Residues& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

template <class Term>
PowerSeries term_series(std::size_t order, Term&& term) {
  std::vector<RingElement> c;
  for (std::size_t n = 0; n <= order; ++n) c.push_back(term(static_cast<std::int64_t>(n)));
  return PowerSeries(std::move(c));
}

// Multisets of size k from `chars`, as nondecreasing index sequences.
void for_each_multiset(const std::vector<Character>& chars, std::size_t k,
                       const std::function<void(const std::vector<Character>&)>& visit) {
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Character> pick;
    for (auto i : idx) pick.push_back(chars[i]);
    visit(pick);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == chars.size()) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (auto p = pos; p < k; ++p) idx[p] = idx[pos - 1];
  }
}

}  // namespace

VerifyReport verify_cross(const AbelianGroup& group, std::size_t order) {
  VerifyReport report;
  const auto chars = group.characters();
  for (const auto& chi : chars) {
    const auto w = zeta_affine_line(chi, group);
    const auto f = term_series(order, [&](std::int64_t n) { return sym_affine_line(n, chi); });
    report.add("a1 chi=" + residues_text(chi.residues()), witness_check(w, f));
  }
  const std::size_t max_k = group.order() <= 6 ? 3 : 2;
  for (std::size_t k = 1; k <= max_k; ++k) {
    for_each_multiset(chars, k, [&](const std::vector<Character>& pick) {
      const auto w = zeta_affine_space(pick, group);
      const auto f = term_series(order, [&](std::int64_t n) { return sym_affine_space(n, pick); });
      std::string name = "ak chars=";
      for (const auto& c : pick) name += residues_text(c.residues());
      report.add(name, witness_check(w, f));
    });
  }
  for (std::int64_t genus = 0; genus <= 2; ++genus) {
    const CurveSpec spec(genus, group);
    const auto w = zeta_curve(spec);
    const auto f = term_series(order, [&](std::int64_t n) { return sym_curve_class(n, spec); });
    report.add("curve genus=" + std::to_string(genus), ps_expand(w, order) == f && witness_check(w, f));
  }
  return report;
}

VerifyReport verify_a1(std::int64_t q, std::int64_t r, std::int64_t nmax) {
  const P1Scenario sc(q, r);
  require_feasible(q, nmax, false);
  VerifyReport report;
  for (const auto& g : sc.group().elements()) {
    const auto table = scaling_affine_table(sc, g);
    for (const auto& chi : sc.group().characters()) {
      for (std::int64_t n = 0; n <= nmax; ++n) {
        const auto symbolic = realize(sym_affine_line(n, chi), table);
        const auto brute = brute_fixed_sym_a1(n, chi, sc, g);
        report.add("a1 g=" + std::to_string(g.residues()[0]) + " chi=" + std::to_string(chi.residues()[0]) +
                       " n=" + std::to_string(n),
                   symbolic == brute, symbolic.get_str() + " vs " + brute.get_str());
      }
    }
  }
  return report;
}

VerifyReport verify_p1(std::int64_t q, std::int64_t r, std::int64_t nmax) {
  const P1Scenario sc(q, r);
  require_feasible(q, nmax, true);
  const CurveSpec spec(0, sc.group());
  VerifyReport report;
  for (const auto& g : sc.group().elements()) {
    const auto table = p1_table(sc, g, spec);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const auto symbolic = realize(sym_curve_class(n, spec), table);
      const auto brute = brute_fixed_sym_p1(n, sc, g);
      report.add("p1 g=" + std::to_string(g.residues()[0]) + " n=" + std::to_string(n), symbolic == brute,
                 symbolic.get_str() + " vs " + brute.get_str());
    }
  }
  return report;
}

VerifyReport verify_weil(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t nmax) {
  if (nmax < 1) throw Error(ErrorCode::invalid_argument, "nmax must be at least 1");
  VerifyReport report;
  std::vector<Integer> counts;
  for (std::int64_t s = 1; s <= nmax; ++s) counts.push_back(count_curve_points(a, b, p, s));

  const Integer trace = Integer(static_cast<long>(p + 1)) - counts[0];
  report.add("hasse |a_p| <= 2 sqrt(p)", trace * trace <= 4 * p, "a_p = " + trace.get_str());

  const auto c = classical_sym_counts(counts, static_cast<std::size_t>(nmax));
  const Integer P(static_cast<long>(p));
  Integer pn = 1;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    pn *= P;
    const Integer expected = counts[0] * ((pn - 1) / (P - 1));
    report.add("riemann-roch n=" + std::to_string(n), c[static_cast<std::size_t>(n)] == expected,
               c[static_cast<std::size_t>(n)].get_str() + " vs " + expected.get_str());
  }
  for (std::int64_t n = 3; n <= nmax; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const Integer rhs = (1 + P) * c[k - 1] - P * c[k - 2];
    report.add("recurrence n=" + std::to_string(n), c[k] == rhs, c[k].get_str() + " vs " + rhs.get_str());
  }
  return report;
}

}  // namespace equimot
