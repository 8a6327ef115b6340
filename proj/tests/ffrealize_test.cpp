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

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <tuple>

#include "equimot/error.hpp"
#include "equimot/zeta.hpp"
#include "test_support.hpp"

namespace equimot {
namespace {

Generator aff(std::int64_t a) { return Generator::aff({a}); }
RingElement el(const Generator& g) { return RingElement(g); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::unsupported;
}

Integer ipow(std::int64_t b, std::int64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return out;
}

// Fixed points of a diagonal action on P^n: disjoint projectivized eigenspaces.
// Coordinate a of the binary form x^a y^(n-a) is scaled by zeta^(a*g).
Integer eigenspace_count(std::int64_t q, std::int64_t r, std::int64_t g, std::int64_t n) {
  std::vector<std::int64_t> mult(static_cast<std::size_t>(r), 0);
  for (std::int64_t a = 0; a <= n; ++a) ++mult[static_cast<std::size_t>(a * g % r)];
  Integer total = 0;
  for (auto m : mult) total += (ipow(q, m) - 1) / (q - 1);
  return total;
}

TEST(Realize, Examples) {
  GeneratorTable t;
  t.set(aff(0), 5);
  EXPECT_EQ(realize(el(aff(0)), t), 5);
  EXPECT_EQ(realize(pow(el(aff(0)) + 1, 2), t), 36);
  EXPECT_EQ(realize(RingElement(0L), GeneratorTable{}), 0);
  EXPECT_EQ(realize(RingElement(-7L), GeneratorTable{}), -7);
}

TEST(Realize, UncoveredGeneratorListed) {
  GeneratorTable t;
  t.set(aff(0), 5);
  try {
    realize(el(aff(0)) * el(Generator::sym_base(9)) + el(Generator::e0_twist(1, 2)), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::uncovered_generator);
    const std::string what = e.what();
    EXPECT_NE(what.find("SymC(9)"), std::string::npos);
    EXPECT_NE(what.find("E0(1,2)"), std::string::npos);
    EXPECT_EQ(what.find("L"), std::string::npos);
  }
}

TEST(Realize, NegativeTableValueRejected) {
  GeneratorTable t;
  EXPECT_EQ(code_of([&] { t.set(aff(0), -1); }), ErrorCode::invalid_argument);
}

TEST(Realize, IsARingHomomorphism) {
  std::mt19937_64 rng(500);
  for (int k = 0; k < 500; ++k) {
    const auto t = testing::random_table(rng);
    const auto a = testing::random_element(rng);
    const auto b = testing::random_element(rng);
    ASSERT_EQ(realize(a + b, t), realize(a, t) + realize(b, t));
    ASSERT_EQ(realize(a * b, t), realize(a, t) * realize(b, t));
    ASSERT_EQ(realize(-a, t), -realize(a, t));
  }
}

TEST(PrimeField, Basics) {
  EXPECT_EQ(PrimeField(5).primitive_root(), 2);
  EXPECT_EQ(PrimeField(7).primitive_root(), 3);
  EXPECT_EQ(PrimeField(13).primitive_root(), 2);
  EXPECT_EQ(PrimeField(13).multiplicative_order(8), 4);
  EXPECT_EQ(PrimeField(13).inv(8), 5);
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(1));
}

TEST(P1Scenario, RootOfUnityChoice) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {7, 3}, {7, 6}, {13, 3}, {13, 4}, {13, 6}}) {
    const P1Scenario sc(q, r);
    EXPECT_EQ(sc.field().multiplicative_order(sc.zeta_r()), r);
    EXPECT_EQ(sc.zeta_r(), sc.field().pow(sc.field().primitive_root(), (q - 1) / r));
  }
  EXPECT_EQ(P1Scenario(13, 4).zeta_r(), 8);
  EXPECT_EQ(code_of([] { P1Scenario(9, 2); }), ErrorCode::unsupported_scenario);
  EXPECT_EQ(code_of([] { P1Scenario(7, 4); }), ErrorCode::unsupported_scenario);
}

TEST(P1Table, FiveTwoNontrivial) {
  const P1Scenario sc(5, 2);
  const auto g = sc.group().element({1});
  const auto t = p1_table(sc, g, CurveSpec(0, sc.group()));
  EXPECT_EQ(*t.find(Generator::sym_base(1)), 2);
  EXPECT_EQ(*t.find(Generator::sym_base(2)), 7);
  EXPECT_EQ(*t.find(Generator::e0_twist(1, 1)), 5);
  EXPECT_EQ(*t.find(Generator::e0_twist(1, 2)), 5);
  EXPECT_EQ(*t.find(Generator::e0_twist(2, 1)), 25);
  EXPECT_EQ(*t.find(Generator::e0_twist(2, 2)), 5);
  EXPECT_EQ(*t.find(aff(0)), 5);
  EXPECT_EQ(*t.find(aff(1)), 1);
}

TEST(P1Table, IdentityFixesEverything) {
  const P1Scenario sc(5, 4);
  const auto t = p1_table(sc, sc.group().identity(), CurveSpec(0, sc.group()));
  for (std::int64_t a = 0; a < 4; ++a) EXPECT_EQ(*t.find(aff(a)), 5);
  EXPECT_EQ(*t.find(Generator::sym_base(1)), 6);
}

TEST(P1Table, OnlyTrivialLineFixedByGenerator) {
  const P1Scenario sc(13, 4);
  const auto t = p1_table(sc, sc.group().element({1}), CurveSpec(0, sc.group()));
  EXPECT_EQ(*t.find(aff(0)), 13);
  for (std::int64_t a = 1; a < 4; ++a) EXPECT_EQ(*t.find(aff(a)), 1);
}

TEST(P1Table, SymBaseMatchesEigenspaceCount) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 4}, {13, 6}})
    for (std::int64_t g = 0; g < r; ++g) {
      const P1Scenario sc(q, r);
      const auto t = p1_table(sc, sc.group().element({g}), CurveSpec(0, sc.group()));
      for (std::int64_t n = 1; n <= r; ++n) EXPECT_EQ(*t.find(Generator::sym_base(n)), eigenspace_count(q, r, g, n));
    }
}

TEST(P1Table, RejectsUnsupportedSpecs) {
  const P1Scenario sc(5, 2);
  const auto g = sc.group().element({1});
  EXPECT_EQ(code_of([&] { p1_table(sc, g, CurveSpec(1, sc.group())); }), ErrorCode::unsupported_scenario);
  EXPECT_EQ(code_of([&] { p1_table(sc, g, CurveSpec(0, make_group({4}))); }), ErrorCode::unsupported_scenario);
}

TEST(P1Table, WeightSignFlip) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {13, 3}, {13, 6}}) {
    const P1Scenario sc(q, r);
    const CurveSpec spec(0, sc.group());
    for (const auto& g : sc.group().elements()) {
      const auto a = p1_table(sc, g, spec, WeightConvention::precompose);
      const auto b = p1_table(sc, g, spec, WeightConvention::pushforward);
      for (const auto& [gen, v] : a.entries())
        if (!gen.get_if<E0Twist>()) EXPECT_EQ(v, *b.find(gen)) << gen.to_string();
      for (std::int64_t n = 0; n <= 8; ++n)
        EXPECT_EQ(realize(sym_curve_class(n, spec), a), realize(sym_curve_class(n, spec), b));
    }
  }
}

TEST(BruteForce, AffineExamples) {
  const P1Scenario sc(5, 4);
  const auto chi = sc.group().character({1});
  for (std::int64_t n = 0; n <= 4; ++n) EXPECT_EQ(brute_fixed_sym_a1(n, chi, sc, sc.group().identity()), ipow(5, n));
  EXPECT_EQ(brute_fixed_sym_a1(5, chi, sc, sc.group().element({1})), 5);
  EXPECT_EQ(brute_fixed_sym_a1(3, chi, sc, sc.group().element({1})), 1);
}

TEST(BruteForce, ProjectiveExamples) {
  const P1Scenario sc(5, 2);
  EXPECT_EQ(brute_fixed_sym_p1(3, sc, sc.group().element({1})), 12);
  EXPECT_EQ(brute_fixed_sym_p1(4, sc, sc.group().element({1})), 37);
  EXPECT_EQ(brute_fixed_sym_p1(3, sc, sc.group().identity()), 156);
  EXPECT_EQ(brute_fixed_sym_p1(3, P1Scenario(5, 4), P1Scenario(5, 4).group().identity()), 156);
  EXPECT_EQ(brute_fixed_sym_p1(0, sc, sc.group().element({1})), 1);
}

TEST(BruteForce, ProjectiveMatchesEigenspaceCount) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {7, 3}, {7, 6}})
    for (std::int64_t g = 0; g < r; ++g) {
      const P1Scenario sc(q, r);
      for (std::int64_t n = 0; n <= 5; ++n)
        ASSERT_EQ(brute_fixed_sym_p1(n, sc, sc.group().element({g})), eigenspace_count(q, r, g, n));
    }
}

TEST(BruteForce, EnumerationBounds) {
  const P1Scenario sc(13, 4);
  const auto g = sc.group().element({1});
  EXPECT_EQ(code_of([&] { brute_fixed_sym_a1(7, sc.group().character({1}), sc, g); }), ErrorCode::too_large);
  EXPECT_EQ(code_of([&] { brute_fixed_sym_p1(9, sc, g); }), ErrorCode::too_large);
}

TEST(OracleEquivalence, AffineLine) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {7, 3}, {7, 6}}) {
    const P1Scenario sc(q, r);
    for (const auto& g : sc.group().elements()) {
      const auto t = scaling_affine_table(sc, g);
      for (const auto& chi : sc.group().characters())
        for (std::int64_t n = 0; n <= 4; ++n)
          ASSERT_EQ(realize(sym_affine_line(n, chi), t), brute_fixed_sym_a1(n, chi, sc, g));
    }
  }
}

TEST(OracleEquivalence, ProjectiveLine) {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {7, 3}}) {
    const P1Scenario sc(q, r);
    const CurveSpec spec(0, sc.group());
    for (const auto& g : sc.group().elements()) {
      const auto t = p1_table(sc, g, spec);
      for (std::int64_t n = 0; n <= 6; ++n)
        ASSERT_EQ(realize(sym_curve_class(n, spec), t), brute_fixed_sym_p1(n, sc, g)) << "n=" << n;
    }
  }
}

TEST(OracleEquivalence, PermutedCharacterOrder) {
  const P1Scenario sc(5, 4);
  const auto& G = sc.group();
  const CurveSpec canonical(0, G);
  const CurveSpec permuted(0, G, {G.character({2}), G.character({0}), G.character({3}), G.character({1})});
  bool differs = false;
  for (const auto& g : G.elements()) {
    const auto ta = p1_table(sc, g, canonical);
    const auto tb = p1_table(sc, g, permuted);
    for (std::int64_t n = 0; n <= 8; ++n) {
      const auto a = sym_curve_class(n, canonical);
      const auto b = sym_curve_class(n, permuted);
      differs = differs || a != b;
      ASSERT_EQ(realize(a, ta), realize(b, tb));
      ASSERT_EQ(realize(a, ta), eigenspace_count(5, 4, g.residues()[0], n));
    }
  }
  EXPECT_TRUE(differs);
}

TEST(ClassicalCounts, Examples) {
  std::vector<Integer> p1;
  for (int i = 1; i <= 10; ++i) p1.push_back(ipow(5, i) + 1);
  const auto c = classical_sym_counts(p1, 10);
  EXPECT_EQ(c[2], 31);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(c[n], testing::projective_count(5, n));
  EXPECT_EQ(classical_sym_counts({}, 0), std::vector<Integer>{1});
}

TEST(ClassicalCounts, InconsistentData) {
  EXPECT_EQ(code_of([] { classical_sym_counts({1, 0}, 2); }), ErrorCode::inconsistent_counts);
  EXPECT_EQ(code_of([] { classical_sym_counts({1}, 2); }), ErrorCode::invalid_argument);
}

// Closed points of degree d via Moebius inversion, then the Euler product
// prod_d (1 - t^d)^(-a_d) expanded with integer arithmetic.
std::vector<Integer> euler_product_counts(const std::vector<Integer>& N, std::size_t n) {
  auto mobius = [](std::int64_t k) {
    int mu = 1;
    for (std::int64_t p = 2; p * p <= k; ++p)
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        mu = -mu;
      }
    return k > 1 ? -mu : mu;
  };
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    Integer a = 0;
    for (std::size_t e = 1; e <= d; ++e)
      if (d % e == 0) a += mobius(static_cast<std::int64_t>(d / e)) * N[e - 1];
    a /= static_cast<unsigned long>(d);
    // Multiply by (1 - t^d)^(-a) = sum_k binom(a + k - 1, k) t^(dk).
    std::vector<Integer> next(n + 1, 0);
    for (std::size_t k = 0; k * d <= n; ++k) {
      Integer coeff;
      mpz_bin_ui(coeff.get_mpz_t(), Integer(a + k - 1).get_mpz_t(), k);
      if (k == 0) coeff = 1;
      for (std::size_t m = 0; m + k * d <= n; ++m) next[m + k * d] += coeff * c[m];
    }
    c = next;
  }
  return c;
}

// Points of y^2 = x^3 + ax + b over F_{p^2} = F_p[s]/(s^2 - nr), counted directly.
Integer count_over_quadratic_extension(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t nr = 2;
  while (PrimeField(p).pow(nr, (p - 1) / 2) == 1) ++nr;
  struct E {
    std::int64_t x, y;
  };
  auto mul = [&](E u, E v) {
    return E{(u.x * v.x + u.y * v.y % p * nr) % p, (u.x * v.y + u.y * v.x) % p};
  };
  auto add = [&](E u, E v) { return E{(u.x + v.x) % p, (u.y + v.y) % p}; };
  auto power = [&](E u, std::int64_t e) {
    E out{1, 0};
    while (e) {
      if (e & 1) out = mul(out, u);
      u = mul(u, u);
      e >>= 1;
    }
    return out;
  };
  Integer total = 1;
  for (std::int64_t x0 = 0; x0 < p; ++x0)
    for (std::int64_t x1 = 0; x1 < p; ++x1) {
      const E x{x0, x1};
      const E f = add(add(mul(mul(x, x), x), mul(E{a % p, 0}, x)), E{b % p, 0});
      if (f.x == 0 && f.y == 0) {
        total += 1;
      } else {
        const E chi = power(f, (p * p - 1) / 2);
        if (chi.x == 1 && chi.y == 0) total += 2;
      }
    }
  return total;
}

TEST(CurvePoints, FixtureAndErrors) {
  EXPECT_EQ(count_curve_points(1, 1, 5, 1), 9);
  EXPECT_EQ(code_of([] { count_curve_points(0, 0, 5, 1); }), ErrorCode::singular_curve);
  EXPECT_EQ(code_of([] { count_curve_points(1, 1, 3, 1); }), ErrorCode::unsupported);
  EXPECT_EQ(code_of([] { count_curve_points(1, 1, 9, 1); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { count_curve_points(1, 1, 5, 0); }), ErrorCode::invalid_argument);
}

TEST(CurvePoints, HasseBoundAndExtension) {
  for (std::int64_t p : {5, 7, 11, 13})
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
        const Integer n1 = count_curve_points(a, b, p, 1);
        const Integer trace = p + 1 - n1;
        ASSERT_LE(trace * trace, 4 * p);
        if (p <= 7) ASSERT_EQ(count_curve_points(a, b, p, 2), count_over_quadratic_extension(a, b, p));
      }
}

TEST(ClassicalCounts, GenusOneRiemannRoch) {
  for (auto [a, b, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 5}, {2, 3, 7}, {1, 0, 13}}) {
    std::vector<Integer> N;
    for (int s = 1; s <= 8; ++s) N.push_back(count_curve_points(a, b, p, s));
    const auto c = classical_sym_counts(N, 8);
    EXPECT_EQ(c, euler_product_counts(N, 8));
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(c[n], N[0] * (ipow(p, n) - 1) / (p - 1));
  }
}

TEST(Specialization, TrivialGroupReproducesProjectiveLine) {
  for (std::int64_t q : {5, 7}) {
    GeneratorTable t;
    t.set(aff(0), q);
    t.set(Generator::sym_base(1), q + 1);
    t.set(Generator::e0_twist(1, 1), q * q);
    const auto f = ps_expand(zeta_curve(CurveSpec(0, make_group({1}))), 10);
    std::vector<Integer> N;
    for (int s = 1; s <= 10; ++s) N.push_back(ipow(q, s) + 1);
    const auto c = classical_sym_counts(N, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_EQ(realize(f[n], t), testing::projective_count(q, static_cast<std::int64_t>(n)));
      EXPECT_EQ(realize(f[n], t), c[n]);
    }
  }
}

}  // namespace
}  // namespace equimot
