// Copyright 2026 The Sylvester Sums Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sylvester/sums.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "support/naive.hpp"

namespace sylvester {
namespace {

FieldElement Q(const Rational& q) { return FieldElement::rational(q); }

FieldElement zeta(std::uint32_t n, std::uint64_t k = 1) {
  return FieldElement::generator(make_cyclotomic_field(n)).pow(k);
}

FieldElement brute(const GeneratorSet& gens, unsigned mu, const FieldElement& lambda) {
  return testing::naive_sum(testing::naive_gaps(gens.values()), mu, lambda);
}

ErrorKind error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

const GeneratorSet kFour = validate_generators({5, 17, 19, 23});
const GeneratorSet kThree = validate_generators({3, 11, 17});

TEST(General, PublishedMuTwo) {
  EXPECT_EQ(weighted_power_sum(kFour, 2, Q(-1), 5).value, Q(-116));
  EXPECT_EQ(weighted_power_sum(kFour, 2, Q(2), 5).value, Q(BigInt("2110129433818")));

  const auto f = make_quadratic_field(-3);
  const FieldElement omega(f, {Rational(-1, 2), Rational(1, 2)});
  const FieldElement expected(f, {Rational(-443, 2), Rational(391, 2)});
  EXPECT_EQ(weighted_power_sum(kFour, 2, omega, 5).value, expected);
}

TEST(General, MuZeroWeightedCount) {
  // 2 + 4 + 16 + 32 + 128 + 1024 + 8192 over the gaps {1,2,4,5,7,10,13}
  EXPECT_EQ(weighted_power_sum(validate_generators({3, 8}), 0, Q(2), 3).value, Q(9398));
}

TEST(General, Preconditions) {
  EXPECT_EQ(error_of([] { weighted_power_sum(kFour, 2, Q(1), 5); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { weighted_power_sum(kFour, 2, Q(0), 5); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { weighted_power_sum(kFour, 1, zeta(5), 5); }), ErrorKind::PreconditionViolated);
}

TEST(MuTwo, Published) {
  EXPECT_EQ(weighted_sum_mu2(kFour, Q(-1), 5).value, Q(-116));
  EXPECT_EQ(weighted_sum_mu2(kFour, Q(2), 5).value, Q(BigInt("2110129433818")));
  EXPECT_TRUE(weighted_sum_mu2(validate_generators({1, 2}), Q(2), 1).value.is_zero());
}

TEST(MuOne, Published) {
  EXPECT_EQ(weighted_sum_mu1(kThree, Q(-2), 3).value, Q(-9008090));
  EXPECT_TRUE(weighted_sum_mu1(validate_generators({1, 5}), Q(3), 1).value.is_zero());
}

TEST(MuOne, ZetaEightAgreesWithBruteForce) {
  // Brute force over {1,2,4,5,7,10,13} gives -4 - 17z + 12z^2 - 7z^3, which is
  // -(4+5*sqrt(2)) + 12(1-sqrt(2))*sqrt(-1) with sqrt(2) = z + z^7, sqrt(-1) = z^2.
  const auto gens = validate_generators({3, 8});
  const auto value = weighted_sum_mu1(gens, zeta(8), 3).value;
  EXPECT_EQ(value, FieldElement(make_cyclotomic_field(8), {-4, -17, 12, -7}));
  EXPECT_EQ(value, brute(gens, 1, zeta(8)));
}

TEST(RootOfUnity, Examples) {
  const auto g = validate_generators({4, 6, 9});
  const auto value = weighted_sum_mu1_root_of_unity(g, zeta(4), 4).value;
  EXPECT_EQ(value, FieldElement(make_cyclotomic_field(4), {-2, -15}));
  EXPECT_EQ(value, brute(g, 1, zeta(4)));

  EXPECT_EQ(weighted_sum_mu1_root_of_unity(validate_generators({5, 15, 6}), Q(-1), 6).value, Q(-24));
  EXPECT_EQ(error_of([] { weighted_sum_mu1_root_of_unity(kThree, Q(-1), 3); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { weighted_sum_mu1_root_of_unity(kThree, Q(1), 3); }), ErrorKind::PreconditionViolated);
}

TEST(Unweighted, PublishedPowerSums) {
  const BigInt expected[] = {10, 85, 1045, 15205, 241813, 4049725};
  for (unsigned mu = 0; mu <= 5; ++mu) EXPECT_EQ(unweighted_power_sum(kThree, mu, 3).value, Q(expected[mu])) << mu;
  for (unsigned mu = 0; mu <= 4; ++mu)
    EXPECT_TRUE(unweighted_power_sum(validate_generators({1, 9}), mu, 1).value.is_zero());
}

TEST(Unweighted, AnyPivot) {
  for (const auto pivot : kThree)
    for (unsigned mu = 0; mu <= 5; ++mu)
      EXPECT_EQ(unweighted_power_sum(kThree, mu, pivot).value, brute(kThree, mu, Q(1))) << pivot << " " << mu;
}

TEST(Alternating, Examples) {
  EXPECT_EQ(alternating_sum(kThree).value, Q(-5));
  EXPECT_EQ(alternating_sum(kFour).value, Q(10));
  EXPECT_EQ(alternating_sum(kFour).value, brute(kFour, 1, Q(-1)));
  EXPECT_TRUE(alternating_sum(validate_generators({1, 3})).value.is_zero());
  EXPECT_EQ(alternating_sum(validate_generators({4, 7})).pivot_used, 7U);
  EXPECT_EQ(error_of([] { alternating_sum(apery_set(validate_generators({4, 7}), 4)); }),
            ErrorKind::PreconditionViolated);
}

TEST(TwoVar, Closed) {
  EXPECT_EQ(closed_two_var(3, 8, Q(2)).value, Q(117866));
  EXPECT_EQ(closed_two_var(3, 8, Q(2)).value, brute(validate_generators({3, 8}), 1, Q(2)));
  EXPECT_EQ(closed_two_var(2, 3, Q(-2)).value, Q(-2));
  EXPECT_EQ(closed_two_var(2, 3, Q(-2)).value, weighted_sum_mu1(validate_generators({2, 3}), Q(-2), 2).value);
  EXPECT_EQ(error_of([] { closed_two_var(3, 8, zeta(8)); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { closed_two_var(4, 6, Q(2)); }), ErrorKind::NotCoprime);
}

TEST(TwoVar, Degenerate) {
  const auto value = closed_two_var_degenerate(3, 8, zeta(8)).value;
  EXPECT_EQ(value, FieldElement(make_cyclotomic_field(8), {-4, -17, 12, -7}));
  EXPECT_EQ(closed_two_var_degenerate(3, 8, Q(-1)).value, Q(-10));
  EXPECT_EQ(closed_two_var_degenerate(2, 3, zeta(3)).value, zeta(3));
  EXPECT_EQ(error_of([] { closed_two_var_degenerate(3, 8, Q(2)); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { closed_two_var_degenerate(3, 8, Q(1)); }), ErrorKind::PreconditionViolated);
}

TEST(ThreeVar, Context) {
  const auto ctx = ThreeVarContext::make(6, 9, 10);
  EXPECT_EQ(ctx.r, 3U);
  EXPECT_EQ(ctx.s, 2U);
  EXPECT_EQ(ctx.l1, 18U);
  EXPECT_EQ(ctx.l2, 30U);
  EXPECT_EQ(ctx.b * ctx.s, ctx.l1);
  EXPECT_EQ(ctx.c * ctx.r, ctx.l2);
  auto values = ctx.apery_values();
  std::sort(values.begin(), values.end());
  auto apery = apery_set(validate_generators({6, 9, 10}), 6).m;
  std::sort(apery.begin(), apery.end());
  EXPECT_EQ(values, apery);

  EXPECT_EQ(error_of([] { ThreeVarContext::make(4, 6, 9); }), ErrorKind::ConditionNotMet);
  EXPECT_EQ(error_of([] { ThreeVarContext::make(6, 9, 12); }), ErrorKind::NotCoprime);
}

TEST(ThreeVar, Closed) {
  const auto ctx = ThreeVarContext::make(6, 9, 10);
  EXPECT_EQ(closed_three_var(ctx, Q(2)).value, Q(195527810));

  const auto f = make_quadratic_field(5);
  const FieldElement lambda(f, {0, Rational(-1, 5)});
  const FieldElement expected(f, {Rational(4 * 34971875LL, 244140625LL), Rational(-4 * 22709912LL, 244140625LL)});
  EXPECT_EQ(closed_three_var(ctx, lambda).value, expected);

  EXPECT_EQ(closed_three_var(ctx, Q(3)).value, weighted_sum_mu1(validate_generators({6, 9, 10}), Q(3), 6).value);
  EXPECT_EQ(closed_three_var(ctx, Q(3)).value, Q(BigInt("2167578201612")));
  EXPECT_EQ(error_of([&] { closed_three_var(ctx, Q(-1)); }), ErrorKind::PreconditionViolated);
}

TEST(ThreeVar, Degenerate) {
  const auto ctx = ThreeVarContext::make(5, 15, 6);
  EXPECT_EQ(closed_three_var_degenerate(ctx, Q(-1)).value, Q(-24));
  EXPECT_EQ(error_of([&] { closed_three_var_degenerate(ctx, zeta(3)); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([&] { closed_three_var_degenerate(ctx, Q(2)); }), ErrorKind::PreconditionViolated);
}

TEST(Dispatch, Routing) {
  auto r = dispatch_sum({kThree, 1, Q(-2)});
  EXPECT_EQ(r.value, Q(-9008090));
  EXPECT_EQ(r.formula_used, Formula::general);
  EXPECT_EQ(r.pivot_used, 3U);

  r = dispatch_sum({validate_generators({5, 15, 6}), 1, Q(-1)});
  EXPECT_EQ(r.value, Q(-24));
  EXPECT_EQ(r.formula_used, Formula::general);
  EXPECT_EQ(r.pivot_used, 5U);

  r = dispatch_sum({validate_generators({2, 3}), 3, Q(1)});
  EXPECT_EQ(r.value, Q(1));
  EXPECT_EQ(r.formula_used, Formula::unweighted_bernoulli);

  r = dispatch_sum({validate_generators({1, 3}), 2, zeta(5)});
  EXPECT_TRUE(r.value.is_zero());
  EXPECT_EQ(r.formula_used, Formula::empty);
  EXPECT_FALSE(r.pivot_used.has_value());

  // zeta_4^4 = 1 skips pivot 4.
  r = dispatch_sum({validate_generators({4, 6, 9}), 1, zeta(4)});
  EXPECT_EQ(r.pivot_used, 6U);

  EXPECT_EQ(error_of([] { dispatch_sum({kThree, 1, Q(0)}); }), ErrorKind::InvalidWeight);
}

TEST(Dispatch, LambdaOneKeepsField) {
  const auto one8 = zeta(8, 8);
  const auto r = dispatch_sum({kThree, 1, one8});
  EXPECT_EQ(r.value, FieldElement::from_rational(make_cyclotomic_field(8), 85));
}

TEST(Forced, EachFormulaOnItsHome) {
  EXPECT_EQ(evaluate_formula({kFour, 2, Q(2)}, Formula::mu2).value, Q(BigInt("2110129433818")));
  EXPECT_EQ(evaluate_formula({kThree, 1, Q(-2)}, Formula::mu1).value, Q(-9008090));
  EXPECT_EQ(evaluate_formula({validate_generators({5, 15, 6}), 1, Q(-1)}, Formula::mu1_root_of_unity).value, Q(-24));
  EXPECT_EQ(evaluate_formula({kThree, 4, Q(1)}, Formula::unweighted_bernoulli).value, Q(241813));
  EXPECT_EQ(evaluate_formula({kThree, 1, Q(-1)}, Formula::alternating).value, Q(-5));
  EXPECT_EQ(evaluate_formula({validate_generators({3, 8}), 1, Q(2)}, Formula::two_var_closed).value, Q(117866));
  EXPECT_EQ(evaluate_formula({validate_generators({3, 8}), 1, zeta(8)}, Formula::two_var_degenerate).value,
            FieldElement(make_cyclotomic_field(8), {-4, -17, 12, -7}));
  // lambda^3 == 1 on the smaller generator: roles swap.
  EXPECT_EQ(evaluate_formula({validate_generators({3, 8}), 1, zeta(3)}, Formula::two_var_degenerate).value,
            brute(validate_generators({3, 8}), 1, zeta(3)));
  EXPECT_EQ(evaluate_formula({validate_generators({6, 9, 10}), 1, Q(2)}, Formula::three_var_closed).value,
            Q(195527810));
  EXPECT_EQ(evaluate_formula({validate_generators({5, 15, 6}), 1, Q(-1)}, Formula::three_var_degenerate).value,
            Q(-24));
  // 4 does not divide lcm(6, 9) but 6 divides lcm(4, 9).
  const auto g = validate_generators({4, 6, 9});
  EXPECT_EQ(evaluate_formula({g, 1, Q(2)}, Formula::three_var_closed).value, brute(g, 1, Q(2)));
}

TEST(Forced, PreconditionsDetected) {
  EXPECT_EQ(error_of([] { evaluate_formula({kFour, 1, Q(2)}, Formula::mu2); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(2)}, Formula::mu1_root_of_unity); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(2)}, Formula::unweighted_bernoulli); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(1)}, Formula::general); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(2)}, Formula::two_var_closed); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({validate_generators({5, 7, 11}), 1, Q(2)}, Formula::three_var_closed); }),
            ErrorKind::ConditionNotMet);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(2)}, Formula::oracle); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_of([] { evaluate_formula({kThree, 1, Q(2)}, Formula::empty); }), ErrorKind::PreconditionViolated);
}

TEST(FormulaNames, RoundTrip) {
  for (const auto& [value, name] : kFormulaNames) EXPECT_EQ(formula_from_string(name), value);
  EXPECT_FALSE(formula_from_string("nope").has_value());
}

// Randomized agreement between routes.

std::vector<FieldElement> weights() {
  return {Q(2), Q(-2), Q(3), Q(-3), Q(Rational(1, 2)), Q(Rational(-1, 2)), Q(-1),
          zeta(3), zeta(4), zeta(5), zeta(8)};
}

TEST(Properties, SpecializationsAgreeWithGeneral) {
  std::mt19937_64 rng(101);
  const auto ws = weights();
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 30));
    const auto& lambda = ws[trial % ws.size()];
    for (const auto pivot : gens) {
      if (lambda.pow(pivot).is_one()) continue;
      const auto apery = apery_set(gens, pivot);
      EXPECT_EQ(weighted_power_sum(apery, 1, lambda).value, weighted_sum_mu1(apery, lambda).value);
      EXPECT_EQ(weighted_power_sum(apery, 2, lambda).value, weighted_sum_mu2(apery, lambda).value);
    }
  }
}

TEST(Properties, GeneralMatchesBruteForceIncludingMuZero) {
  std::mt19937_64 rng(103);
  const auto ws = weights();
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 25));
    const auto& lambda = ws[trial % ws.size()];
    const auto gaps = testing::naive_gaps(gens.values());
    for (unsigned mu = 0; mu <= 3; ++mu) {
      const auto r = dispatch_sum({gens, mu, lambda});
      EXPECT_EQ(r.value, testing::naive_sum(gaps, mu, lambda));
    }
  }
}

TEST(Properties, PivotIndependence) {
  std::mt19937_64 rng(107);
  const auto ws = weights();
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 30));
    const auto& lambda = ws[trial % ws.size()];
    std::optional<FieldElement> first;
    for (const auto pivot : gens) {
      if (lambda.pow(pivot).is_one()) continue;
      const auto value = weighted_power_sum(gens, 2, lambda, pivot).value;
      if (!first)
        first = value;
      else
        EXPECT_EQ(value, *first);
    }
  }
}

TEST(Properties, RootOfUnityFormAgreesWithAlternatePivot) {
  std::mt19937_64 rng(109);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 30));
    for (const std::uint32_t n : {2U, 3U, 4U, 6U, 8U}) {
      const FieldElement lambda = n == 2 ? Q(-1) : zeta(n);
      if (!lambda.pow(gens.min()).is_one()) continue;
      const auto other = admissible_pivot(gens, lambda);
      ASSERT_TRUE(other.has_value());
      EXPECT_EQ(weighted_sum_mu1_root_of_unity(gens, lambda, gens.min()).value,
                weighted_power_sum(gens, 1, lambda, *other).value);
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Properties, ThreeVarClosedFormsAgreeWithMuOne) {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<std::uint64_t> dist(2, 30);
  const auto ws = weights();
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 60; ++trial) {
    const std::uint64_t a = dist(rng), b = dist(rng), c = dist(rng);
    ThreeVarContext ctx;
    try {
      ctx = ThreeVarContext::make(a, b, c);
    } catch (const Error&) {
      continue;
    }
    const auto gens = validate_generators({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                           static_cast<std::int64_t>(c)});
    const auto& lambda = ws[trial % ws.size()];
    const bool ra = lambda.pow(a).is_one(), rb = lambda.pow(b).is_one(), rc = lambda.pow(c).is_one();
    if (ra) continue;
    const auto expected = brute(gens, 1, lambda);
    if (!rb && !rc) {
      EXPECT_EQ(closed_three_var(ctx, lambda).value, expected);
      EXPECT_EQ(closed_three_var(ctx, lambda).value, weighted_sum_mu1(gens, lambda, a).value);
      ++checked;
    } else if (!rb && rc) {
      EXPECT_EQ(closed_three_var_degenerate(ctx, lambda).value, expected);
      ++checked;
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(Properties, UnweightedMatchesGenusAndGapSum) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 40));
    const auto apery = apery_set(gens);
    EXPECT_EQ(unweighted_power_sum(apery, 0).value, Q(sylvester_number(apery)));
    EXPECT_EQ(unweighted_power_sum(apery, 1).value, Q(sylvester_sum(apery)));
  }
}

TEST(Properties, AlternatingMatchesDispatch) {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = validate_generators(testing::random_generators(rng, 2 + trial % 3, 40));
    EXPECT_EQ(alternating_sum(gens).value, dispatch_sum({gens, 1, Q(-1)}).value);
  }
}

TEST(Properties, TwoVarClosedFormsMatchBruteForce) {
  const auto ws = weights();
  for (std::uint64_t a = 1; a <= 12; ++a) {
    for (std::uint64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto gens = validate_generators({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      for (const auto& lambda : ws) {
        const bool ra = lambda.pow(a).is_one(), rb = lambda.pow(b).is_one();
        const auto expected = brute(gens, 1, lambda);
        if (!ra && !rb) EXPECT_EQ(closed_two_var(a, b, lambda).value, expected) << a << "," << b;
        if (!ra && rb) EXPECT_EQ(closed_two_var_degenerate(a, b, lambda).value, expected) << a << "," << b;
        if (ra && !rb) EXPECT_EQ(closed_two_var_degenerate(b, a, lambda).value, expected) << a << "," << b;
      }
    }
  }
}

}  // namespace
}  // namespace sylvester
