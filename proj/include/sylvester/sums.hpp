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

/**
 * @file sums.hpp
 * @brief Closed forms for weighted gap sums s_mu^(lambda)(A) = sum_{n gap} lambda^n n^mu.
 *
 * Every evaluator takes the Apéry set of its pivot a and the weight lambda,
 * checks the hypotheses of its closed form exactly (lambda^a == 1 is decided
 * by coefficient comparison, never numerically) and raises
 * ErrorKind::PreconditionViolated when they fail. dispatch_sum picks a valid
 * route for any nonzero weight.
 */

#ifndef SYLVESTER_SUMS_HPP
#define SYLVESTER_SUMS_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylvester/combinatorics.hpp"
#include "sylvester/exactnum.hpp"
#include "sylvester/semigroup.hpp"

namespace sylvester {

enum class Formula {
  empty,                 // 1 is a generator; no gaps
  general,               // arbitrary mu, lambda^a != 1 (Eulerian numbers)
  mu2,                   // mu = 2 specialization
  mu1,                   // mu = 1 specialization
  mu1_root_of_unity,     // mu = 1, lambda^a == 1
  unweighted_bernoulli,  // lambda = 1 (Bernoulli numbers)
  alternating,           // mu = 1, lambda = -1, odd pivot
  two_var_closed,        // A = {a, b}, lambda^a != 1, lambda^b != 1
  two_var_degenerate,    // A = {a, b}, lambda^b == 1
  three_var_closed,      // A = {a, b, c}, a | lcm(b, c)
  three_var_degenerate,  // as above with lambda^c == 1
  oracle,                // brute force over the gap set
};

inline constexpr std::array<std::pair<Formula, std::string_view>, 12> kFormulaNames{{
    {Formula::empty, "empty"},
    {Formula::general, "general"},
    {Formula::mu2, "mu2"},
    {Formula::mu1, "mu1"},
    {Formula::mu1_root_of_unity, "mu1_root_of_unity"},
    {Formula::unweighted_bernoulli, "unweighted_bernoulli"},
    {Formula::alternating, "alternating"},
    {Formula::two_var_closed, "two_var_closed"},
    {Formula::two_var_degenerate, "two_var_degenerate"},
    {Formula::three_var_closed, "three_var_closed"},
    {Formula::three_var_degenerate, "three_var_degenerate"},
    {Formula::oracle, "oracle"},
}};

constexpr std::string_view to_string(Formula f) {
  for (const auto& [value, name] : kFormulaNames)
    if (value == f) return name;
  return "unknown";
}

constexpr std::optional<Formula> formula_from_string(std::string_view name) {
  for (const auto& [value, text] : kFormulaNames)
    if (text == name) return value;
  return std::nullopt;
}

struct SumRequest {
  GeneratorSet gens;
  unsigned mu = 1;
  FieldElement lambda;
};

struct SumResult {
  FieldElement value;
  Formula formula_used = Formula::general;
  std::optional<std::uint64_t> pivot_used;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::PreconditionViolated, message);
}

inline void require_nonzero_weight(const FieldElement& lambda) {
  require(!lambda.is_zero(), "lambda must be nonzero");
}

/// lambda^{m_i} for every Apéry entry.
inline std::vector<FieldElement> weights(const AperySet& apery, const FieldElement& lambda) {
  std::vector<FieldElement> out;
  out.reserve(apery.m.size());
  for (const auto m : apery.m) out.push_back(lambda.pow(m));
  return out;
}

/// sum_i m_i^e * w_i, with 0^0 = 1.
inline FieldElement moment(const AperySet& apery, const std::vector<FieldElement>& w, unsigned e) {
  FieldElement acc = FieldElement::zero(w.front().field());
  for (std::size_t i = 0; i < apery.m.size(); ++i) acc += w[i] * Rational(ipow(BigInt(apery.m[i]), e));
  return acc;
}

/// lambda / (lambda - 1)^2, the contribution of the negative integers shared by the mu = 1 forms.
inline FieldElement negative_tail_mu1(const FieldElement& lambda) {
  const FieldElement inv = (lambda - FieldElement::one(lambda.field())).inverse();
  return lambda * inv * inv;
}

inline std::string pow_text(std::uint64_t e) { return "lambda^" + std::to_string(e); }

}  // namespace detail

/**
 * General closed form for lambda != 0 and lambda^a != 1, a the pivot:
 *
 *   sum_{n=0}^{mu} (-a)^n / (lambda^a - 1)^{n+1} C(mu, n)
 *       * sum_{j=0}^{n} <n, n-j> lambda^{ja} * sum_{i=0}^{a-1} m_i^{mu-n} lambda^{m_i}
 *   + (-1)^{mu+1} / (lambda - 1)^{mu+1} * sum_{j=0}^{mu} <mu, mu-j> lambda^j.
 *
 * mu = 0 is accepted; with 0^0 = 1 and <0, 0> = 1 it yields the weighted gap count.
 */
inline SumResult weighted_power_sum(const AperySet& apery, unsigned mu, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  const FieldPtr& field = lambda.field();
  const FieldElement one = FieldElement::one(field);
  const std::uint64_t a = apery.pivot;
  const FieldElement lambda_a = lambda.pow(a);
  detail::require(!lambda_a.is_one(), detail::pow_text(a) + " == 1");

  const FieldElement inv_d = (lambda_a - one).inverse();
  const auto w = detail::weights(apery, lambda);

  std::vector<FieldElement> lambda_a_pow{one};
  for (unsigned j = 1; j <= mu; ++j) lambda_a_pow.push_back(lambda_a_pow.back() * lambda_a);

  FieldElement value = FieldElement::zero(field);
  FieldElement inv_d_pow = inv_d;
  BigInt neg_a_pow = 1;
  for (unsigned n = 0; n <= mu; ++n) {
    FieldElement eulerian_poly = FieldElement::zero(field);
    for (unsigned j = 0; j <= n; ++j)
      eulerian_poly += lambda_a_pow[j] * Rational(eulerian(n, static_cast<long long>(n) - j));
    const Rational coefficient(neg_a_pow * binomial(mu, n));
    value += eulerian_poly * detail::moment(apery, w, mu - n) * inv_d_pow * coefficient;
    inv_d_pow *= inv_d;
    neg_a_pow *= -BigInt(a);
  }

  FieldElement tail = FieldElement::zero(field);
  FieldElement lambda_pow = one;
  for (unsigned j = 0; j <= mu; ++j) {
    tail += lambda_pow * Rational(eulerian(mu, static_cast<long long>(mu) - j));
    lambda_pow *= lambda;
  }
  tail *= (lambda - one).inverse().pow(mu + 1);
  if (mu % 2 == 0)
    value -= tail;
  else
    value += tail;
  return {std::move(value), Formula::general, a};
}

inline SumResult weighted_power_sum(const GeneratorSet& gens, unsigned mu, const FieldElement& lambda,
                                    std::uint64_t pivot) {
  return weighted_power_sum(apery_set(gens, pivot), mu, lambda);
}

/// mu = 2 specialization of weighted_power_sum.
inline SumResult weighted_sum_mu2(const AperySet& apery, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  const FieldPtr& field = lambda.field();
  const FieldElement one = FieldElement::one(field);
  const std::uint64_t a = apery.pivot;
  const FieldElement lambda_a = lambda.pow(a);
  detail::require(!lambda_a.is_one(), detail::pow_text(a) + " == 1");

  const FieldElement inv_d = (lambda_a - one).inverse();
  const auto w = detail::weights(apery, lambda);
  const Rational ar(a);
  const FieldElement inv_l = (lambda - one).inverse();

  FieldElement value = inv_d * detail::moment(apery, w, 2);
  value -= lambda_a * inv_d * inv_d * detail::moment(apery, w, 1) * (2 * ar);
  value += lambda_a * (lambda_a + one) * inv_d.pow(3) * detail::moment(apery, w, 0) * (ar * ar);
  value -= lambda * (lambda + one) * inv_l.pow(3);
  return {std::move(value), Formula::mu2, a};
}

inline SumResult weighted_sum_mu2(const GeneratorSet& gens, const FieldElement& lambda, std::uint64_t pivot) {
  return weighted_sum_mu2(apery_set(gens, pivot), lambda);
}

/// mu = 1 specialization of weighted_power_sum.
inline SumResult weighted_sum_mu1(const AperySet& apery, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  const FieldElement one = FieldElement::one(lambda.field());
  const std::uint64_t a = apery.pivot;
  const FieldElement lambda_a = lambda.pow(a);
  detail::require(!lambda_a.is_one(), detail::pow_text(a) + " == 1");

  const FieldElement inv_d = (lambda_a - one).inverse();
  const auto w = detail::weights(apery, lambda);

  FieldElement value = inv_d * detail::moment(apery, w, 1);
  value -= lambda_a * inv_d * inv_d * detail::moment(apery, w, 0) * Rational(a);
  value += detail::negative_tail_mu1(lambda);
  return {std::move(value), Formula::mu1, a};
}

inline SumResult weighted_sum_mu1(const GeneratorSet& gens, const FieldElement& lambda, std::uint64_t pivot) {
  return weighted_sum_mu1(apery_set(gens, pivot), lambda);
}

/// mu = 1 with lambda^a == 1, lambda != 1:
/// (1/2a) sum_{i>=1} m_i^2 lambda^i - (1/2) sum_{i>=1} m_i lambda^i + lambda/(lambda-1)^2.
inline SumResult weighted_sum_mu1_root_of_unity(const AperySet& apery, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  detail::require(!lambda.is_one(), "lambda must not be 1");
  const std::uint64_t a = apery.pivot;
  detail::require(lambda.pow(a).is_one(), detail::pow_text(a) + " != 1");

  FieldElement squares = FieldElement::zero(lambda.field());
  FieldElement linear = FieldElement::zero(lambda.field());
  FieldElement lambda_i = lambda;
  for (std::size_t i = 1; i < apery.m.size(); ++i) {
    const Rational m(apery.m[i]);
    squares += lambda_i * (m * m);
    linear += lambda_i * m;
    lambda_i *= lambda;
  }
  FieldElement value = squares * Rational(1, 2 * a) - linear * Rational(1, 2);
  value += detail::negative_tail_mu1(lambda);
  return {std::move(value), Formula::mu1_root_of_unity, a};
}

inline SumResult weighted_sum_mu1_root_of_unity(const GeneratorSet& gens, const FieldElement& lambda,
                                                std::uint64_t pivot) {
  return weighted_sum_mu1_root_of_unity(apery_set(gens, pivot), lambda);
}

/**
 * lambda = 1: sum_{kappa=0}^{mu} sum_{j=1}^{kappa+1} C(mu, kappa) C(kappa+1, j)
 *   (-1)^{j-1} / (kappa+1) a^{kappa-j} B_{kappa-j+1} sum_{i=1}^{a-1} (m_i - i)^j m_i^{mu-kappa}.
 * The value lives in Q.
 */
inline SumResult unweighted_power_sum(const AperySet& apery, unsigned mu) {
  const BigInt a = apery.pivot;
  // moments[j][e] = sum_{i>=1} (m_i - i)^j m_i^e
  std::vector<std::vector<BigInt>> moments(mu + 2, std::vector<BigInt>(mu + 1));
  for (std::size_t i = 1; i < apery.m.size(); ++i) {
    const BigInt shifted = BigInt(apery.m[i]) - i;
    const BigInt m = apery.m[i];
    BigInt shifted_pow = 1;
    for (unsigned j = 0; j <= mu + 1; ++j) {
      BigInt m_pow = 1;
      for (unsigned e = 0; e <= mu; ++e) {
        moments[j][e] += shifted_pow * m_pow;
        m_pow *= m;
      }
      shifted_pow *= shifted;
    }
  }

  Rational value = 0;
  for (unsigned kappa = 0; kappa <= mu; ++kappa) {
    for (unsigned j = 1; j <= kappa + 1; ++j) {
      const unsigned b = kappa + 1 - j;
      const Rational bern = bernoulli(b);
      if (bern == 0) continue;
      // a^{kappa - j}, where kappa - j = b - 1 may be -1
      const Rational a_pow = b == 0 ? Rational(1, a) : Rational(ipow(a, b - 1));
      Rational term = Rational(binomial(mu, kappa) * binomial(kappa + 1, j), kappa + 1) * a_pow * bern *
                      Rational(moments[j][mu - kappa]);
      if (j % 2 == 0) term = -term;
      value += term;
    }
  }
  return {FieldElement::rational(value), Formula::unweighted_bernoulli, apery.pivot};
}

inline SumResult unweighted_power_sum(const GeneratorSet& gens, unsigned mu, std::uint64_t pivot) {
  return unweighted_power_sum(apery_set(gens, pivot), mu);
}

/// sum (-1)^n n over gaps for an odd pivot a:
/// -(1/2) sum (-1)^{m_i} m_i + (a/4) sum (-1)^{m_i} + (a-1)/4, sums over i >= 1.
inline SumResult alternating_sum(const AperySet& apery) {
  const std::uint64_t a = apery.pivot;
  detail::require(a % 2 == 1, "alternating sum needs an odd pivot, got " + std::to_string(a));
  BigInt signed_m = 0;
  BigInt signs = 0;
  for (std::size_t i = 1; i < apery.m.size(); ++i) {
    const bool odd = apery.m[i] % 2 == 1;
    signed_m += odd ? -BigInt(apery.m[i]) : BigInt(apery.m[i]);
    signs += odd ? -1 : 1;
  }
  const Rational value = Rational(-signed_m, 2) + Rational(BigInt(a) * signs, 4) + Rational(a - 1, 4);
  return {FieldElement::rational(value), Formula::alternating, a};
}

/// Uses the smallest odd generator as pivot; one always exists when gcd = 1.
inline SumResult alternating_sum(const GeneratorSet& gens) {
  for (const auto g : gens)
    if (g % 2 == 1) return alternating_sum(apery_set(gens, g));
  throw Error(ErrorKind::PreconditionViolated, "no odd generator");
}

namespace detail {

inline void require_coprime_pair(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::NonPositive, "generators must be positive");
  if (std::gcd(a, b) != 1) throw Error(ErrorKind::NotCoprime, "gcd(a, b) != 1");
}

}  // namespace detail

/// A = {a, b}, lambda^a != 1, lambda^b != 1:
/// lambda/(lambda-1)^2 + ab lambda^{ab} / ((lambda^a-1)(lambda^b-1))
///   - (lambda^{ab}-1)((a+b) lambda^{a+b} - a lambda^a - b lambda^b) / ((lambda^a-1)^2 (lambda^b-1)^2).
inline SumResult closed_two_var(std::uint64_t a, std::uint64_t b, const FieldElement& lambda) {
  detail::require_coprime_pair(a, b);
  detail::require_nonzero_weight(lambda);
  const FieldElement one = FieldElement::one(lambda.field());
  const FieldElement lambda_a = lambda.pow(a);
  const FieldElement lambda_b = lambda.pow(b);
  detail::require(!lambda_a.is_one(), detail::pow_text(a) + " == 1");
  detail::require(!lambda_b.is_one(), detail::pow_text(b) + " == 1");

  const FieldElement inv_a = (lambda_a - one).inverse();
  const FieldElement inv_b = (lambda_b - one).inverse();
  const FieldElement lambda_ab = lambda.pow(a * b);
  const Rational ar(a);
  const Rational br(b);

  FieldElement value = detail::negative_tail_mu1(lambda);
  value += lambda_ab * inv_a * inv_b * (ar * br);
  value -= (lambda_ab - one) * (lambda_a * lambda_b * (ar + br) - lambda_a * ar - lambda_b * br) * inv_a *
           inv_a * inv_b * inv_b;
  return {std::move(value), Formula::two_var_closed, a};
}

/// A = {a, b}, lambda^b == 1, lambda^a != 1:
/// lambda/(lambda-1)^2 + (a-1)ab / (2(lambda^a-1)) - a^2 lambda^a / (lambda^a-1)^2.
inline SumResult closed_two_var_degenerate(std::uint64_t a, std::uint64_t b, const FieldElement& lambda) {
  detail::require_coprime_pair(a, b);
  detail::require_nonzero_weight(lambda);
  detail::require(!lambda.is_one(), "lambda must not be 1");
  const FieldElement one = FieldElement::one(lambda.field());
  const FieldElement lambda_a = lambda.pow(a);
  detail::require(lambda.pow(b).is_one(), detail::pow_text(b) + " != 1");
  detail::require(!lambda_a.is_one(), detail::pow_text(a) + " == 1");

  const FieldElement inv_a = (lambda_a - one).inverse();
  const Rational ar(a);
  FieldElement value = detail::negative_tail_mu1(lambda);
  value += inv_a * Rational((a - 1) * a * BigInt(b), 2);
  value -= lambda_a * inv_a * inv_a * (ar * ar);
  return {std::move(value), Formula::two_var_degenerate, a};
}

/// Roles for the three-generator closed forms: r = gcd(a, b), s = gcd(a, c),
/// l1 = lcm(a, b) = b s, l2 = lcm(a, c) = c r. Requires gcd(a, b, c) = 1 and a | lcm(b, c).
struct ThreeVarContext {
  std::uint64_t a = 0, b = 0, c = 0;
  std::uint64_t r = 0, s = 0;
  std::uint64_t l1 = 0, l2 = 0;

  static ThreeVarContext make(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (a == 0 || b == 0 || c == 0) throw Error(ErrorKind::NonPositive, "generators must be positive");
    if (std::gcd(a, std::gcd(b, c)) != 1) throw Error(ErrorKind::NotCoprime, "gcd(a, b, c) != 1");
    const BigInt lcm_bc = BigInt(b / std::gcd(b, c)) * c;
    if (lcm_bc % a != 0)
      throw Error(ErrorKind::ConditionNotMet, std::to_string(a) + " does not divide lcm(" + std::to_string(b) +
                                                  ", " + std::to_string(c) + ")");
    ThreeVarContext ctx;
    ctx.a = a;
    ctx.b = b;
    ctx.c = c;
    ctx.r = std::gcd(a, b);
    ctx.s = std::gcd(a, c);
    ctx.l1 = std::lcm(a, b);
    ctx.l2 = std::lcm(a, c);
    return ctx;
  }

  /// The Apéry set of a is {b x + c y : 0 <= x < s, 0 <= y < r}.
  [[nodiscard]] std::vector<std::uint64_t> apery_values() const {
    std::vector<std::uint64_t> out;
    out.reserve(r * s);
    for (std::uint64_t x = 0; x < s; ++x)
      for (std::uint64_t y = 0; y < r; ++y) out.push_back(b * x + c * y);
    return out;
  }
};

/// a | lcm(b, c), lambda^a, lambda^b, lambda^c all != 1.
inline SumResult closed_three_var(const ThreeVarContext& ctx, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  const FieldElement one = FieldElement::one(lambda.field());
  const FieldElement da = lambda.pow(ctx.a) - one;
  const FieldElement db = lambda.pow(ctx.b) - one;
  const FieldElement dc = lambda.pow(ctx.c) - one;
  detail::require(!da.is_zero(), detail::pow_text(ctx.a) + " == 1");
  detail::require(!db.is_zero(), detail::pow_text(ctx.b) + " == 1");
  detail::require(!dc.is_zero(), detail::pow_text(ctx.c) + " == 1");

  const FieldElement x1 = lambda.pow(ctx.l1) - one;
  const FieldElement x2 = lambda.pow(ctx.l2) - one;
  const FieldElement inv_a = da.inverse();
  const FieldElement inv_b = db.inverse();
  const FieldElement inv_c = dc.inverse();
  const FieldElement inv_p = inv_a * inv_b * inv_c;
  const Rational l1(ctx.l1);
  const Rational l2(ctx.l2);
  const Rational excess = l1 + l2 - Rational(ctx.a) - Rational(ctx.b) - Rational(ctx.c);

  FieldElement value = (x2 * l1 + x1 * l2 + x1 * x2 * excess) * inv_p;
  value -= x1 * x2 * inv_p * (inv_a * Rational(ctx.a) + inv_b * Rational(ctx.b) + inv_c * Rational(ctx.c));
  value += detail::negative_tail_mu1(lambda);
  return {std::move(value), Formula::three_var_closed, ctx.a};
}

/// a | lcm(b, c), lambda^a != 1, lambda^b != 1, lambda^c == 1.
inline SumResult closed_three_var_degenerate(const ThreeVarContext& ctx, const FieldElement& lambda) {
  detail::require_nonzero_weight(lambda);
  const FieldElement one = FieldElement::one(lambda.field());
  const FieldElement da = lambda.pow(ctx.a) - one;
  const FieldElement db = lambda.pow(ctx.b) - one;
  detail::require(!da.is_zero(), detail::pow_text(ctx.a) + " == 1");
  detail::require(!db.is_zero(), detail::pow_text(ctx.b) + " == 1");
  detail::require(lambda.pow(ctx.c).is_one(), detail::pow_text(ctx.c) + " != 1");

  const FieldElement inv_a = da.inverse();
  const FieldElement inv_b = db.inverse();
  const FieldElement inv_q = inv_a * inv_b * Rational(1, ctx.c);
  const FieldElement x1 = lambda.pow(ctx.l1) - one;
  const Rational l1(ctx.l1);
  const Rational l2(ctx.l2);

  const FieldElement bracket = FieldElement::from_rational(lambda.field(), l1 + l2 / 2 - Rational(ctx.a) -
                                                                                Rational(ctx.b) - Rational(ctx.c, 2)) -
                               inv_a * Rational(ctx.a) - inv_b * Rational(ctx.b);
  FieldElement value = x1 * inv_q * bracket * l2;
  value += inv_q * (l1 * l2);
  value += detail::negative_tail_mu1(lambda);
  return {std::move(value), Formula::three_var_degenerate, ctx.a};
}

/// Smallest generator p with lambda^p != 1. Exists for every lambda != 1.
inline std::optional<std::uint64_t> admissible_pivot(const GeneratorSet& gens, const FieldElement& lambda) {
  for (const auto g : gens)
    if (!lambda.pow(g).is_one()) return g;
  return std::nullopt;
}

/**
 * Routes a request to a closed form:
 *  - 1 in A: no gaps, the value is 0;
 *  - lambda = 1: unweighted_power_sum on the smallest generator;
 *  - otherwise weighted_power_sum on the smallest generator p with lambda^p != 1.
 * The value lives in lambda's field.
 */
inline SumResult dispatch_sum(const SumRequest& req) {
  if (req.lambda.is_zero()) throw Error(ErrorKind::InvalidWeight, "lambda must be nonzero");
  const FieldPtr& field = req.lambda.field();
  if (req.gens.min() == 1) return {FieldElement::zero(field), Formula::empty, std::nullopt};
  if (req.lambda.is_one()) {
    SumResult out = unweighted_power_sum(apery_set(req.gens), req.mu);
    out.value = FieldElement::from_rational(field, out.value.constant_term());
    return out;
  }
  const auto pivot = admissible_pivot(req.gens, req.lambda);
  // lambda^g == 1 for every generator would force lambda == lambda^gcd == 1.
  if (!pivot) throw Error(ErrorKind::PreconditionViolated, "no generator p with lambda^p != 1");
  return weighted_power_sum(apery_set(req.gens, *pivot), req.mu, req.lambda);
}

namespace detail {

inline void require_mu(const SumRequest& req, unsigned mu, Formula f) {
  require(req.mu == mu, std::string(to_string(f)) + " needs mu = " + std::to_string(mu));
}

inline void require_size(const SumRequest& req, std::size_t k, Formula f) {
  require(req.gens.size() == k, std::string(to_string(f)) + " needs exactly " + std::to_string(k) + " generators");
}

inline SumResult three_var_by_roles(const SumRequest& req, bool degenerate) {
  const auto& g = req.gens.values();
  std::optional<Error> last;
  bool divisible = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::uint64_t a = g[i];
    const std::uint64_t x = g[(i + 1) % 3];
    const std::uint64_t y = g[(i + 2) % 3];
    for (const auto& [b, c] : {std::pair{std::min(x, y), std::max(x, y)}, std::pair{std::max(x, y), std::min(x, y)}}) {
      ThreeVarContext ctx;
      try {
        ctx = ThreeVarContext::make(a, b, c);
      } catch (const Error&) {
        continue;
      }
      divisible = true;
      try {
        return degenerate ? closed_three_var_degenerate(ctx, req.lambda) : closed_three_var(ctx, req.lambda);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionViolated) throw;
        last = e;
      }
    }
  }
  if (!divisible) throw Error(ErrorKind::ConditionNotMet, "no generator divides the lcm of the other two");
  throw *last;
}

}  // namespace detail

/**
 * Evaluates one specific closed form, bypassing the router but not the
 * closed form's own hypotheses. Pivots and generator roles are chosen as the
 * smallest generator satisfying them. Formula::oracle is not a closed form
 * and is rejected here.
 */
inline SumResult evaluate_formula(const SumRequest& req, Formula formula) {
  if (req.lambda.is_zero()) throw Error(ErrorKind::InvalidWeight, "lambda must be nonzero");
  const FieldElement& lambda = req.lambda;
  const auto pivot_for_weighted = [&] {
    detail::require(!lambda.is_one(), "lambda = 1 needs the unweighted form");
    return *admissible_pivot(req.gens, lambda);
  };

  switch (formula) {
    case Formula::empty:
      detail::require(req.gens.min() == 1, "the gap set is not empty");
      return {FieldElement::zero(lambda.field()), Formula::empty, std::nullopt};
    case Formula::general:
      return weighted_power_sum(apery_set(req.gens, pivot_for_weighted()), req.mu, lambda);
    case Formula::mu2:
      detail::require_mu(req, 2, formula);
      return weighted_sum_mu2(apery_set(req.gens, pivot_for_weighted()), lambda);
    case Formula::mu1:
      detail::require_mu(req, 1, formula);
      return weighted_sum_mu1(apery_set(req.gens, pivot_for_weighted()), lambda);
    case Formula::mu1_root_of_unity: {
      detail::require_mu(req, 1, formula);
      detail::require(!lambda.is_one(), "lambda must not be 1");
      for (const auto g : req.gens)
        if (lambda.pow(g).is_one()) return weighted_sum_mu1_root_of_unity(apery_set(req.gens, g), lambda);
      throw Error(ErrorKind::PreconditionViolated, "no generator p with lambda^p == 1");
    }
    case Formula::unweighted_bernoulli: {
      detail::require(lambda.is_one(), "unweighted form needs lambda = 1");
      SumResult out = unweighted_power_sum(apery_set(req.gens), req.mu);
      out.value = FieldElement::from_rational(lambda.field(), out.value.constant_term());
      return out;
    }
    case Formula::alternating: {
      detail::require_mu(req, 1, formula);
      detail::require((lambda + FieldElement::one(lambda.field())).is_zero(), "alternating form needs lambda = -1");
      SumResult out = alternating_sum(req.gens);
      out.value = FieldElement::from_rational(lambda.field(), out.value.constant_term());
      return out;
    }
    case Formula::two_var_closed:
      detail::require_mu(req, 1, formula);
      detail::require_size(req, 2, formula);
      return closed_two_var(req.gens.min(), req.gens.max(), lambda);
    case Formula::two_var_degenerate: {
      detail::require_mu(req, 1, formula);
      detail::require_size(req, 2, formula);
      const std::uint64_t small = req.gens.min();
      const std::uint64_t large = req.gens.max();
      if (lambda.pow(small).is_one() && !lambda.pow(large).is_one())
        return closed_two_var_degenerate(large, small, lambda);
      return closed_two_var_degenerate(small, large, lambda);
    }
    case Formula::three_var_closed:
      detail::require_mu(req, 1, formula);
      detail::require_size(req, 3, formula);
      return detail::three_var_by_roles(req, false);
    case Formula::three_var_degenerate:
      detail::require_mu(req, 1, formula);
      detail::require_size(req, 3, formula);
      return detail::three_var_by_roles(req, true);
    case Formula::oracle:
      break;
  }
  throw Error(ErrorKind::PreconditionViolated, "oracle is not a closed form");
}

}  // namespace sylvester

#endif  // SYLVESTER_SUMS_HPP
