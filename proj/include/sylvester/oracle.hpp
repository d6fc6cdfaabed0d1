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

// Brute-force ground truth. Gaps come from the reachability sieve, not from
// the Apéry set, and the sum is accumulated term by term.

#ifndef SYLVESTER_ORACLE_HPP
#define SYLVESTER_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "sylvester/exactnum.hpp"
#include "sylvester/semigroup.hpp"
#include "sylvester/sums.hpp"

namespace sylvester {

/// Gaps from sieve_representable. Every gap is below min(A) * max(A), which
/// bounds the Frobenius number from above.
inline GapSet gap_set_by_sieve(const GeneratorSet& gens) {
  const std::uint64_t bound = gens.min() * gens.max();
  const auto table = sieve_representable(gens, bound);
  GapSet gaps;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (!table[n]) gaps.push_back(n);
  return gaps;
}

inline FieldElement brute_force_weighted_sum(const GapSet& gaps, unsigned mu, const FieldElement& lambda) {
  FieldElement acc = FieldElement::zero(lambda.field());
  FieldElement power = FieldElement::one(lambda.field());
  std::uint64_t previous = 0;
  for (const auto n : gaps) {
    power *= lambda.pow(n - previous);
    previous = n;
    acc += power * Rational(ipow(BigInt(n), mu));
  }
  return acc;
}

inline FieldElement brute_force_weighted_sum(const GeneratorSet& gens, unsigned mu, const FieldElement& lambda) {
  return brute_force_weighted_sum(gap_set_by_sieve(gens), mu, lambda);
}

struct VerificationReport {
  SumRequest request;
  std::optional<FieldElement> formula_value;
  FieldElement oracle_value;
  bool agrees = false;
  std::optional<Formula> formula_used;
  std::optional<std::uint64_t> pivot_used;
  std::size_t gap_count = 0;
  /// Set when the formula raised instead of producing a value.
  std::string annotation;
};

/// Runs the router (or one forced closed form) and the oracle, and compares exactly.
inline VerificationReport cross_validate(const SumRequest& req, std::optional<Formula> forced = std::nullopt) {
  const GapSet gaps = gap_set_by_sieve(req.gens);
  VerificationReport report{req, std::nullopt, brute_force_weighted_sum(gaps, req.mu, req.lambda)};
  report.gap_count = gaps.size();
  try {
    SumResult result = forced && *forced != Formula::oracle ? evaluate_formula(req, *forced) : dispatch_sum(req);
    report.agrees = result.value == report.oracle_value;
    report.formula_used = result.formula_used;
    report.pivot_used = result.pivot_used;
    report.formula_value = std::move(result.value);
  } catch (const Error& e) {
    report.annotation = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return report;
}

}  // namespace sylvester

#endif  // SYLVESTER_ORACLE_HPP
