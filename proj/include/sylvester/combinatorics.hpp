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

#ifndef SYLVESTER_COMBINATORICS_HPP
#define SYLVESTER_COMBINATORICS_HPP

#include <cstdint>
#include <mutex>
#include <vector>

#include "sylvester/exactnum.hpp"

namespace sylvester {

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

/**
 * Memoized triangle of Eulerian numbers <n, m> (permutations of 1..n with m
 * ascents), filled row by row from the alternating binomial sum
 *
 *   <n, m> = sum_{k=0}^{m+1} (-1)^k C(n+1, k) (m - k + 1)^n,
 *
 * with <0, 0> = 1. Rows are only ever appended; lookups copy the entry out
 * under the lock so concurrent readers never observe a partial row.
 */
class EulerianTable {
 public:
  BigInt operator()(unsigned n, long long m) {
    if (m < 0) return 0;
    if (n == 0) return m == 0 ? BigInt(1) : BigInt(0);
    if (static_cast<unsigned long long>(m) >= n) return 0;
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) rows_.push_back(compute_row(static_cast<unsigned>(rows_.size())));
    return rows_[n][static_cast<std::size_t>(m)];
  }

  static EulerianTable& instance() {
    static EulerianTable table;
    return table;
  }

 private:
  static std::vector<BigInt> compute_row(unsigned n) {
    if (n == 0) return {BigInt(1)};
    std::vector<BigInt> row(n + 1);
    for (unsigned m = 0; m < n; ++m) {
      BigInt acc = 0;
      for (unsigned k = 0; k <= m + 1; ++k) {
        BigInt term = binomial(n + 1, k) * ipow(BigInt(m + 1 - k), n);
        if (k % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      row[m] = acc;
    }
    return row;
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

/// <n, m>; zero outside 0 <= m < max(n, 1).
inline BigInt eulerian(unsigned n, long long m) { return EulerianTable::instance()(n, m); }

/**
 * Bernoulli numbers under the x/(e^x - 1) convention (B_1 = -1/2), from
 * sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1. Append-only, like EulerianTable.
 */
class BernoulliCache {
 public:
  Rational operator()(unsigned n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      const auto m = static_cast<unsigned>(values_.size());
      Rational acc = 0;
      for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
      values_.push_back(-acc / (m + 1));
    }
    return values_[n];
  }

  static BernoulliCache& instance() {
    static BernoulliCache cache;
    return cache;
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

inline Rational bernoulli(unsigned n) { return BernoulliCache::instance()(n); }

/// sum_{j=1}^{ell} j^kappa through the Bernoulli closed form.
inline Rational faulhaber_sum(const BigInt& ell, unsigned kappa) {
  Rational acc = 0;
  BigInt ell_power = 1;
  for (unsigned i = 1; i <= kappa + 1; ++i) {
    ell_power *= ell;
    const unsigned b = kappa + 1 - i;
    Rational term = Rational(binomial(kappa + 1, i) * ell_power) * bernoulli(b);
    if (b % 2 == 1) term = -term;
    acc += term;
  }
  return acc / (kappa + 1);
}

}  // namespace sylvester

#endif  // SYLVESTER_COMBINATORICS_HPP
