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
 * @file semigroup.hpp
 * @brief Numerical semigroups: generators, Apéry sets, gaps, g(A), n(A), s(A).
 *
 * For a pivot generator a, the Apéry set holds m_i, the least semigroup
 * element congruent to i mod a (m_0 = 0). The gaps congruent to i are exactly
 * m_i - a, m_i - 2a, ..., down to the last positive one, so every quantity in
 * this library is a function of (a, m_0, ..., m_{a-1}).
 */

#ifndef SYLVESTER_SEMIGROUP_HPP
#define SYLVESTER_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sylvester/exactnum.hpp"

namespace sylvester {

/// Generators above this are rejected so that Apéry values fit in 64 bits.
inline constexpr std::uint64_t kMaxGenerator = 0xFFFFFFFFULL;
/// Largest pivot for which an Apéry table is built.
inline constexpr std::uint64_t kMaxPivot = 1ULL << 26;

class GeneratorSet {
 public:
  /// Sorted, deduplicated, coprime, positive. Use validate_generators to build one.
  [[nodiscard]] const std::vector<std::uint64_t>& values() const noexcept { return gens_; }
  [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
  [[nodiscard]] std::uint64_t min() const noexcept { return gens_.front(); }
  [[nodiscard]] std::uint64_t max() const noexcept { return gens_.back(); }
  [[nodiscard]] bool contains(std::uint64_t g) const {
    return std::binary_search(gens_.begin(), gens_.end(), g);
  }

  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  explicit GeneratorSet(std::vector<std::uint64_t> gens) : gens_(std::move(gens)) {}
  friend GeneratorSet validate_generators(std::span<const std::int64_t> raw);

  std::vector<std::uint64_t> gens_;
};

inline GeneratorSet validate_generators(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw Error(ErrorKind::Empty, "no generators given");
  std::vector<std::uint64_t> gens;
  gens.reserve(raw.size());
  for (const auto g : raw) {
    if (g <= 0) throw Error(ErrorKind::NonPositive, "generator " + std::to_string(g) + " is not positive");
    if (static_cast<std::uint64_t>(g) > kMaxGenerator)
      throw Error(ErrorKind::OutOfRange, "generator " + std::to_string(g) + " exceeds 2^32 - 1");
    gens.push_back(static_cast<std::uint64_t>(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::uint64_t g = 0;
  for (const auto a : gens) g = std::gcd(g, a);
  if (g != 1) throw Error(ErrorKind::NotCoprime, "generators share the factor " + std::to_string(g));
  return GeneratorSet(std::move(gens));
}

inline GeneratorSet validate_generators(std::initializer_list<std::int64_t> raw) {
  return validate_generators(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

struct AperySet {
  std::uint64_t pivot = 1;
  /// m[i]: least element of the semigroup congruent to i mod pivot.
  std::vector<std::uint64_t> m{0};

  /// Number of gaps congruent to i, (m_i - i) / pivot.
  [[nodiscard]] std::uint64_t ell(std::size_t i) const { return (m[i] - i) / pivot; }

  [[nodiscard]] std::uint64_t max_element() const { return *std::max_element(m.begin(), m.end()); }

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Dijkstra over residues mod pivot; edge i -> (i + a_j) mod pivot costs a_j.
inline AperySet apery_set(const GeneratorSet& gens, std::uint64_t pivot) {
  if (!gens.contains(pivot))
    throw Error(ErrorKind::InvalidPivot, "pivot " + std::to_string(pivot) + " is not a generator");
  if (pivot > kMaxPivot) throw Error(ErrorKind::OutOfRange, "pivot " + std::to_string(pivot) + " is too large");

  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  AperySet out;
  out.pivot = pivot;
  out.m.assign(pivot, kUnset);
  out.m[0] = 0;

  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (value != out.m[residue]) continue;
    for (const auto a : gens) {
      if (a == pivot) continue;
      const std::uint64_t next = (residue + a) % pivot;
      const std::uint64_t candidate = value + a;
      if (candidate < out.m[next]) {
        out.m[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }
  return out;
}

inline AperySet apery_set(const GeneratorSet& gens) { return apery_set(gens, gens.min()); }

using GapSet = std::vector<std::uint64_t>;

/// All gaps, ascending, read off the Apéry set of the smallest generator.
inline GapSet gap_set(const GeneratorSet& gens) {
  const AperySet apery = apery_set(gens);
  GapSet gaps;
  for (std::size_t i = 1; i < apery.m.size(); ++i)
    for (std::uint64_t n = i; n < apery.m[i]; n += apery.pivot) gaps.push_back(n);
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

/// Reachability table over 0..bound, independent of the Apéry machinery.
inline std::vector<bool> sieve_representable(const GeneratorSet& gens, std::uint64_t bound) {
  std::vector<bool> table(bound + 1, false);
  table[0] = true;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    for (const auto a : gens) {
      if (a <= n && table[n - a]) {
        table[n] = true;
        break;
      }
    }
  }
  return table;
}

/// Largest gap, or nullopt when the semigroup is all of N (1 is a generator).
inline std::optional<std::uint64_t> frobenius_number(const AperySet& apery) {
  if (apery.pivot == 1) return std::nullopt;
  return apery.max_element() - apery.pivot;
}

inline std::optional<std::uint64_t> frobenius_number(const GeneratorSet& gens) {
  return frobenius_number(apery_set(gens));
}

/// Number of gaps: (1/a) sum m_i - (a - 1)/2.
inline BigInt sylvester_number(const AperySet& apery) {
  const BigInt a = apery.pivot;
  BigInt total = 0;
  for (const auto m : apery.m) total += m;
  const Rational genus = Rational(total, a) - Rational(a - 1, 2);
  return numerator(genus);
}

inline BigInt sylvester_number(const GeneratorSet& gens) { return sylvester_number(apery_set(gens)); }

/// Sum of gaps: (1/2a) sum m_i^2 - (1/2) sum m_i + (a^2 - 1)/12.
inline BigInt sylvester_sum(const AperySet& apery) {
  const BigInt a = apery.pivot;
  BigInt linear = 0;
  BigInt square = 0;
  for (const auto m : apery.m) {
    const BigInt v = m;
    linear += v;
    square += v * v;
  }
  const Rational s = Rational(square, 2 * a) - Rational(linear, 2) + Rational(a * a - 1, 12);
  return numerator(s);
}

inline BigInt sylvester_sum(const GeneratorSet& gens) { return sylvester_sum(apery_set(gens)); }

}  // namespace sylvester

#endif  // SYLVESTER_SEMIGROUP_HPP
