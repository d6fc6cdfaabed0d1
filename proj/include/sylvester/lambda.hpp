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
 * @file lambda.hpp
 * @brief Parser for weight expressions.
 *
 *   weight   := rational | zeta | quad | nf
 *   rational := '-'? digits ('/' digits)?
 *   zeta     := "zeta(" N ")^" K            N >= 1, K any integer, reduced mod N
 *   quad     := "q(" D ";" rational "," rational ")"        r0 + r1 sqrt(D)
 *   nf       := "nf([" c0 "," ... "," cd "];" "[" e0 "," ... "," e_{d-1} "])"
 *
 * Whitespace is allowed between tokens. The weight must be nonzero.
 */

#ifndef SYLVESTER_LAMBDA_HPP
#define SYLVESTER_LAMBDA_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "sylvester/exactnum.hpp"
#include "sylvester/format.hpp"

namespace sylvester {

struct RationalWeight {
  Rational value;
  friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
};

struct RootOfUnityWeight {
  std::uint32_t order = 1;
  std::uint32_t exponent = 0;
  friend bool operator==(const RootOfUnityWeight&, const RootOfUnityWeight&) = default;
};

struct QuadraticWeight {
  std::int64_t radicand = 0;
  Rational rational_part;
  Rational radical_part;
  friend bool operator==(const QuadraticWeight&, const QuadraticWeight&) = default;
};

struct GeneralWeight {
  poly::Poly modulus;
  poly::Poly coefficients;
  friend bool operator==(const GeneralWeight&, const GeneralWeight&) = default;
};

using WeightForm = std::variant<RationalWeight, RootOfUnityWeight, QuadraticWeight, GeneralWeight>;

struct LambdaSpec {
  std::string raw;
  WeightForm form;
  FieldElement resolved;

  /// Two specs are the same weight when their normalized forms agree; `raw` is not compared.
  friend bool operator==(const LambdaSpec& a, const LambdaSpec& b) {
    return a.form == b.form && a.resolved == b.resolved;
  }
};

inline std::string to_string(const WeightForm& form) {
  struct Printer {
    std::string operator()(const RationalWeight& w) const { return to_string(w.value); }
    std::string operator()(const RootOfUnityWeight& w) const {
      return "zeta(" + std::to_string(w.order) + ")^" + std::to_string(w.exponent);
    }
    std::string operator()(const QuadraticWeight& w) const {
      return "q(" + std::to_string(w.radicand) + "; " + to_string(w.rational_part) + ", " +
             to_string(w.radical_part) + ")";
    }
    std::string operator()(const GeneralWeight& w) const {
      return "nf(" + detail::join_rationals(w.modulus) + "; " + detail::join_rationals(w.coefficients) + ")";
    }
  };
  return std::visit(Printer{}, form);
}

inline std::string to_string(const LambdaSpec& spec) { return to_string(spec.form); }

inline FieldElement resolve(const WeightForm& form) {
  struct Resolver {
    FieldElement operator()(const RationalWeight& w) const { return FieldElement::rational(w.value); }
    FieldElement operator()(const RootOfUnityWeight& w) const {
      return FieldElement::generator(make_cyclotomic_field(w.order)).pow(w.exponent);
    }
    FieldElement operator()(const QuadraticWeight& w) const {
      return {make_quadratic_field(w.radicand), {w.rational_part, w.radical_part}};
    }
    FieldElement operator()(const GeneralWeight& w) const { return {make_field(w.modulus), w.coefficients}; }
  };
  return std::visit(Resolver{}, form);
}

namespace detail {

class LambdaParser {
 public:
  explicit LambdaParser(std::string_view text) : text_(text) {}

  WeightForm parse() {
    skip_space();
    WeightForm form = RationalWeight{};
    if (peek_word("zeta"))
      form = parse_zeta();
    else if (peek_word("nf"))
      form = parse_nf();
    else if (peek_word("q"))
      form = parse_quadratic();
    else
      form = RationalWeight{parse_rational()};
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return form;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view word) const {
    return text_.substr(pos_, word.size()) == word && pos_ + word.size() < text_.size() &&
           text_[pos_ + word.size()] == '(';
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    BigInt value(digits());
    return negative ? BigInt(-value) : value;
  }

  std::int64_t small_integer() {
    const std::size_t start = pos_;
    const BigInt value = integer();
    if (value > INT64_MAX || value < INT64_MIN) {
      pos_ = start;
      fail("integer out of range");
    }
    return static_cast<std::int64_t>(value);
  }

  Rational parse_rational() {
    const BigInt num = integer();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const BigInt den(digits());
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  poly::Poly rational_list() {
    expect("[");
    poly::Poly out;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(parse_rational());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect("]");
      return out;
    }
  }

  WeightForm parse_zeta() {
    expect("zeta(");
    const std::size_t order_pos = pos_;
    const std::int64_t order = small_integer();
    if (order < 1 || order > 100000) {
      pos_ = order_pos;
      fail("cyclotomic order must be in [1, 100000]");
    }
    expect(")");
    expect("^");
    const std::int64_t exponent = small_integer();
    const std::int64_t reduced = ((exponent % order) + order) % order;
    return RootOfUnityWeight{static_cast<std::uint32_t>(order), static_cast<std::uint32_t>(reduced)};
  }

  WeightForm parse_quadratic() {
    expect("q(");
    const std::int64_t radicand = small_integer();
    expect(";");
    const Rational r0 = parse_rational();
    expect(",");
    const Rational r1 = parse_rational();
    expect(")");
    return QuadraticWeight{radicand, r0, r1};
  }

  WeightForm parse_nf() {
    expect("nf(");
    poly::Poly modulus = rational_list();
    expect(";");
    const std::size_t coefficients_at = pos_;
    poly::Poly coefficients = rational_list();
    expect(")");
    if (modulus.size() < 2) throw Error(ErrorKind::InvalidField, "modulus must have degree >= 1");
    if (coefficients.size() != modulus.size() - 1) {
      pos_ = coefficients_at;
      fail("expected " + std::to_string(modulus.size() - 1) + " coefficients");
    }
    return GeneralWeight{std::move(modulus), std::move(coefficients)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and resolves a weight. Throws ParseError, InvalidField, or InvalidWeight for zero.
inline LambdaSpec parse_lambda(std::string_view text) {
  WeightForm form = detail::LambdaParser(text).parse();
  FieldElement resolved = resolve(form);
  if (resolved.is_zero()) throw Error(ErrorKind::InvalidWeight, "lambda must be nonzero");
  return {std::string(text), std::move(form), std::move(resolved)};
}

}  // namespace sylvester

#endif  // SYLVESTER_LAMBDA_HPP
