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
 * @file format.hpp
 * @brief Text and JSON forms of exact values.
 *
 * Canonical text (re-parseable by parse_lambda):
 *   rational     "-3/2"
 *   root of 1    "zeta(8)^3"
 *   quadratic    "q(5; 0, -1/5)"            meaning 0 + (-1/5) sqrt(5)
 *   otherwise    "nf([c0,...,cd]; [e0,...,e_{d-1}])", constant terms first
 *
 * Pretty text writes quadratic fields and the cyclotomic fields of conductor
 * 3, 4, 6, 8 and 12 with square roots over a common denominator, for example
 * "(-443+391*sqrt(-3))/2".
 */

#ifndef SYLVESTER_FORMAT_HPP
#define SYLVESTER_FORMAT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sylvester/exactnum.hpp"

namespace sylvester {

inline std::string to_string(const Rational& q) { return q.str(); }

namespace detail {

inline std::string join_rationals(const poly::Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(p[i]);
  }
  return out + "]";
}

/// k with element == zeta^k, if any, for a cyclotomic field.
inline std::optional<std::uint32_t> root_of_unity_exponent(const FieldElement& x) {
  const FieldPtr& field = x.field();
  if (field->kind() != FieldKind::Cyclotomic) return std::nullopt;
  const auto n = static_cast<std::uint32_t>(field->parameter());
  const FieldElement zeta = FieldElement::generator(field);
  FieldElement power = FieldElement::one(field);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (power == x) return k;
    power *= zeta;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::string canonical_text(const FieldElement& x) {
  const FieldPtr& field = x.field();
  const auto& c = x.coefficients();
  switch (field->kind()) {
    case FieldKind::Rational:
      return to_string(c[0]);
    case FieldKind::Quadratic:
      return "q(" + std::to_string(field->parameter()) + "; " + to_string(c[0]) + ", " + to_string(c[1]) + ")";
    case FieldKind::Cyclotomic:
      if (const auto k = detail::root_of_unity_exponent(x))
        return "zeta(" + std::to_string(field->parameter()) + ")^" + std::to_string(*k);
      break;
    case FieldKind::General:
      break;
  }
  return "nf(" + detail::join_rationals(field->modulus()) + "; " + detail::join_rationals(c) + ")";
}

namespace detail {

struct RadicalTerm {
  Rational coefficient;
  std::string radical;  // empty for the rational part
};

inline std::string render_terms(const std::vector<RadicalTerm>& terms) {
  BigInt denominator = 1;
  for (const auto& t : terms) denominator = boost::multiprecision::lcm(denominator, boost::multiprecision::denominator(t.coefficient));
  std::string body;
  int nonzero = 0;
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    const BigInt n = boost::multiprecision::numerator(t.coefficient) * (denominator / boost::multiprecision::denominator(t.coefficient));
    std::string piece;
    if (t.radical.empty())
      piece = n.str();
    else if (n == 1)
      piece = t.radical;
    else if (n == -1)
      piece = "-" + t.radical;
    else
      piece = n.str() + "*" + t.radical;
    if (nonzero != 0 && piece.front() != '-') body += "+";
    body += piece;
    ++nonzero;
  }
  if (nonzero == 0) return "0";
  if (denominator == 1) return body;
  if (nonzero > 1) body = "(" + body + ")";
  return body + "/" + denominator.str();
}

}  // namespace detail

/// Square-root form when one is available for the field, nullopt otherwise.
inline std::optional<std::string> pretty_text(const FieldElement& x) {
  const FieldPtr& field = x.field();
  const auto& c = x.coefficients();
  const Rational half(1, 2);
  using detail::RadicalTerm;
  switch (field->kind()) {
    case FieldKind::Rational:
      return to_string(c[0]);
    case FieldKind::Quadratic:
      return detail::render_terms(
          {{c[0], ""}, {c[1], "sqrt(" + std::to_string(field->parameter()) + ")"}});
    case FieldKind::General:
      return std::nullopt;
    case FieldKind::Cyclotomic:
      break;
  }
  switch (field->parameter()) {
    case 1:
    case 2:
      return to_string(c[0]);
    case 3:  // zeta = (-1 + sqrt(-3))/2
      return detail::render_terms({{c[0] - c[1] * half, ""}, {c[1] * half, "sqrt(-3)"}});
    case 4:
      return detail::render_terms({{c[0], ""}, {c[1], "sqrt(-1)"}});
    case 6:  // zeta = (1 + sqrt(-3))/2
      return detail::render_terms({{c[0] + c[1] * half, ""}, {c[1] * half, "sqrt(-3)"}});
    case 8:  // zeta = sqrt(2)/2 (1 + sqrt(-1))
      return detail::render_terms({{c[0], ""},
                                   {(c[1] - c[3]) * half, "sqrt(2)"},
                                   {c[2], "sqrt(-1)"},
                                   {(c[1] + c[3]) * half, "sqrt(2)*sqrt(-1)"}});
    case 12:  // zeta = (sqrt(3) + sqrt(-1))/2
      return detail::render_terms({{c[0] + c[2] * half, ""},
                                   {c[1] * half, "sqrt(3)"},
                                   {c[1] * half + c[3], "sqrt(-1)"},
                                   {c[2] * half, "sqrt(3)*sqrt(-1)"}});
    default:
      return std::nullopt;
  }
}

namespace detail {

inline const char* kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::Rational: return "rational";
    case FieldKind::Cyclotomic: return "cyclotomic";
    case FieldKind::Quadratic: return "quadratic";
    case FieldKind::General: return "general";
  }
  return "general";
}

inline nlohmann::ordered_json rationals_to_json(const poly::Poly& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& q : p) out.push_back(to_string(q));
  return out;
}

inline poly::Poly rationals_from_json(const nlohmann::ordered_json& j) {
  poly::Poly out;
  for (const auto& item : j) out.emplace_back(item.get<std::string>());
  return out;
}

}  // namespace detail

/// {"field": {...}, "coefficients": [...], "text": ..., "pretty": ...}; coefficients as "p/q" strings.
inline nlohmann::ordered_json element_to_json(const FieldElement& x) {
  const FieldPtr& field = x.field();
  nlohmann::ordered_json j;
  j["field"] = {{"label", field->label()},
                {"kind", detail::kind_name(field->kind())},
                {"parameter", field->parameter()},
                {"modulus", detail::rationals_to_json(field->modulus())}};
  j["coefficients"] = detail::rationals_to_json(x.coefficients());
  j["text"] = canonical_text(x);
  if (const auto pretty = pretty_text(x))
    j["pretty"] = *pretty;
  else
    j["pretty"] = nullptr;
  return j;
}

inline FieldElement element_from_json(const nlohmann::ordered_json& j) {
  const auto& f = j.at("field");
  const std::string kind = f.at("kind").get<std::string>();
  FieldPtr field;
  if (kind == "rational")
    field = rational_field();
  else if (kind == "cyclotomic")
    field = make_cyclotomic_field(f.at("parameter").get<std::uint32_t>());
  else if (kind == "quadratic")
    field = make_quadratic_field(f.at("parameter").get<std::int64_t>());
  else
    field = make_field(detail::rationals_from_json(f.at("modulus")));
  if (field->modulus() != detail::rationals_from_json(f.at("modulus")))
    throw Error(ErrorKind::InvalidField, "modulus does not match field kind");
  return {field, detail::rationals_from_json(j.at("coefficients"))};
}

}  // namespace sylvester

#endif  // SYLVESTER_FORMAT_HPP
