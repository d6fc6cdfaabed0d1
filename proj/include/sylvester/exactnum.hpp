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
 * @file exactnum.hpp
 * @brief Exact scalars: big rationals and number fields Q[x]/(f(x)).
 *
 * Every weight and every sum value lives in a NumberField. The rationals are
 * the degree-one field with modulus x, so one element type serves rational,
 * cyclotomic, quadratic and user-supplied fields alike.
 *
 * Moduli are not checked for irreducibility. Arithmetic is ring arithmetic
 * and only inversion can fail, with ErrorKind::ZeroDivisor, when the modulus
 * is reducible and the element shares a factor with it.
 */

#ifndef SYLVESTER_EXACTNUM_HPP
#define SYLVESTER_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sylvester/errors.hpp"

namespace sylvester {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace poly {

/// Dense polynomial over Q, constant term first. The zero polynomial is empty.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Degree of a trimmed polynomial; -1 for zero.
inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

/// Quotient and remainder of a by a nonzero divisor.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& divisor) {
  trim(a);
  const long db = degree(divisor);
  if (db < 0) throw Error(ErrorKind::DivideByZero, "polynomial division by zero");
  if (degree(a) < db) return {Poly{}, std::move(a)};
  Poly q(a.size() - divisor.size() + 1);
  const Rational& lead = divisor.back();
  for (long i = degree(a); i >= db; --i) {
    const Rational c = a[i] / lead;
    if (c == 0) continue;
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * divisor[j];
  }
  trim(q);
  trim(a);
  return {std::move(q), std::move(a)};
}

/// Reduces p modulo a monic polynomial of degree d and pads to length d.
inline Poly reduce_monic(Poly p, const Poly& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    const Rational c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * modulus[j];
  }
  p.resize(d);
  return p;
}

}  // namespace poly

enum class FieldKind { Rational, Cyclotomic, Quadratic, General };

/// Q[x]/(f) for a monic f of degree >= 1, stored constant term first.
class NumberField {
 public:
  NumberField(poly::Poly modulus, std::string label, FieldKind kind = FieldKind::General,
              std::int64_t parameter = 0)
      : modulus_(std::move(modulus)), label_(std::move(label)), kind_(kind), parameter_(parameter) {
    if (modulus_.size() < 2) throw Error(ErrorKind::InvalidField, "modulus must have degree >= 1");
    if (modulus_.back() != 1) throw Error(ErrorKind::InvalidField, "modulus must be monic");
  }

  [[nodiscard]] const poly::Poly& modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t degree() const noexcept { return modulus_.size() - 1; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
  /// n for a cyclotomic field, d for a quadratic field, 0 otherwise.
  [[nodiscard]] std::int64_t parameter() const noexcept { return parameter_; }

  /// Fields compare by modulus; the label and constructor history are cosmetic.
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.modulus_ == b.modulus_; }

 private:
  poly::Poly modulus_;
  std::string label_;
  FieldKind kind_;
  std::int64_t parameter_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr rational_field() {
  static const FieldPtr field =
      std::make_shared<const NumberField>(poly::Poly{0, 1}, "Q", FieldKind::Rational);
  return field;
}

/// n-th cyclotomic polynomial by dividing x^n - 1 by every Phi_d, d a proper divisor of n.
inline poly::Poly cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidField, "cyclotomic index must be >= 1");
  poly::Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly::divmod(std::move(p), cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

inline FieldPtr make_cyclotomic_field(std::uint32_t n) {
  return std::make_shared<const NumberField>(cyclotomic_polynomial(n),
                                             "Q(zeta_" + std::to_string(n) + ")",
                                             FieldKind::Cyclotomic, static_cast<std::int64_t>(n));
}

inline bool is_squarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? 0 - static_cast<std::uint64_t>(d) : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

/// Q(sqrt(d)) as Q[x]/(x^2 - d).
inline FieldPtr make_quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1) throw Error(ErrorKind::InvalidField, "quadratic field needs d not in {0, 1}");
  if (!is_squarefree(d)) throw Error(ErrorKind::InvalidField, "d = " + std::to_string(d) + " is not squarefree");
  return std::make_shared<const NumberField>(poly::Poly{Rational(-d), 0, 1},
                                             "Q(sqrt(" + std::to_string(d) + "))",
                                             FieldKind::Quadratic, d);
}

/// A user-supplied monic modulus; degree one moduli other than x are accepted as-is.
inline FieldPtr make_field(poly::Poly modulus) {
  if (modulus == poly::Poly{0, 1}) return rational_field();
  return std::make_shared<const NumberField>(std::move(modulus), "Q[x]/(f)");
}

class FieldElement {
 public:
  FieldElement(FieldPtr field, poly::Poly coefficients)
      : field_(std::move(field)),
        coeffs_(poly::reduce_monic(std::move(coefficients), field_->modulus())) {}

  static FieldElement zero(const FieldPtr& field) { return {field, {}}; }
  static FieldElement one(const FieldPtr& field) { return {field, {Rational(1)}}; }
  static FieldElement from_rational(const FieldPtr& field, const Rational& q) { return {field, {q}}; }
  static FieldElement rational(const Rational& q) { return from_rational(rational_field(), q); }
  /// Residue class of x.
  static FieldElement generator(const FieldPtr& field) { return {field, {Rational(0), Rational(1)}}; }

  [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
  [[nodiscard]] const poly::Poly& coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  /// True when only the constant coefficient may be nonzero.
  [[nodiscard]] bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  [[nodiscard]] const Rational& constant_term() const { return coeffs_[0]; }

  FieldElement& operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  FieldElement& operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  FieldElement& operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    coeffs_ = poly::reduce_monic(poly::mul(trimmed(), rhs.trimmed()), field_->modulus());
    return *this;
  }

  FieldElement& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }

  FieldElement& operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement operator-() const {
    FieldElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  /// Inverse via the extended Euclidean algorithm on Q[x].
  [[nodiscard]] FieldElement inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivideByZero, "inverse of zero");
    // Invariant: r0 = s0 * self (mod f), r1 = s1 * self (mod f).
    poly::Poly r0 = field_->modulus();
    poly::Poly r1 = trimmed();
    poly::Poly s0{};
    poly::Poly s1{Rational(1)};
    while (poly::degree(r1) > 0) {
      auto [q, r] = poly::divmod(r0, r1);
      poly::Poly s = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.empty()) throw Error(ErrorKind::ZeroDivisor, "element is a zero divisor in " + field_->label());
    const Rational scale = 1 / r1[0];
    for (auto& c : s1) c *= scale;
    return {field_, std::move(s1)};
  }

  /// Binary exponentiation; pow(0) is one for every element, zero included.
  [[nodiscard]] FieldElement pow(std::uint64_t e) const {
    FieldElement result = one(field_);
    FieldElement base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_field(const FieldElement& other) const {
    if (field_ != other.field_ && !(*field_ == *other.field_))
      throw Error(ErrorKind::FieldMismatch, field_->label() + " vs " + other.field_->label());
  }

  [[nodiscard]] poly::Poly trimmed() const {
    poly::Poly p = coeffs_;
    poly::trim(p);
    return p;
  }

  FieldPtr field_;
  poly::Poly coeffs_;
};

inline FieldElement pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }

/// Integer power with 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline Rational qpow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace sylvester

#endif  // SYLVESTER_EXACTNUM_HPP
