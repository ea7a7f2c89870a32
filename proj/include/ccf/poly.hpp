// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccf/gf.hpp"

namespace ccf {

// deg(0).  A quarter of INT_MIN so sums of two degrees never wrap.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

// Dense univariate polynomial over GF(2^k), coefficients stored by ascending
// power of x and kept trimmed (leading coefficient nonzero unless zero).
//
// Text form is the digit string: a + bx + cx^2 + ... is written "abc...",
// e.g. "13" is 1 + (1+t)x over GF(8) and "004" is t^2 x^2.  The zero
// polynomial is "0".
class Poly {
 public:
  explicit Poly(FieldSpec spec = FieldSpec::gf2()) : spec_(spec) {}
  Poly(FieldSpec spec, std::vector<std::uint8_t> ascending_coeffs);

  static Poly zero(FieldSpec s) { return Poly(s); }
  static Poly one(FieldSpec s) { return Poly(s, {1}); }
  static Poly x(FieldSpec s) { return Poly(s, {0, 1}); }
  static Poly constant(FieldElem c) { return Poly(c.spec(), {c.bits()}); }
  static Poly monomial(FieldSpec s, std::uint8_t cbits, int degree);
  static Poly from_digits(const std::string& digits, FieldSpec s);

  FieldSpec spec() const { return spec_; }
  int deg() const { return coeffs_.empty() ? kNegInfDeg : int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  std::uint8_t coeff_bits(int i) const {
    return (i >= 0 && i < int(coeffs_.size())) ? coeffs_[i] : 0;
  }
  FieldElem coeff(int i) const { return FieldElem(coeff_bits(i), spec_); }
  std::uint8_t lead_bits() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<std::uint8_t>& raw() const { return coeffs_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly scaled(std::uint8_t cbits) const;  // multiply by a field constant
  Poly monic() const;                     // divide by leading coefficient
  Poly shifted(int k) const;              // multiply by x^k, k >= 0

  // Char-2 Frobenius on polynomials: coefficient a_i^2 moves to power 2i.
  Poly square() const;

  // x -> x + 1 (an involution in characteristic 2).
  Poly subst_x_plus_1() const;

  // Coefficientwise Frobenius of the coefficients (does not move powers).
  Poly coeff_frobenius() const;

  // Coefficientwise nonzero -> 1 over GF(2) (GF(4)->GF(2) folding map).
  Poly fold_to_gf2() const;

  Poly embed(FieldSpec target) const;

  std::string to_digits() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_digits();
  }

 private:
  void trim();

  FieldSpec spec_;
  std::vector<std::uint8_t> coeffs_;
};

struct DivModResult {
  Poly q, r;
};

DivModResult divmod(const Poly& a, const Poly& b);  // a = q*b + r, deg r < deg b

// Monic gcd (Euclid).  gcd(0, 0) is an error.
Poly gcd_monic(const Poly& a, const Poly& b);

// Divides all four entries by their common monic gcd, so the 4-tuple is
// primitive.  All-zero input is an error.
std::array<Poly, 4> content_normalize(const std::array<Poly, 4>& m);

// Deterministic total order used for canonical representatives:
// by degree, then coefficient digits from the constant term up.
bool lex_less(const Poly& a, const Poly& b);

}  // namespace ccf
