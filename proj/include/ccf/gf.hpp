// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccf {

// The binary fields GF(2), GF(4) and GF(8) with fixed modulus polynomials
// t^2 + t + 1 and t^3 + t + 1.  An element is a k-bit value whose bits are
// the coefficients of 1, t, t^2, and its "digit" is that value read as an
// integer 0..7.  Digits are the canonical text form everywhere (CLI output,
// fixtures, state keys).
struct FieldSpec {
  std::uint8_t k = 1;        // extension degree over GF(2)
  std::uint8_t modulus = 2;  // bit i = coefficient of t^i, degree-k term included

  static constexpr FieldSpec gf2() { return {1, 0b10}; }
  static constexpr FieldSpec gf4() { return {2, 0b111}; }
  static constexpr FieldSpec gf8() { return {3, 0b1011}; }
  static FieldSpec from_name(const std::string& name);

  constexpr int order() const { return 1 << k; }
  std::string name() const;

  friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

constexpr std::uint8_t mul_bits_slow(std::uint8_t a, std::uint8_t b, FieldSpec spec) {
  unsigned p = 0;
  for (int i = 0; i < spec.k; ++i)
    if ((b >> i) & 1u) p ^= unsigned(a) << i;
  for (int d = 2 * (spec.k - 1); d >= spec.k; --d)
    if ((p >> d) & 1u) p ^= unsigned(spec.modulus) << (d - spec.k);
  return std::uint8_t(p);
}

struct FieldTables {
  std::array<std::array<std::uint8_t, 8>, 8> mul{};
  std::array<std::uint8_t, 8> inv{};
};

constexpr FieldTables make_tables(FieldSpec spec) {
  FieldTables t{};
  const int q = spec.order();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const auto p = mul_bits_slow(std::uint8_t(a), std::uint8_t(b), spec);
      t.mul[a][b] = p;
      if (p == 1) t.inv[a] = std::uint8_t(b);
    }
  return t;
}

inline constexpr std::array<FieldTables, 3> kTables = {
    make_tables(FieldSpec::gf2()), make_tables(FieldSpec::gf4()),
    make_tables(FieldSpec::gf8())};

}  // namespace detail

// Raw-bit operations; used by the polynomial layer (no per-element spec check).
inline std::uint8_t mul_bits(FieldSpec s, std::uint8_t a, std::uint8_t b) {
  return detail::kTables[s.k - 1].mul[a][b];
}
inline std::uint8_t inv_bits(FieldSpec s, std::uint8_t a) {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return detail::kTables[s.k - 1].inv[a];
}
inline std::uint8_t pow_bits(FieldSpec s, std::uint8_t a, unsigned e) {
  std::uint8_t r = 1;
  for (; e; --e) r = mul_bits(s, r, a);
  return r;
}

// A field element carrying its spec.  Mixing specs in one operation is an
// error, never an implicit embedding; use embed() to lift GF(2) values.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(std::uint8_t bits, FieldSpec spec) : bits_(bits), spec_(spec) {
    if (bits >= spec.order()) throw std::invalid_argument("field element bits out of range");
  }

  static FieldElem zero(FieldSpec s) { return FieldElem(0, s); }
  static FieldElem one(FieldSpec s) { return FieldElem(1, s); }
  // Digit codec: digit d <-> element with bit pattern d (1 <-> bit0, t <-> bit1, t^2 <-> bit2).
  static FieldElem from_digit(int d, FieldSpec s) {
    if (d < 0 || d >= s.order()) throw std::invalid_argument("digit out of range for field");
    return FieldElem(std::uint8_t(d), s);
  }

  std::uint8_t bits() const { return bits_; }
  FieldSpec spec() const { return spec_; }
  int digit() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_specs(a, b);
    return FieldElem(std::uint8_t(a.bits_ ^ b.bits_), a.spec_);
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    check_specs(a, b);
    return FieldElem(mul_bits(a.spec_, a.bits_, b.bits_), a.spec_);
  }
  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  FieldElem inv() const { return FieldElem(inv_bits(spec_, bits_), spec_); }
  FieldElem frobenius() const { return *this * *this; }

  // GF(2) -> GF(2^k) embedding (identity on bit 0).
  FieldElem embed(FieldSpec target) const {
    if (spec_ == target) return *this;
    if (spec_.k != 1) throw std::invalid_argument("embed only lifts GF(2) elements");
    return FieldElem(bits_, target);
  }

 private:
  static void check_specs(FieldElem a, FieldElem b) {
    if (!(a.spec_ == b.spec_)) throw std::invalid_argument("field spec mismatch");
  }

  std::uint8_t bits_ = 0;
  FieldSpec spec_ = FieldSpec::gf2();
};

inline FieldElem ff_add(FieldElem a, FieldElem b) { return a + b; }
inline FieldElem ff_mul(FieldElem a, FieldElem b) { return a * b; }
inline FieldElem ff_inv(FieldElem a) { return a.inv(); }
inline FieldElem ff_frobenius(FieldElem a) { return a.frobenius(); }

}  // namespace ccf
