// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccf {

namespace {

void check_specs(const Poly& a, const Poly& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("polynomial field spec mismatch");
}

}  // namespace

Poly::Poly(FieldSpec spec, std::vector<std::uint8_t> ascending_coeffs)
    : spec_(spec), coeffs_(std::move(ascending_coeffs)) {
  for (auto c : coeffs_)
    if (c >= spec_.order()) throw std::invalid_argument("coefficient out of range for field");
  trim();
}

Poly Poly::monomial(FieldSpec s, std::uint8_t cbits, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (cbits == 0) return Poly(s);
  std::vector<std::uint8_t> c(degree + 1, 0);
  c.back() = cbits;
  return Poly(s, std::move(c));
}

Poly Poly::from_digits(const std::string& digits, FieldSpec s) {
  if (digits.empty()) throw std::invalid_argument("empty digit string");
  std::vector<std::uint8_t> c;
  c.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '7') throw std::invalid_argument("invalid digit character in polynomial");
    int d = ch - '0';
    if (d >= s.order()) throw std::invalid_argument("digit out of range for field");
    c.push_back(std::uint8_t(d));
  }
  return Poly(s, std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  check_specs(a, b);
  Poly r(a.spec_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] ^= b.coeffs_[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_specs(a, b);
  Poly r(a.spec_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const FieldSpec s = a.spec_;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::uint8_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] ^= mul_bits(s, ai, b.coeffs_[j]);
  }
  r.trim();
  return r;
}

Poly Poly::scaled(std::uint8_t cbits) const {
  Poly r(spec_);
  if (cbits == 0) return r;
  r.coeffs_.resize(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = mul_bits(spec_, coeffs_[i], cbits);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_bits(spec_, lead_bits()));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  Poly r(spec_);
  r.coeffs_.assign(coeffs_.size() + k, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
  return r;
}

Poly Poly::square() const {
  Poly r(spec_);
  if (is_zero()) return r;
  r.coeffs_.assign(2 * coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[2 * i] = mul_bits(spec_, coeffs_[i], coeffs_[i]);
  return r;
}

Poly Poly::subst_x_plus_1() const {
  // Horner with x+1 as the evaluation point.
  Poly xp1(spec_, {1, 1});
  Poly r(spec_);
  for (int i = int(coeffs_.size()) - 1; i >= 0; --i) {
    r = r * xp1;
    r = r + Poly(spec_, {coeffs_[i]});
  }
  return r;
}

Poly Poly::coeff_frobenius() const {
  Poly r(spec_);
  r.coeffs_.resize(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = mul_bits(spec_, coeffs_[i], coeffs_[i]);
  return r;
}

Poly Poly::fold_to_gf2() const {
  Poly r(FieldSpec::gf2());
  r.coeffs_.resize(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] ? 1 : 0;
  return r;
}

Poly Poly::embed(FieldSpec target) const {
  if (spec_ == target) return *this;
  if (spec_.k != 1) throw std::invalid_argument("embed only lifts GF(2) polynomials");
  Poly r(target);
  r.coeffs_ = coeffs_;
  return r;
}

std::string Poly::to_digits() const {
  if (is_zero()) return "0";
  std::string s;
  s.reserve(coeffs_.size());
  for (auto c : coeffs_) s.push_back(char('0' + c));
  return s;
}

DivModResult divmod(const Poly& a, const Poly& b) {
  check_specs(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldSpec s = a.spec();
  std::vector<std::uint8_t> rem(a.raw());
  const int db = b.deg();
  const std::uint8_t lead_inv = inv_bits(s, b.lead_bits());
  std::vector<std::uint8_t> q;
  if (int(rem.size()) - 1 >= db) q.assign(rem.size() - db, 0);
  for (int d = int(rem.size()) - 1; d >= db; --d) {
    const std::uint8_t top = rem[d];
    if (top == 0) continue;
    const std::uint8_t f = mul_bits(s, top, lead_inv);
    q[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] ^= mul_bits(s, f, b.coeff_bits(i));
  }
  return {Poly(s, std::move(q)), Poly(s, std::move(rem))};
}

Poly gcd_monic(const Poly& a, const Poly& b) {
  check_specs(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).r;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

std::array<Poly, 4> content_normalize(const std::array<Poly, 4>& m) {
  const Poly* nonzero = nullptr;
  for (const auto& p : m)
    if (!p.is_zero()) { nonzero = &p; break; }
  if (!nonzero) throw std::domain_error("content of all-zero tuple");
  Poly g = *nonzero;
  for (const auto& p : m) {
    if (&p == nonzero || p.is_zero()) continue;
    g = gcd_monic(g, p);
    if (g.deg() == 0) break;
  }
  g = g.monic();
  if (g.deg() <= 0) return m;
  std::array<Poly, 4> out;
  for (int i = 0; i < 4; ++i) {
    auto [q, r] = divmod(m[i], g);
    if (!r.is_zero()) throw std::logic_error("content division left a remainder");
    out[i] = std::move(q);
  }
  return out;
}

bool lex_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = 0; i <= a.deg(); ++i)
    if (a.coeff_bits(i) != b.coeff_bits(i)) return a.coeff_bits(i) < b.coeff_bits(i);
  return false;
}

}  // namespace ccf
