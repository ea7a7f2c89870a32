// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccf/poly.hpp"

namespace ccf {

// Thrown when a series operation cannot justify a single result coefficient,
// or when an expansion step needs coefficients beyond the known window.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated formal Laurent series in x^{-1}.  Coefficients are stored from
// the leading degree downward; every stored coefficient is exact, and the
// series is known on [known_bottom(), +inf).  A series may be "apparently
// zero": all known coefficients vanish but lower ones are undetermined
// (unless it is exact, in which case it is genuinely zero).
//
// Debug text form writes digit@degree terms, e.g. "2@0 + 1@-1 + ...".
class LaurentSeries {
 public:
  explicit LaurentSeries(FieldSpec spec = FieldSpec::gf2()) : spec_(spec) {}

  // coeffs[0] is the coefficient at degree `lead`, descending from there.
  LaurentSeries(FieldSpec spec, int lead, std::vector<std::uint8_t> coeffs, bool exact = false);

  static LaurentSeries zero(FieldSpec s, int known_bottom, bool exact) {
    LaurentSeries z(s);
    z.bottom_ = known_bottom;
    z.exact_ = exact;
    return z;
  }
  static LaurentSeries from_poly(const Poly& p);

  FieldSpec spec() const { return spec_; }
  bool apparent_zero() const { return c_.empty(); }
  bool exact() const { return exact_; }
  int lead_deg() const { return c_.empty() ? kNegInfDeg : lead_; }
  int known_bottom() const { return bottom_; }
  int precision() const { return c_.empty() ? 0 : lead_ - bottom_ + 1; }

  bool knows(int d) const { return exact_ || d >= bottom_; }
  std::uint8_t coeff_bits(int d) const;
  const std::vector<std::uint8_t>& raw() const { return c_; }

  LaurentSeries frobenius_coeffwise() const;
  std::string to_string() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  void normalize();

  FieldSpec spec_;
  std::vector<std::uint8_t> c_;  // c_[i] = coefficient at degree lead_ - i
  int lead_ = 0;
  int bottom_ = 1;  // lowest degree with a known coefficient
  bool exact_ = false;
};

// `min_precision` only matters for exact inputs, whose windows can be
// zero-padded before inversion.
LaurentSeries recip(const LaurentSeries& a, int min_precision = 0);
LaurentSeries ls_square(const LaurentSeries& a);
LaurentSeries add_poly(const LaurentSeries& a, const Poly& p);
// x -> x+1 on a truncated series (used by the boundedness transport check).
LaurentSeries ls_subst_x_plus_1(const LaurentSeries& a);

// Sum of the terms of nonnegative degree.  Needs the window to cover degree
// zero unless the series leads below it.
Poly integral_part(const LaurentSeries& u);

// a0(x) + a1(x) y + a2(x) y^2 + a3(x) y^3.
struct Cubic {
  std::array<Poly, 4> a;

  Cubic() = default;
  explicit Cubic(std::array<Poly, 4> coeffs);
  Cubic(const Poly& a0, const Poly& a1, const Poly& a2, const Poly& a3)
      : Cubic(std::array<Poly, 4>{a0, a1, a2, a3}) {}

  FieldSpec spec() const { return a[0].spec(); }
  bool is_cubic() const { return !a[3].is_zero(); }
  Cubic embed(FieldSpec target) const;
  std::string encode() const;  // digit strings joined by commas
  static Cubic decode(const std::string& text, FieldSpec s);
};

// The three orbit representatives plus the three-root example:
// A: x + y + x y^3, B: x + x y + (1+x) y^3, C: x + (1+x) y + x y^3,
// D: 1 + x^2 y + (1+x^2) y^2 + x y^3.
Cubic named_cubic(const std::string& name);

// Evaluates the cubic at a series, embedding the coefficients as needed.
LaurentSeries eval_cubic(const Cubic& c, const LaurentSeries& u);

// All roots of c in F((x^{-1})) with coefficients in `field`, each carrying
// `precision` known coefficients.  Branches that would need fractional
// exponents of x are excluded.  Roots are ordered by leading degree
// (descending), then by coefficient digits (ascending).
std::vector<LaurentSeries> newton_polygon_roots(const Cubic& c, FieldSpec field, int precision);

struct ClassicalExpansion {
  std::vector<Poly> pqs;
  int certified = 0;       // all returned quotients are certified exact
  bool terminated = false; // the series is rational and the expansion is complete
  bool exhausted = false;  // precision ran out before max_terms
};

// Direct expansion u_{i+1} = 1/(u_i - p_i).  Quadratic cost in the number of
// quotients; serves as the independent oracle and the engine bootstrap.
ClassicalExpansion classical_cf(const LaurentSeries& u, int max_terms);

struct Convergent {
  Poly a, b;
  int accuracy = -1;  // deg p_{n+1} when the next quotient is known
};

std::vector<Convergent> convergents(const std::vector<Poly>& pqs);

// True iff c has no root in GF(2^m)(x) for m in {1,2,3}, i.e. the cubic is
// irreducible over the algebraic closure of GF(2).  Rational-root search over
// divisors of a0 and a3.
bool irreducible_over_closure(const Cubic& c);

}  // namespace ccf
