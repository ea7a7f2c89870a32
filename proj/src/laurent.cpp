// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccf {

namespace {

void check_specs(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("series field spec mismatch");
}

}  // namespace

LaurentSeries::LaurentSeries(FieldSpec spec, int lead, std::vector<std::uint8_t> coeffs, bool exact)
    : spec_(spec), c_(std::move(coeffs)), lead_(lead), exact_(exact) {
  for (auto v : c_)
    if (v >= spec.order()) throw std::invalid_argument("series coefficient out of range");
  bottom_ = lead_ - int(c_.size()) + 1;
  normalize();
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
  if (p.is_zero()) return zero(p.spec(), 0, true);
  std::vector<std::uint8_t> desc(p.raw().rbegin(), p.raw().rend());
  return LaurentSeries(p.spec(), p.deg(), std::move(desc), true);
}

void LaurentSeries::normalize() {
  size_t drop = 0;
  while (drop < c_.size() && c_[drop] == 0) ++drop;
  if (drop) {
    c_.erase(c_.begin(), c_.begin() + drop);
    lead_ -= int(drop);
  }
  if (c_.empty()) lead_ = 0;
}

std::uint8_t LaurentSeries::coeff_bits(int d) const {
  if (c_.empty()) {
    if (!knows(d)) throw precision_error("coefficient below known window");
    return 0;
  }
  if (d > lead_) return 0;
  if (d >= bottom_) return c_[lead_ - d];
  if (exact_) return 0;
  throw precision_error("coefficient below known window");
}

LaurentSeries LaurentSeries::frobenius_coeffwise() const {
  LaurentSeries r = *this;
  for (auto& v : r.c_) v = mul_bits(spec_, v, v);
  return r;
}

std::string LaurentSeries::to_string() const {
  if (c_.empty()) return exact_ ? "0" : "0 (to precision)";
  std::ostringstream os;
  bool first = true;
  for (int d = lead_; d >= bottom_; --d) {
    const auto v = coeff_bits(d);
    if (!v) continue;
    if (!first) os << " + ";
    os << int(v) << "@" << d;
    first = false;
  }
  if (!exact_) os << " + O(@" << bottom_ - 1 << ")";
  return os.str();
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  check_specs(a, b);
  const bool exact = a.exact_ && b.exact_;
  // Exact series are known everywhere; they do not limit the result window.
  const long long a_eff = a.exact_ ? kNegInfDeg : a.bottom_;
  const long long b_eff = b.exact_ ? kNegInfDeg : b.bottom_;
  const long long a_top = a.c_.empty() ? kNegInfDeg : a.lead_;
  const long long b_top = b.c_.empty() ? kNegInfDeg : b.lead_;
  const long long top = std::max(a_top, b_top);
  const long long bottom = exact ? std::min<long long>(a.bottom_, b.bottom_) : std::max(a_eff, b_eff);
  if (top < bottom || top == kNegInfDeg)
    return LaurentSeries::zero(a.spec_, int(std::max<long long>(bottom, kNegInfDeg / 2)), exact);
  std::vector<std::uint8_t> c(size_t(top - bottom + 1), 0);
  for (long long d = top; d >= bottom; --d) {
    std::uint8_t v = 0;
    if (d <= a_top && (a.exact_ || d >= a.bottom_)) v ^= a.coeff_bits(int(d));
    if (d <= b_top && (b.exact_ || d >= b.bottom_)) v ^= b.coeff_bits(int(d));
    c[size_t(top - d)] = v;
  }
  return LaurentSeries(a.spec_, int(top), std::move(c), exact);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  check_specs(a, b);
  if ((a.c_.empty() && a.exact_) || (b.c_.empty() && b.exact_))
    return LaurentSeries::zero(a.spec_, 0, true);
  if (a.c_.empty() || b.c_.empty()) {
    // bound on the degree of the (undetermined) product
    const int a_bound = a.c_.empty() ? a.bottom_ - 1 : a.lead_;
    const int b_bound = b.c_.empty() ? b.bottom_ - 1 : b.lead_;
    return LaurentSeries::zero(a.spec_, a_bound + b_bound + 1, false);
  }
  const bool exact = a.exact_ && b.exact_;
  const long long a_eff = a.exact_ ? kNegInfDeg : a.bottom_;
  const long long b_eff = b.exact_ ? kNegInfDeg : b.bottom_;
  const int top = a.lead_ + b.lead_;
  const long long bottom_ll =
      exact ? (long long)a.bottom_ + b.bottom_
            : std::max(a_eff + b.lead_, b_eff + a.lead_);
  const int bottom = int(bottom_ll);
  std::vector<std::uint8_t> c(top - bottom + 1, 0);
  const FieldSpec s = a.spec_;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    const int da = a.lead_ - int(i);
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j]) continue;
      const int d = da + b.lead_ - int(j);
      if (d < bottom) break;
      c[top - d] ^= mul_bits(s, a.c_[i], b.c_[j]);
    }
  }
  return LaurentSeries(s, top, std::move(c), exact);
}

LaurentSeries recip(const LaurentSeries& a, int min_precision) {
  if (a.apparent_zero()) throw std::domain_error("reciprocal of (apparent) zero series");
  std::vector<std::uint8_t> av = a.raw();
  // An exact input can be zero-padded to any requested precision.
  if (a.exact() && int(av.size()) < min_precision) av.resize(min_precision, 0);
  const size_t m = av.size();
  const FieldSpec s = a.spec();
  const std::uint8_t lead_inv = inv_bits(s, av[0]);
  // Invert the tail 1 + n_1 X + n_2 X^2 + ... where X = x^{-1}.
  std::vector<std::uint8_t> t(m, 0);
  t[0] = 1;
  for (size_t k = 1; k < m; ++k) {
    std::uint8_t acc = 0;
    for (size_t i = 1; i <= k; ++i) {
      const std::uint8_t ni = mul_bits(s, av[i], lead_inv);
      if (ni) acc ^= mul_bits(s, ni, t[k - i]);
    }
    t[k] = acc;
  }
  for (auto& v : t) v = mul_bits(s, v, lead_inv);
  size_t nonzero = 0;
  for (auto v : av)
    if (v) ++nonzero;
  const bool exact = a.exact() && nonzero == 1;
  return LaurentSeries(s, -a.lead_deg(), std::move(t), exact);
}

LaurentSeries ls_square(const LaurentSeries& a) {
  const FieldSpec s = a.spec();
  if (a.apparent_zero())
    return LaurentSeries::zero(s, 2 * a.known_bottom() - 1, a.exact());
  const int lead = 2 * a.lead_deg();
  const int bottom = 2 * a.known_bottom() - 1;
  std::vector<std::uint8_t> c(lead - bottom + 1, 0);
  for (int d = a.lead_deg(); d >= a.known_bottom(); --d) {
    const auto v = a.coeff_bits(d);
    if (v) c[lead - 2 * d] = mul_bits(s, v, v);
  }
  return LaurentSeries(s, lead, std::move(c), a.exact());
}

LaurentSeries add_poly(const LaurentSeries& a, const Poly& p) {
  return a + LaurentSeries::from_poly(p.spec() == a.spec() ? p : p.embed(a.spec()));
}

LaurentSeries ls_subst_x_plus_1(const LaurentSeries& a) {
  const FieldSpec s = a.spec();
  if (a.apparent_zero()) return a;
  const int lead = a.lead_deg();
  const int bottom = a.known_bottom();
  const int width = lead - bottom + 1;
  const int slack = 2 * width + 3 * (std::abs(lead) + 1) + 8;

  // Truncated series for (x+1)^d, walked downward from d = lead.
  const LaurentSeries inv_xp1 = recip(LaurentSeries::from_poly(Poly(s, {1, 1})), slack);
  LaurentSeries pw(s);
  if (lead >= 0) {
    Poly xp1(s, {1, 1});
    Poly acc = Poly::one(s);
    for (int i = 0; i < lead; ++i) acc = acc * xp1;
    pw = LaurentSeries::from_poly(acc);
  } else {
    pw = LaurentSeries::from_poly(Poly::one(s));
    for (int i = 0; i < -lead; ++i) pw = pw * inv_xp1;
  }

  std::vector<std::uint8_t> out(width, 0);
  for (int d = lead; d >= bottom; --d) {
    const auto v = a.coeff_bits(d);
    if (v) {
      for (int e = std::min(pw.lead_deg(), lead); e >= bottom; --e)
        if (const auto w = pw.coeff_bits(e)) out[lead - e] ^= mul_bits(s, v, w);
    }
    pw = pw * inv_xp1;
  }
  return LaurentSeries(s, lead, std::move(out), false);
}

Poly integral_part(const LaurentSeries& u) {
  const FieldSpec s = u.spec();
  if (u.apparent_zero()) {
    if (!u.knows(0) && u.known_bottom() > 0)
      throw precision_error("integral part: window does not cover degree 0");
    return Poly(s);
  }
  const int lead = u.lead_deg();
  if (lead < 0) return Poly(s);
  if (u.known_bottom() > 0 && !u.exact())
    throw precision_error("integral part: window does not cover degree 0");
  std::vector<std::uint8_t> c(lead + 1, 0);
  for (int d = 0; d <= lead; ++d) c[d] = u.knows(d) ? u.coeff_bits(d) : 0;
  return Poly(s, std::move(c));
}

Cubic::Cubic(std::array<Poly, 4> coeffs) : a(std::move(coeffs)) {
  for (int i = 1; i < 4; ++i)
    if (!(a[i].spec() == a[0].spec()))
      throw std::invalid_argument("cubic coefficients over mixed fields");
}

Cubic Cubic::embed(FieldSpec target) const {
  return Cubic(std::array<Poly, 4>{a[0].embed(target), a[1].embed(target), a[2].embed(target), a[3].embed(target)});
}

std::string Cubic::encode() const {
  return a[0].to_digits() + "," + a[1].to_digits() + "," + a[2].to_digits() + "," + a[3].to_digits();
}

Cubic Cubic::decode(const std::string& text, FieldSpec s) {
  std::array<Poly, 4> out;
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    size_t comma = text.find(',', pos);
    if ((comma == std::string::npos) != (i == 3))
      throw std::invalid_argument("cubic encoding needs four comma-separated digit strings");
    out[i] = Poly::from_digits(text.substr(pos, comma == std::string::npos ? comma : comma - pos), s);
    pos = comma + 1;
  }
  return Cubic(std::move(out));
}

Cubic named_cubic(const std::string& name) {
  const FieldSpec s = FieldSpec::gf2();
  if (name == "A") return Cubic::decode("01,1,0,01", s);
  if (name == "B") return Cubic::decode("01,01,0,11", s);
  if (name == "C") return Cubic::decode("01,11,0,01", s);
  if (name == "D") return Cubic::decode("1,001,101,01", s);
  throw std::invalid_argument("unknown named cubic: " + name);
}

LaurentSeries eval_cubic(const Cubic& c, const LaurentSeries& u) {
  const FieldSpec s = u.spec();
  LaurentSeries acc = LaurentSeries::from_poly(c.a[3].embed(s));
  for (int l = 2; l >= 0; --l) {
    acc = acc * u;
    acc = add_poly(acc, c.a[l].embed(s));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Newton polygon root extraction
// ---------------------------------------------------------------------------

namespace {

// Dense Laurent polynomial (exact, both signs of degree) used only inside the
// root extractor.
struct LPoly {
  FieldSpec spec;
  int off = 0;  // degree of c[0]; ascending from there
  std::vector<std::uint8_t> c;

  explicit LPoly(FieldSpec s) : spec(s) {}

  bool zero() const {
    for (auto v : c)
      if (v) return false;
    return true;
  }
  int deg() const {
    for (int i = int(c.size()) - 1; i >= 0; --i)
      if (c[i]) return off + i;
    return kNegInfDeg;
  }
  std::uint8_t lead() const {
    const int d = deg();
    return d == kNegInfDeg ? 0 : c[d - off];
  }
  std::uint8_t at(int d) const {
    if (d < off || d - off >= int(c.size())) return 0;
    return c[d - off];
  }
  void ensure(int lo, int hi) {
    if (c.empty()) {
      off = lo;
      c.assign(hi - lo + 1, 0);
      return;
    }
    if (lo < off) {
      c.insert(c.begin(), off - lo, 0);
      off = lo;
    }
    if (hi - off >= int(c.size())) c.resize(hi - off + 1, 0);
  }
  void xor_at(int d, std::uint8_t v) {
    if (!v) return;
    ensure(std::min(d, c.empty() ? d : off), std::max(d, c.empty() ? d : off + int(c.size()) - 1));
    c[d - off] ^= v;
  }
  // this += scale * o * x^shift
  void add_scaled_shift(const LPoly& o, std::uint8_t scale, int shift) {
    if (!scale) return;
    for (size_t i = 0; i < o.c.size(); ++i)
      if (o.c[i]) xor_at(o.off + int(i) + shift, mul_bits(spec, o.c[i], scale));
  }

  static LPoly from_poly(const Poly& p, FieldSpec s) {
    LPoly r(s);
    const Poly q = p.embed(s);
    r.c = q.raw();
    r.off = 0;
    return r;
  }
};

struct Branch {
  LPoly A, B, C;                                  // P(s + w) = A + Bw + Cw^2 + a3 w^3
  std::vector<std::pair<int, std::uint8_t>> terms;  // accepted (degree, coefficient)
  long long e_limit;
};

}  // namespace

std::vector<LaurentSeries> newton_polygon_roots(const Cubic& cu, FieldSpec field, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (!cu.is_cubic()) throw std::invalid_argument("a3 must be nonzero");
  const FieldSpec s = field;
  const LPoly a3 = LPoly::from_poly(cu.a[3], s);

  std::vector<LaurentSeries> roots;
  auto emit = [&](const Branch& br, bool exact) {
    if (br.terms.empty()) {
      roots.push_back(LaurentSeries::zero(s, 0, exact));
      return;
    }
    const int lead = br.terms.front().first;
    const int stop = lead - precision + 1;
    std::vector<std::uint8_t> desc(precision, 0);
    for (auto [d, v] : br.terms)
      if (d >= stop) desc[lead - d] = v;
    roots.emplace_back(s, lead, std::move(desc), exact);
  };

  std::vector<Branch> stack;
  {
    Branch b0{LPoly::from_poly(cu.a[0], s), LPoly::from_poly(cu.a[1], s),
              LPoly::from_poly(cu.a[2], s), {}, std::numeric_limits<long long>::max() / 2};
    stack.push_back(std::move(b0));
  }

  while (!stack.empty()) {
    Branch br = std::move(stack.back());
    stack.pop_back();

    for (;;) {
      if (br.A.zero()) {
        emit(br, true);  // the prefix is an exact (rational) root
        break;
      }
      const int degs[4] = {br.A.deg(), br.B.deg(), br.C.deg(), a3.deg()};
      const std::uint8_t leads[4] = {br.A.lead(), br.B.lead(), br.C.lead(), a3.lead()};

      // Candidate exponents: integer balances between any two terms of
      // A + Bw + Cw^2 + a3 w^3 at deg(w) = e.
      std::set<long long> cand;
      for (int l = 0; l < 4; ++l) {
        if (degs[l] == kNegInfDeg) continue;
        for (int m = l + 1; m < 4; ++m) {
          if (degs[m] == kNegInfDeg) continue;
          const long long num = degs[l] - degs[m];
          const long long den = m - l;
          if (num % den) continue;
          const long long e = num / den;
          if (e < br.e_limit) cand.insert(e);
        }
      }

      std::vector<std::pair<long long, std::uint8_t>> valid;
      for (const long long e : cand) {
        long long top = kNegInfDeg;
        for (int l = 0; l < 4; ++l)
          if (degs[l] != kNegInfDeg) top = std::max(top, degs[l] + l * e);
        for (int cb = 1; cb < s.order(); ++cb) {
          std::uint8_t sum = 0;
          for (int l = 0; l < 4; ++l)
            if (degs[l] != kNegInfDeg && degs[l] + l * e == top)
              sum ^= mul_bits(s, leads[l], pow_bits(s, std::uint8_t(cb), unsigned(l)));
          if (sum == 0) valid.emplace_back(e, std::uint8_t(cb));
        }
      }

      if (valid.empty()) break;  // no Laurent continuation on this branch

      long long stop = std::numeric_limits<long long>::min() / 2;
      if (!br.terms.empty()) stop = br.terms.front().first - precision + 1;
      std::vector<std::pair<long long, std::uint8_t>> live;
      for (auto& v : valid)
        if (v.first >= stop) live.push_back(v);
      if (live.empty()) {
        emit(br, false);  // all continuations lie below the requested window
        break;
      }

      auto advance = [&a3](Branch& b, long long e, std::uint8_t cb) {
        const int ei = int(e);
        const std::uint8_t cb2 = mul_bits(b.A.spec, cb, cb);
        const std::uint8_t cb3 = mul_bits(b.A.spec, cb2, cb);
        b.A.add_scaled_shift(b.B, cb, ei);
        b.A.add_scaled_shift(b.C, cb2, 2 * ei);
        b.A.add_scaled_shift(a3, cb3, 3 * ei);
        b.B.add_scaled_shift(a3, cb2, 2 * ei);
        b.C.add_scaled_shift(a3, cb, ei);
        b.terms.emplace_back(ei, cb);
        b.e_limit = e;
      };

      for (size_t v = 1; v < live.size(); ++v) {
        Branch fork = br;
        advance(fork, live[v].first, live[v].second);
        stack.push_back(std::move(fork));
      }
      advance(br, live[0].first, live[0].second);
    }
  }

  std::sort(roots.begin(), roots.end(), [](const LaurentSeries& a, const LaurentSeries& b) {
    if (a.lead_deg() != b.lead_deg()) return a.lead_deg() > b.lead_deg();
    return a.raw() < b.raw();
  });
  return roots;
}

// ---------------------------------------------------------------------------
// Classical expansion and convergents
// ---------------------------------------------------------------------------

ClassicalExpansion classical_cf(const LaurentSeries& u, int max_terms) {
  ClassicalExpansion out;
  LaurentSeries cur = u;
  for (int k = 0; k < max_terms; ++k) {
    if (cur.apparent_zero()) {
      if (k == 0) {
        // u itself is zero (to precision); p_0 = 0 and the expansion ends
        out.pqs.push_back(Poly(u.spec()));
        (cur.exact() ? out.terminated : out.exhausted) = true;
        out.certified = int(out.pqs.size());
        return out;
      }
      throw std::logic_error("complete quotient became zero");
    }
    if (!cur.exact() && cur.lead_deg() >= 0 && cur.known_bottom() > 0) {
      out.exhausted = true;
      break;
    }
    const Poly p = integral_part(cur);
    out.pqs.push_back(p);
    LaurentSeries v = add_poly(cur, p);  // char 2: subtraction is addition
    if (v.apparent_zero()) {
      if (v.exact())
        out.terminated = true;
      else
        out.exhausted = true;
      break;
    }
    if (v.lead_deg() >= 0) throw std::logic_error("fractional part has nonnegative degree");
    cur = recip(v);
  }
  out.certified = int(out.pqs.size());
  return out;
}

std::vector<Convergent> convergents(const std::vector<Poly>& pqs) {
  if (pqs.empty()) throw std::invalid_argument("convergents of empty quotient list");
  const FieldSpec s = pqs[0].spec();
  std::vector<Convergent> out;
  out.reserve(pqs.size());
  Poly a_prev2 = Poly::one(s), a_prev1 = pqs[0];
  Poly b_prev2 = Poly(s), b_prev1 = Poly::one(s);
  out.push_back({a_prev1, b_prev1, -1});
  for (size_t n = 1; n < pqs.size(); ++n) {
    Poly an = pqs[n] * a_prev1 + a_prev2;
    Poly bn = pqs[n] * b_prev1 + b_prev2;
    out[n - 1].accuracy = pqs[n].deg();
    out.push_back({an, bn, -1});
    a_prev2 = std::move(a_prev1);
    a_prev1 = std::move(an);
    b_prev2 = std::move(b_prev1);
    b_prev1 = std::move(bn);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibility over the closure
// ---------------------------------------------------------------------------

namespace {

std::vector<Poly> monic_divisors(const Poly& a) {
  const FieldSpec s = a.spec();
  std::vector<Poly> out{Poly::one(s)};
  const int max_deg = a.deg();
  std::vector<std::uint8_t> coeffs;
  for (int d = 1; d <= max_deg; ++d) {
    coeffs.assign(d + 1, 0);
    coeffs[d] = 1;
    // enumerate the q^d monic candidates of degree d
    const long long count = 1LL << (s.k * d);
    for (long long mask = 0; mask < count; ++mask) {
      long long m = mask;
      for (int i = 0; i < d; ++i) {
        coeffs[i] = std::uint8_t(m & (s.order() - 1));
        m >>= s.k;
      }
      Poly cand(s, coeffs);
      if (divmod(a, cand).r.is_zero()) out.push_back(cand);
    }
  }
  return out;
}

}  // namespace

bool irreducible_over_closure(const Cubic& c) {
  if (!c.is_cubic()) return false;
  if (c.a[0].is_zero()) return false;  // y = 0 is a root
  const FieldSpec fields[3] = {FieldSpec::gf2(), FieldSpec::gf4(), FieldSpec::gf8()};
  for (const auto f : fields) {
    const Cubic ce = c.embed(f);
    const auto ps = monic_divisors(ce.a[0]);
    const auto qs = monic_divisors(ce.a[3]);
    for (const auto& q : qs) {
      const Poly q2 = q.square();
      const Poly q3 = q2 * q;
      for (const auto& p0 : ps) {
        for (int cb = 1; cb < f.order(); ++cb) {
          const Poly p = p0.scaled(std::uint8_t(cb));
          const Poly p2 = p.square();
          // a0 q^3 + a1 p q^2 + a2 p^2 q + a3 p^3
          Poly val = ce.a[0] * q3 + ce.a[1] * p * q2 + ce.a[2] * p2 * q + ce.a[3] * p2 * p;
          if (val.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ccf
