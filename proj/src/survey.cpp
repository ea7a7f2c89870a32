// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/survey.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace ccf {

namespace {

// y-polynomials with GF(2) constant coefficients, as bitmasks (bit k = y^k).
std::uint8_t ymask_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  for (int i = 0; i < 4; ++i)
    if ((b >> i) & 1) p ^= std::uint8_t(a << i);
  return p;
}

std::uint8_t ymask_pow(std::uint8_t a, int e) {
  std::uint8_t r = 1;
  while (e--) r = ymask_mul(r, a);
  return r;
}

}  // namespace

Substitution compose(const Substitution& f, const Substitution& g) {
  Substitution h;
  h.word = f.word + g.word;
  h.xshift = f.xshift != g.xshift;
  // 2x2 matrix product over GF(2)
  h.ya = (f.ya & g.ya) ^ (f.yb & g.yc);
  h.yb = (f.ya & g.yb) ^ (f.yb & g.yd);
  h.yc = (f.yc & g.ya) ^ (f.yd & g.yc);
  h.yd = (f.yc & g.yb) ^ (f.yd & g.yd);
  return h;
}

const std::vector<Substitution>& substitution_group() {
  static const std::vector<Substitution> group = [] {
    const Substitution id{};
    const Substitution gx{"x", true, 1, 0, 0, 1};
    const Substitution gs{"s", false, 1, 1, 0, 1};  // y -> y + 1
    const Substitution gr{"r", false, 0, 1, 1, 0};  // y -> 1/y
    std::vector<Substitution> out{id};
    for (size_t head = 0; head < out.size(); ++head) {
      for (const auto& g : {gx, gs, gr}) {
        Substitution h = compose(g, out[head]);
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
      }
    }
    return out;
  }();
  return group;
}

std::string encode_tuple(const CubicTuple& t) {
  return t[0].to_digits() + "," + t[1].to_digits() + "," + t[2].to_digits() + "," +
         t[3].to_digits();
}

CubicTuple apply_substitution(const CubicTuple& c, const Substitution& s) {
  const FieldSpec f = c[0].spec();
  // P(y) -> (yc y + yd)^3 P((ya y + yb)/(yc y + yd)), expanded in y
  const std::uint8_t num = std::uint8_t((s.ya << 1) | s.yb);
  const std::uint8_t den = std::uint8_t((s.yc << 1) | s.yd);
  CubicTuple out{Poly(f), Poly(f), Poly(f), Poly(f)};
  for (int l = 0; l <= 3; ++l) {
    if (c[l].is_zero()) continue;
    const std::uint8_t mask = ymask_mul(ymask_pow(num, l), ymask_pow(den, 3 - l));
    for (int k = 0; k <= 3; ++k)
      if ((mask >> k) & 1) out[k] += c[l];
  }
  if (s.xshift)
    for (auto& p : out) p = p.subst_x_plus_1();
  return out;
}

std::vector<CubicTuple> enumerate_cubics(int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("max_deg must be >= 0");
  const FieldSpec f = FieldSpec::gf2();
  const int width = max_deg + 1;
  const long long per = 1LL << width;
  std::vector<CubicTuple> out;
  out.reserve(size_t(per * per * per * per));
  auto from_mask = [&](long long m) {
    std::vector<std::uint8_t> bits(width, 0);
    for (int i = 0; i < width; ++i) bits[i] = (m >> i) & 1;
    return Poly(f, bits);
  };
  for (long long m0 = 0; m0 < per; ++m0)
    for (long long m1 = 0; m1 < per; ++m1)
      for (long long m2 = 0; m2 < per; ++m2)
        for (long long m3 = 0; m3 < per; ++m3)
          out.push_back({from_mask(m0), from_mask(m1), from_mask(m2), from_mask(m3)});
  return out;
}

namespace {

std::string lead_digits_of(const LaurentSeries& r, size_t count = 8) {
  std::string s;
  const auto& raw = r.raw();
  for (size_t i = 0; i < raw.size() && i < count; ++i) s.push_back(char('0' + raw[i]));
  return s;
}

bool coeffs_in_gf2(const LaurentSeries& r) {
  for (auto v : r.raw())
    if (v > 1) return false;
  return true;
}

}  // namespace

SurveyRecord classify_equation(const CubicTuple& c, const SurveyParams& params) {
  SurveyRecord rec;
  rec.cubic = c;
  rec.is_cubic = !c[3].is_zero();
  if (!rec.is_cubic) return rec;
  const Cubic cu(c);
  rec.irreducible = irreducible_over_closure(cu);
  if (!rec.irreducible) return rec;

  for (const FieldSpec field : {FieldSpec::gf2(), FieldSpec::gf4(), FieldSpec::gf8()}) {
    const auto roots = newton_polygon_roots(cu, field, params.precision);
    for (size_t idx = 0; idx < roots.size(); ++idx) {
      if (field.k > 1 && coeffs_in_gf2(roots[idx])) continue;  // already seen over GF(2)
      RunOptions opts;
      opts.n = params.threshold;
      opts.probable_threshold = params.threshold;
      opts.detect = true;
      opts.keep_pqs = false;
      opts.log_pairs = true;
      opts.precision = params.precision;
      const auto rep = run_expansion(cu, field, int(idx), opts);
      RootResult rr;
      rr.field = field.name();
      rr.root_index = int(idx);
      rr.lead_digits = lead_digits_of(roots[idx]);
      rr.status = rep.status;
      rr.witness_index = rep.witness_index;
      rr.witness_degree = rep.witness_degree;
      rr.ht = rep.ht;
      rr.pairs = rep.log.pair_count();
      rr.produced = rep.produced;
      if (rep.status == ExpStatus::probable_bounded) rec.probable_bounded = true;
      rec.roots.push_back(std::move(rr));
    }
  }
  return rec;
}

std::vector<Orbit> orbit_partition(const std::vector<CubicTuple>& cs) {
  std::map<std::string, size_t> index_of;
  for (size_t i = 0; i < cs.size(); ++i) index_of.emplace(encode_tuple(cs[i]), i);
  std::vector<bool> seen(cs.size(), false);
  std::vector<Orbit> orbits;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (seen[i]) continue;
    Orbit orb;
    std::set<std::string> encodings;
    for (const auto& sub : substitution_group()) {
      const CubicTuple img = apply_substitution(cs[i], sub);
      const std::string enc = encode_tuple(img);
      if (auto it = index_of.find(enc); it != index_of.end() && !seen[it->second]) {
        seen[it->second] = true;
        orb.members.push_back(it->second);
      }
      encodings.insert(enc);
    }
    std::sort(orb.members.begin(), orb.members.end());
    // canonical representative: least encoding over the whole orbit, whether
    // or not that member is in the input list
    orb.representative = Cubic::decode(*encodings.begin(), FieldSpec::gf2()).a;
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    return encode_tuple(a.representative) < encode_tuple(b.representative);
  });
  return orbits;
}

SurveyResult run_survey(int max_deg, const SurveyParams& params) {
  SurveyResult res;
  const auto tuples = enumerate_cubics(max_deg);
  res.total = int(tuples.size());
  res.records.resize(tuples.size());

  const int jobs = std::max(1, params.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < tuples.size(); ++i)
      res.records[i] = classify_equation(tuples[i], params);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= tuples.size()) return;
          res.records[i] = classify_equation(tuples[i], params);
        }
      }));
    for (auto& f : futs) f.get();
  }

  std::vector<CubicTuple> winners;
  std::vector<size_t> winner_pos;
  for (size_t i = 0; i < res.records.size(); ++i) {
    const auto& r = res.records[i];
    if (r.irreducible) ++res.irreducible;
    if (r.probable_bounded) {
      ++res.winners;
      winners.push_back(r.cubic);
      winner_pos.push_back(i);
    }
    int gf2_roots = 0, gf2_probable = 0;
    for (const auto& rr : r.roots)
      if (rr.field == "gf2") {
        ++gf2_roots;
        if (rr.status == ExpStatus::probable_bounded) ++gf2_probable;
      }
    if (gf2_roots == 3) ++res.gf2_triple_profile[gf2_probable];
  }

  res.orbits = orbit_partition(winners);
  for (size_t oid = 0; oid < res.orbits.size(); ++oid) {
    auto& orb = res.orbits[oid];
    for (auto& m : orb.members) {
      res.records[winner_pos[m]].orbit_id = int(oid);
      m = winner_pos[m];  // rebase member indices onto the full record list
    }
  }
  return res;
}

namespace {

int match_root(const std::vector<LaurentSeries>& roots, const LaurentSeries& target) {
  for (size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].lead_deg() != target.lead_deg()) continue;
    const int m = std::min({roots[k].precision(), target.precision(), 16});
    bool ok = true;
    for (int d = 0; d < m; ++d)
      if (roots[k].raw()[d] != target.raw()[d]) { ok = false; break; }
    if (ok) return int(k);
  }
  throw engine_error("no root of the transformed equation matches the transformed series");
}

}  // namespace

bool boundedness_transport_check(const CubicTuple& c, FieldSpec field, int root_index,
                                 long long n) {
  const Cubic cu(c);
  RunOptions opts;
  opts.n = n;
  opts.probable_threshold = n;
  opts.detect = true;
  opts.keep_pqs = false;
  opts.log_pairs = false;

  const ExpStatus base = run_expansion(cu, field, root_index, opts).status;

  const int match_prec = 64;
  const auto roots = newton_polygon_roots(cu, field, match_prec);
  const LaurentSeries& u = roots.at(root_index);

  // 1/u satisfies the coefficient-reversed equation
  const CubicTuple rev{c[3], c[2], c[1], c[0]};
  // 1+u satisfies the y -> y+1 image
  const Substitution* ys = nullptr;
  const Substitution* xs = nullptr;
  for (const auto& s : substitution_group()) {
    if (s.xshift == false && s.ya == 1 && s.yb == 1 && s.yc == 0 && s.yd == 1) ys = &s;
    if (s.xshift == true && s.ya == 1 && s.yb == 0 && s.yc == 0 && s.yd == 1) xs = &s;
  }
  const CubicTuple shifted = apply_substitution(c, *ys);
  const CubicTuple xsub = apply_substitution(c, *xs);

  struct Case {
    CubicTuple tuple;
    LaurentSeries series;
  };
  const Case cases[3] = {
      {rev, recip(u)},
      {shifted, add_poly(u, Poly::one(u.spec()))},
      {xsub, ls_subst_x_plus_1(u)},
  };

  for (const auto& cs : cases) {
    const Cubic tc(cs.tuple);
    const auto troots = newton_polygon_roots(tc, field, match_prec);
    const int idx = match_root(troots, cs.series);
    if (run_expansion(tc, field, idx, opts).status != base) return false;
  }
  return true;
}

std::string survey_csv(const SurveyResult& r) {
  std::ostringstream os;
  os << "cubic,field,root,lead,status,witness_index,witness_degree,ht,pairs,orbit\n";
  for (const auto& rec : r.records) {
    if (!rec.irreducible) continue;
    for (const auto& rr : rec.roots) {
      os << encode_tuple(rec.cubic) << ',' << rr.field << ',' << rr.root_index << ','
         << rr.lead_digits << ',' << to_string(rr.status) << ',' << rr.witness_index << ','
         << rr.witness_degree << ',' << rr.ht << ',' << rr.pairs << ',' << rec.orbit_id << '\n';
    }
  }
  return os.str();
}

}  // namespace ccf
