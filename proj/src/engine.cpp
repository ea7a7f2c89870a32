// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/engine.hpp"

#include <algorithm>
#include <sstream>

namespace ccf {

MRState flt_from_cubic(const Cubic& c, FieldSpec root_field) {
  if (!c.is_cubic()) throw std::invalid_argument("a3 must be nonzero");
  const Cubic ce = c.embed(root_field);
  std::array<Poly, 4> m = {ce.a[2], ce.a[0], ce.a[3], ce.a[1]};
  m = content_normalize(m);
  MRState st;
  st.Q = std::move(m[0]);
  st.R = std::move(m[1]);
  st.S = std::move(m[2]);
  st.T = std::move(m[3]);
  st.det = st.Q * st.T + st.R * st.S;
  if (st.det.is_zero())
    throw std::domain_error("QT - RS = 0: the equation has no cubic Laurent root");
  st.ht = st.det.deg();
  return st;
}

void consume_step(MRState& st, const Poly& pj) {
  const Poly pj2 = pj.square();
  Poly new_q = st.Q * pj2 + st.R;
  Poly new_s = st.S * pj2 + st.T;
  st.R = std::move(st.Q);
  st.T = std::move(st.S);
  st.Q = std::move(new_q);
  st.S = std::move(new_s);
  ++st.j;
}

bool produce_guard(const MRState& st, int deg_pj) {
  const long long ds = st.S.deg(), dt = st.T.deg(), dp = deg_pj;
  return ds + 2 * dp > dt && 2 * ds + 2 * dp > st.ht;
}

bool produce_guard_printed(const MRState& st, int deg_pj) {
  const long long ds = st.S.deg(), dt = st.T.deg(), dp = deg_pj;
  return ds + 2 * dp > dt && 2 * ds + 2 * dt > st.ht;
}

std::optional<Poly> try_produce(MRState& st, int deg_pj) {
  if (!produce_guard(st, deg_pj)) return std::nullopt;
  if (st.S.is_zero()) throw std::logic_error("produce guard passed with S = 0");
  Poly p = divmod(st.Q, st.S).q;
  Poly new_s = st.Q + p * st.S;
  Poly new_t = st.R + p * st.T;
  st.Q = std::move(st.S);
  st.R = std::move(st.T);
  st.S = std::move(new_s);
  st.T = std::move(new_t);
  ++st.i;
  return p;
}

std::string canonical_state_key(const MRState& st) {
  std::array<Poly, 4> t = {st.Q, st.R, st.S, st.T};
  // the tuple stays primitive across steps; gcd work is only needed when no
  // entry is a nonzero constant
  bool has_unit = false;
  for (const auto& p : t)
    if (p.deg() == 0) { has_unit = true; break; }
  if (!has_unit) t = content_normalize(t);
  const FieldSpec s = st.Q.spec();
  std::uint8_t lead = 0;
  for (const Poly* p : {&t[0], &t[2], &t[1], &t[3]})  // (Q, S, R, T) order
    if (!p->is_zero()) { lead = p->lead_bits(); break; }
  if (lead > 1) {
    const std::uint8_t f = inv_bits(s, lead);
    for (auto& p : t) p = p.scaled(f);
  }
  std::string key;
  key.reserve(32);
  for (const auto& p : t) {
    key += p.to_digits();
    key += '|';
  }
  return key;
}

void AutomatonLog::record(const std::string& state_key, const std::string& input,
                          std::vector<std::string> outputs, const std::string& next_state,
                          long long step) {
  auto [it, inserted] = pairs_.try_emplace(pair_key(state_key, input));
  PairOutcome& rec = it->second;
  if (inserted) {
    rec.outputs = std::move(outputs);
    rec.next_state = next_state;
    rec.first_step = step;
    rec.count = 1;
    return;
  }
  ++rec.count;
  if (rec.outputs != outputs || rec.next_state != next_state) {
    rec.consistent = false;
    all_consistent_ = false;
  }
}

std::string to_string(ExpStatus s) {
  switch (s) {
    case ExpStatus::probable_bounded: return "probable_bounded";
    case ExpStatus::unbounded: return "unbounded";
    case ExpStatus::rational: return "rational";
  }
  return "?";
}

int resolve_root(const std::vector<LaurentSeries>& roots, const RootSelector& sel) {
  if (sel.index >= 0) {
    if (sel.index >= int(roots.size()))
      throw std::invalid_argument("root index out of range: the equation has " +
                                  std::to_string(roots.size()) + " Laurent roots here");
    return sel.index;
  }
  if (!sel.lead_digits.empty()) {
    for (size_t k = 0; k < roots.size(); ++k) {
      const auto& raw = roots[k].raw();
      std::string digits;
      for (size_t i = 0; i < raw.size() && digits.size() < sel.lead_digits.size(); ++i)
        digits.push_back(char('0' + raw[i]));
      if (digits.rfind(sel.lead_digits, 0) == 0) return int(k);
    }
    throw std::invalid_argument("no root with coefficient digits starting " + sel.lead_digits);
  }
  if (roots.empty()) throw std::invalid_argument("the equation has no Laurent roots here");
  return 0;
}

namespace {

struct Bootstrap {
  ClassicalExpansion cls;
  int precision = 0;
};

Bootstrap bootstrap_quotients(const Cubic& c, FieldSpec field, int root_index, int want,
                              int precision, int max_precision) {
  for (;;) {
    const auto roots = newton_polygon_roots(c, field, precision);
    if (root_index < 0 || root_index >= int(roots.size()))
      throw std::invalid_argument("root index out of range: the equation has " +
                                  std::to_string(roots.size()) + " Laurent roots here");
    auto cls = classical_cf(roots[root_index], want);
    if (int(cls.pqs.size()) >= want || cls.terminated || precision >= max_precision)
      return {std::move(cls), precision};
    precision *= 2;
  }
}

}  // namespace

ExpansionReport run_expansion(const Cubic& c, FieldSpec field, int root_index,
                              const RunOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("n must be >= 1");
  ExpansionReport rep;

  int want = std::min(opts.bootstrap, opts.max_bootstrap);
  auto boot = bootstrap_quotients(c, field, root_index, want, opts.precision, opts.max_precision);
  rep.precision_used = boot.precision;
  rep.bootstrap_used = int(boot.cls.pqs.size());
  if (boot.cls.terminated) {
    rep.status = ExpStatus::rational;
    rep.pqs = std::move(boot.cls.pqs);
    if ((long long)rep.pqs.size() > opts.n) rep.pqs.resize(opts.n);
    return rep;
  }
  if (boot.cls.pqs.empty())
    throw engine_error("bootstrap produced no certified quotients at precision " +
                       std::to_string(boot.precision));

  std::vector<Poly> pq = std::move(boot.cls.pqs);
  MRState st = flt_from_cubic(c, field);
  rep.ht = st.ht;

  bool have_pending = false;
  std::string pending_state, pending_input;
  std::vector<std::string> pending_outputs;
  bool fired = false;

  while (st.i < opts.n) {
    if (st.j >= (long long)pq.size()) {
      // the engine caught up with the known stream; extend the classical supply
      if (want >= opts.max_bootstrap)
        throw engine_error("persistent stall: consumption reached quotient " +
                           std::to_string(st.j) + " with bootstrap " + std::to_string(want) +
                           " and precision " + std::to_string(boot.precision));
      want = std::min(want * 2, opts.max_bootstrap);
      auto more = bootstrap_quotients(c, field, root_index, want, boot.precision,
                                      opts.max_precision);
      boot.precision = more.precision;
      rep.precision_used = more.precision;
      if (more.cls.terminated) {
        rep.status = ExpStatus::rational;
        rep.pqs = std::move(more.cls.pqs);
        if ((long long)rep.pqs.size() > opts.n) rep.pqs.resize(opts.n);
        return rep;
      }
      const size_t overlap = std::min(more.cls.pqs.size(), pq.size());
      for (size_t k = 0; k < overlap; ++k)
        if (!(more.cls.pqs[k] == pq[k]))
          throw engine_error("bootstrap extension disagrees with the stream at index " +
                             std::to_string(k));
      if (more.cls.pqs.size() <= pq.size())
        throw engine_error("bootstrap could not extend past quotient " +
                           std::to_string(pq.size()) + " (precision " +
                           std::to_string(boot.precision) + ")");
      for (size_t k = pq.size(); k < more.cls.pqs.size(); ++k) pq.push_back(more.cls.pqs[k]);
      rep.bootstrap_used = int(more.cls.pqs.size());
      continue;
    }

    const int deg_pj = pq[st.j].deg();
    const bool can_produce = produce_guard(st, deg_pj);
    if (can_produce != produce_guard_printed(st, deg_pj)) ++rep.guard_disagreements;

    if (can_produce) {
      Poly p = *try_produce(st, deg_pj);
      const long long idx = st.i - 1;  // index of the quotient just produced
      if (idx < (long long)pq.size()) {
        if (!(p == pq[idx]))
          throw engine_error("produced quotient disagrees with the stream at index " +
                             std::to_string(idx) + ": " + p.to_digits() + " vs " +
                             pq[idx].to_digits());
      } else {
        pq.push_back(p);
      }
      ++rep.produced;
      if (opts.sink) opts.sink(idx, p);
      if (opts.log_pairs) {
        if (have_pending)
          pending_outputs.push_back(p.to_digits());
        else
          rep.log.add_preamble(p.to_digits());
      }
      if (opts.check_det && !(st.Q * st.T + st.R * st.S == st.det))
        throw engine_error("determinant drifted after a produce step");
      if (opts.detect && st.lemma1_armed && idx > st.armed_index && p.deg() > st.ht) {
        rep.status = ExpStatus::unbounded;
        rep.witness_index = idx;
        rep.witness_degree = p.deg();
        fired = true;
        break;
      }
      // after the row step the state already refers to i+1, so compare with idx
      if (!st.lemma1_armed && idx >= st.j && st.j > 0) {
        st.lemma1_armed = true;
        st.armed_index = idx;
      }
    } else {
      const Poly& pj = pq[st.j];
      if (opts.log_pairs) {
        const std::string key = canonical_state_key(st);
        if (have_pending)
          rep.log.record(pending_state, pending_input, std::move(pending_outputs), key,
                         st.j);
        else
          rep.log.set_initial(key);
        pending_state = key;
        pending_input = pj.to_digits();
        pending_outputs.clear();
        have_pending = true;
      }
      consume_step(st, pj);
      ++rep.consumed;
      if (opts.check_det && !(st.Q * st.T + st.R * st.S == st.det))
        throw engine_error("determinant drifted after a consume step");
    }
  }

  if (opts.log_pairs && have_pending)
    rep.log.record(pending_state, pending_input, std::move(pending_outputs),
                   canonical_state_key(st), st.j);

  if (!fired) rep.status = ExpStatus::probable_bounded;
  rep.reached_threshold = st.i >= std::min(opts.n, opts.probable_threshold);
  if (opts.keep_pqs) {
    const size_t keep = size_t(std::min<long long>(opts.n, pq.size()));
    pq.resize(keep);
    rep.pqs = std::move(pq);
  }
  return rep;
}

std::vector<std::string> replay_stream(const AutomatonLog& log,
                                       const std::vector<std::string>& seed, long long n) {
  std::vector<std::string> stream = seed;
  const auto& pre = log.preamble();
  for (size_t k = 0; k < pre.size(); ++k) {
    if (k < stream.size()) {
      if (stream[k] != pre[k]) throw engine_error("replay: preamble contradicts seed");
    } else {
      stream.push_back(pre[k]);
    }
  }
  long long produced = pre.size();
  long long j = 0;
  std::string state = log.initial_state();
  long long safety = 0;
  while (produced < n) {
    if (j >= (long long)stream.size())
      throw engine_error("replay: ran out of input quotients (seed too short)");
    const auto it = log.pairs().find(AutomatonLog::pair_key(state, stream[j]));
    if (it == log.pairs().end())
      throw engine_error("replay: no recorded pair for state/input at j=" + std::to_string(j));
    for (const auto& out : it->second.outputs) {
      if (produced < (long long)stream.size()) {
        if (stream[produced] != out)
          throw engine_error("replay: output contradicts stream at index " +
                             std::to_string(produced));
      } else {
        stream.push_back(out);
      }
      ++produced;
    }
    state = it->second.next_state;
    ++j;
    if (++safety > 4 * n + 16)
      throw engine_error("replay: no progress (inputs consumed without outputs)");
  }
  if ((long long)stream.size() > n) stream.resize(n);
  return stream;
}

}  // namespace ccf
