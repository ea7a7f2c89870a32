// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccf/laurent.hpp"

namespace ccf {

struct engine_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State of the linear-time expansion: the 2x2 polynomial matrix relating the
// complete quotient u_i to u_j^2,
//
//     u_i = (Q u_j^2 + R) / (S u_j^2 + T),
//
// together with the production index i, the consumption index j, and the
// height ht = deg(QT - RS).  Column and row steps preserve the determinant
// exactly in characteristic 2, so ht is invariant across a run.
struct MRState {
  Poly Q, R, S, T;
  long long i = 0;
  long long j = 0;
  Poly det;
  int ht = 0;
  // Set once a quotient is produced with i >= j > 0; from then on the
  // current complete quotient is known to satisfy a self-relation with
  // deg(S u^2) > deg(T), which arms the unboundedness test.
  bool lemma1_armed = false;
  long long armed_index = -1;
};

// Builds the initial state from a cubic: a0 + a1 u + a2 u^2 + a3 u^3 = 0
// rearranges to u = (a2 u^2 + a0) / (a3 u^2 + a1).  The 4-tuple is
// content-normalized.  Throws std::domain_error when QT - RS = 0 (u would be
// rational, not cubic).
MRState flt_from_cubic(const Cubic& c, FieldSpec root_field);

// Column step (consumes the known quotient p_j):
// (Q, R, S, T) <- (Q p_j^2 + R, Q, S p_j^2 + T, S), j <- j+1.
void consume_step(MRState& st, const Poly& pj);

// Soundness guard for producing from the current state, given the degree of
// the pending quotient p_j:
//   deg(S) + 2 deg(p_j) > deg(T)   and   2 deg(S) + 2 deg(p_j) > ht.
bool produce_guard(const MRState& st, int deg_pj);
// The weaker variant with 2 deg(S) + 2 deg(T) > ht as its second clause;
// kept only so disagreements with the guard above can be observed.
bool produce_guard_printed(const MRState& st, int deg_pj);

// If the guard holds, emits p_i = quotient(Q, S) and applies the row step
// (Q, R, S, T) <- (S, T, Q + p_i S, R + p_i T), i <- i+1.
std::optional<Poly> try_produce(MRState& st, int deg_pj);

// Content- and lead-normalized serialization of the matrix, used as the
// automaton state identity.
std::string canonical_state_key(const MRState& st);

// One record per distinct (stall state, consumed quotient) pair.  The whole
// log doubles as a look-up table: outputs and the successor state of every
// pair are remembered, so a finished run can be replayed without algebra.
struct PairOutcome {
  std::vector<std::string> outputs;  // quotients produced after this input
  std::string next_state;
  long long count = 0;
  long long first_step = 0;
  bool consistent = true;  // same outputs/successor at every occurrence
};

class AutomatonLog {
 public:
  void set_initial(const std::string& state_key) {
    if (initial_.empty()) initial_ = state_key;
  }
  void add_preamble(const std::string& quotient) { preamble_.push_back(quotient); }
  void record(const std::string& state_key, const std::string& input,
              std::vector<std::string> outputs, const std::string& next_state, long long step);

  size_t pair_count() const { return pairs_.size(); }
  bool all_consistent() const { return all_consistent_; }
  const std::unordered_map<std::string, PairOutcome>& pairs() const { return pairs_; }
  const std::string& initial_state() const { return initial_; }
  const std::vector<std::string>& preamble() const { return preamble_; }

  static std::string pair_key(const std::string& state_key, const std::string& input) {
    return state_key + "#" + input;
  }

 private:
  std::unordered_map<std::string, PairOutcome> pairs_;
  std::string initial_;
  std::vector<std::string> preamble_;
  bool all_consistent_ = true;
};

enum class ExpStatus { probable_bounded, unbounded, rational };

std::string to_string(ExpStatus s);

struct ExpansionReport {
  std::vector<Poly> pqs;  // filled when RunOptions::keep_pqs
  ExpStatus status = ExpStatus::probable_bounded;
  long long witness_index = -1;
  int witness_degree = -1;
  AutomatonLog log;
  long long produced = 0;
  long long consumed = 0;
  int ht = 0;
  long long guard_disagreements = 0;
  int bootstrap_used = 0;
  int precision_used = 0;
  bool reached_threshold = false;
};

struct RunOptions {
  long long n = 1000;
  bool detect = true;
  long long probable_threshold = 1000000;
  int bootstrap = 8;
  int max_bootstrap = 64;
  int precision = 512;
  int max_precision = 8192;
  bool keep_pqs = true;
  bool log_pairs = true;
  bool check_det = false;  // re-verify QT - RS after every step
  std::function<void(long long, const Poly&)> sink;
};

// Expands the root of `c` (index into the deterministic order produced by
// newton_polygon_roots over `field`) to opts.n partial quotients, or stops
// early when the unboundedness witness fires or the series is rational.
// Quotients are bootstrapped classically and every re-derived quotient is
// cross-checked against the stream; a mismatch is a hard error.
ExpansionReport run_expansion(const Cubic& c, FieldSpec field, int root_index,
                              const RunOptions& opts);

// Picks a root by index or by the digit prefix of its coefficient sequence
// (leading coefficient first).
struct RootSelector {
  int index = -1;
  std::string lead_digits;
};
int resolve_root(const std::vector<LaurentSeries>& roots, const RootSelector& sel);

// Replays a finished run through the recorded look-up table: starting from
// the logged initial state and `seed` quotients, regenerates the stream up to
// n terms without polynomial algebra.  Throws engine_error when the table
// lacks a pair or the regenerated stream contradicts an overlapping seed.
std::vector<std::string> replay_stream(const AutomatonLog& log,
                                       const std::vector<std::string>& seed, long long n);

}  // namespace ccf
