// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccf/engine.hpp"

namespace ccf {

// One of the twelve substitutions generated by x -> x+1, y -> y+1, y -> 1/y.
// The y-part is a Moebius map over GF(2) (an element of S3); the x-part
// commutes with it.  `word` is a shortest generator word, for display.
struct Substitution {
  std::string word;      // over the alphabet {x, s, r}: x->x+1, y->y+1, y->1/y
  bool xshift = false;
  std::uint8_t ya = 1, yb = 0, yc = 0, yd = 1;  // y -> (ya y + yb) / (yc y + yd)

  friend bool operator==(const Substitution& l, const Substitution& r) {
    return l.xshift == r.xshift && l.ya == r.ya && l.yb == r.yb && l.yc == r.yc && l.yd == r.yd;
  }
};

// The full group, closed under composition (12 elements, identity first).
const std::vector<Substitution>& substitution_group();
Substitution compose(const Substitution& f, const Substitution& g);  // f after g

using CubicTuple = std::array<Poly, 4>;

std::string encode_tuple(const CubicTuple& t);

CubicTuple apply_substitution(const CubicTuple& c, const Substitution& s);

// All (a0, a1, a2, a3) with GF(2)[x] coefficients of degree <= max_deg,
// including the quadruples with a3 = 0 (the survey counts every equation and
// lets the irreducibility filter reject the non-cubic ones).
std::vector<CubicTuple> enumerate_cubics(int max_deg = 1);

struct RootResult {
  std::string field;
  int root_index = 0;        // index within that field's root list
  std::string lead_digits;   // first few coefficient digits of the root
  ExpStatus status = ExpStatus::probable_bounded;
  long long witness_index = -1;
  int witness_degree = -1;
  int ht = 0;
  size_t pairs = 0;
  long long produced = 0;
};

struct SurveyRecord {
  CubicTuple cubic;
  bool is_cubic = false;     // a3 != 0
  bool irreducible = false;  // over the closure of GF(2)
  std::vector<RootResult> roots;
  int orbit_id = -1;
  bool probable_bounded = false;  // at least one probable-bounded root
};

struct SurveyParams {
  long long threshold = 10000;  // quotients per root before declaring probable-bounded
  int precision = 512;
  int jobs = 1;
};

SurveyRecord classify_equation(const CubicTuple& c, const SurveyParams& params);

struct Orbit {
  CubicTuple representative;  // lexicographically least member
  std::vector<size_t> members;
};

// Partition under the order-12 substitution group; orbits are ordered by
// their representative's encoding, members by input position.
std::vector<Orbit> orbit_partition(const std::vector<CubicTuple>& cs);

struct SurveyResult {
  std::vector<SurveyRecord> records;  // one per enumerated equation, input order
  int total = 0;
  int irreducible = 0;
  int winners = 0;         // probable-bounded count
  std::vector<Orbit> orbits;  // orbits of the winners
  // distribution of probable-bounded root counts among equations with three
  // GF(2) roots (index = how many of the three are probable-bounded)
  std::array<int, 4> gf2_triple_profile{};
};

SurveyResult run_survey(int max_deg, const SurveyParams& params);

// Expands u, 1/u, 1+u and the x -> x+1 transplant of u through their own
// defining cubics and reports whether all four detector statuses agree.
bool boundedness_transport_check(const CubicTuple& c, FieldSpec field, int root_index,
                                 long long n);

std::string survey_csv(const SurveyResult& r);

}  // namespace ccf
