// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ccf/poly.hpp"

namespace ccf {

// --------------------------------------------------------------------------
// Case A (x + y + x y^3 over GF(4), root with leading constant t).
//
// Nine polynomials occur as partial quotients, lettered a..i in order of
// first appearance.  The stream is a, b followed by blocks A_0, A_1, ...
// defined by a recursion over four alternating letter strings, with
// palindromic glue blocks P_n (every A_n with n > 0 is itself a palindrome).
// Blocks are memoized; they grow by roughly 2x per level.
// --------------------------------------------------------------------------

Poly case_a_letter(char letter);  // 'a'..'i' over GF(4)
const std::array<std::pair<char, const char*>, 9>& case_a_letter_table();

class CaseABlocks {
 public:
  // x_n = hbh..h, y_n = efe..e, u_n = fef..f, v_n = bhb..b with the stated
  // closed-form lengths.
  static std::string alternating(char kind, int n);
  static long long alternating_length(char kind, int n);

  const std::string& block(int n);       // A_n
  const std::string& palindrome(int n);  // P_n, defined for n >= -1
  std::string generate_letters(size_t count);

 private:
  std::map<int, std::string> a_, h_, p_;
  const std::string& h_block(int n);
};

std::vector<Poly> case_a_generate(size_t count);
std::vector<Poly> fold_to_gf2(const std::vector<Poly>& pqs);

// --------------------------------------------------------------------------
// Case B (x + x y + (1+x) y^3 over GF(8), root with constant term t).
//
// After four seed quotients the stream is grouped in quadruples from p_4 and
// in 16-tuples from p_16; exactly 63 of each occur, in bijection, and the
// quadruple sequence maps to the 16-tuple sequence.  The table drives a
// self-sustaining generator.
// --------------------------------------------------------------------------

struct CaseBTable {
  std::vector<std::array<std::string, 4>> quads;
  std::vector<std::array<std::string, 16>> tuples;
  std::map<std::string, size_t> index;  // joined quadruple -> row

  static std::string quad_key(const std::string* q) {
    return *q + " " + q[1] + " " + q[2] + " " + q[3];
  }
  void add_row(const std::array<std::string, 4>& q, const std::array<std::string, 16>& t);
  bool bijective() const;
  bool operator==(const CaseBTable& other) const {
    return quads == other.quads && tuples == other.tuples;
  }
};

// The sixteen seed quotients p_0..p_15 in digit notation.
const std::vector<std::string>& case_b_seeds();

CaseBTable case_b_table_from_rows(const std::vector<std::vector<std::string>>& rows);

// Groups an expanded stream into the quadruple -> 16-tuple map.  Throws if
// the same quadruple is ever followed by two different 16-tuples (that would
// falsify the conjectured recursion).
CaseBTable case_b_derive_table(const std::vector<Poly>& pqs);

// Expands the seeds through the table.  Throws when a quadruple is absent
// from the table.
std::vector<std::string> case_b_generate(size_t n, const CaseBTable& table);

// --------------------------------------------------------------------------
// Case C (x + (1+x) y + x y^3 over GF(8)): no conjectured generator, only
// statistics over an engine stream.
// --------------------------------------------------------------------------

struct MaxPalindrome {
  size_t start = 0;
  size_t length = 0;
};

// All maximal palindromic substrings of length >= min_len (Manacher).
std::vector<MaxPalindrome> palindrome_scan(const std::vector<Poly>& seq, size_t min_len);

struct CaseCStats {
  size_t alphabet_size = 0;  // distinct quotients, excluding p_0
  bool alphabet_shape_ok = false;  // all of degree 1, or degree 2 with no x term
  size_t max_palindrome = 0;
  size_t palindromes_at_least_100 = 0;
};

CaseCStats case_c_stats(const std::vector<Poly>& pqs);

}  // namespace ccf
