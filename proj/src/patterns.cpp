// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/patterns.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccf {

const std::array<std::pair<char, const char*>, 9>& case_a_letter_table() {
  static const std::array<std::pair<char, const char*>, 9> table = {{
      {'a', "2"},    // t
      {'b', "02"},   // t x
      {'c', "21"},   // t + x
      {'d', "301"},  // (1+t) + x^2
      {'e', "01"},   // x
      {'f', "001"},  // x^2
      {'g', "32"},   // (1+t) + t x
      {'h', "003"},  // (1+t) x^2
      {'i', "203"},  // t + (1+t) x^2
  }};
  return table;
}

Poly case_a_letter(char letter) {
  for (const auto& [ch, digits] : case_a_letter_table())
    if (ch == letter) return Poly::from_digits(digits, FieldSpec::gf4());
  throw std::invalid_argument(std::string("unknown case A letter: ") + letter);
}

long long CaseABlocks::alternating_length(char kind, int n) {
  long long p = 1;
  for (int i = 0; i < n; ++i) p *= 4;
  switch (kind) {
    case 'x':
    case 'u': return (8 * p - 5) / 3;
    case 'y':
    case 'v': return (16 * p - 7) / 3;
    default: throw std::invalid_argument("alternating kind must be one of x, y, u, v");
  }
}

std::string CaseABlocks::alternating(char kind, int n) {
  char first, second;
  switch (kind) {
    case 'x': first = 'h'; second = 'b'; break;
    case 'y': first = 'e'; second = 'f'; break;
    case 'u': first = 'f'; second = 'e'; break;
    case 'v': first = 'b'; second = 'h'; break;
    default: throw std::invalid_argument("alternating kind must be one of x, y, u, v");
  }
  const long long len = alternating_length(kind, n);
  std::string s(size_t(len), first);
  for (size_t i = 1; i < s.size(); i += 2) s[i] = second;
  return s;
}

const std::string& CaseABlocks::h_block(int n) {
  if (auto it = h_.find(n); it != h_.end()) return it->second;
  if (n < 6 || n % 2) throw std::invalid_argument("h_n defined for even n >= 6");
  std::string s;
  if (n == 6) {
    s = "gibhge";
  } else if (n % 4 == 0) {
    s = h_block(n - 2) + "bc" + alternating('u', (n - 8) / 4) + "cb" + palindrome((n - 10) / 2);
  } else {
    s = h_block(n - 2) + "gi" + alternating('v', (n - 10) / 4) + "ig" + palindrome((n - 10) / 2);
  }
  return h_.emplace(n, std::move(s)).first->second;
}

const std::string& CaseABlocks::block(int n) {
  if (auto it = a_.find(n); it != a_.end()) return it->second;
  if (n < 0) throw std::invalid_argument("A_n defined for n >= 0");
  std::string s;
  if (n == 0) s = "cdefcb";
  else if (n == 2) s = "ghg";
  else if (n == 4) s = "gibhbig";
  else if (n % 4 == 1) s = "eg" + alternating('x', (n - 1) / 4) + "ge";
  else if (n % 4 == 3) s = "cd" + alternating('y', (n - 3) / 4) + "dc";
  else {
    const std::string& h = h_block(n);
    std::string rh(h.rbegin(), h.rend());
    if (n % 4 == 0)
      s = h + "gi" + alternating('v', (n - 8) / 4) + "ig" + rh;
    else
      s = h + "bc" + alternating('u', (n - 6) / 4) + "cb" + rh;
  }
  return a_.emplace(n, std::move(s)).first->second;
}

const std::string& CaseABlocks::palindrome(int n) {
  if (auto it = p_.find(n); it != p_.end()) return it->second;
  std::string s;
  if (n == -1) s = "cfc";
  else if (n == 0) s = block(3);
  else if (n > 0) {
    std::string asc;
    for (int i = 0; i <= 2 * n - 2; ++i) asc += block(i);
    s = asc + block(2 * n - 1) + std::string(asc.rbegin(), asc.rend());
  } else {
    throw std::invalid_argument("P_n defined for n >= -1");
  }
  return p_.emplace(n, std::move(s)).first->second;
}

std::string CaseABlocks::generate_letters(size_t count) {
  std::string s = "ab";
  for (int n = 0; s.size() < count; ++n) s += block(n);
  s.resize(count);
  return s;
}

std::vector<Poly> case_a_generate(size_t count) {
  CaseABlocks blocks;
  const std::string letters = blocks.generate_letters(count);
  std::array<Poly, 9> by_letter;
  for (const auto& [ch, digits] : case_a_letter_table())
    by_letter[ch - 'a'] = Poly::from_digits(digits, FieldSpec::gf4());
  std::vector<Poly> out;
  out.reserve(count);
  for (char ch : letters) out.push_back(by_letter[ch - 'a']);
  return out;
}

std::vector<Poly> fold_to_gf2(const std::vector<Poly>& pqs) {
  std::vector<Poly> out;
  out.reserve(pqs.size());
  for (const auto& p : pqs) out.push_back(p.fold_to_gf2());
  return out;
}

// --------------------------------------------------------------------------
// Case B
// --------------------------------------------------------------------------

const std::vector<std::string>& case_b_seeds() {
  static const std::vector<std::string> seeds = {"2",  "13", "13", "01", "33", "11",
                                                 "73", "04", "53", "23", "41", "07",
                                                 "11", "77", "21", "05"};
  return seeds;
}

void CaseBTable::add_row(const std::array<std::string, 4>& q,
                         const std::array<std::string, 16>& t) {
  index.emplace(quad_key(q.data()), quads.size());
  quads.push_back(q);
  tuples.push_back(t);
}

bool CaseBTable::bijective() const {
  if (index.size() != quads.size()) return false;
  std::set<std::array<std::string, 16>> distinct(tuples.begin(), tuples.end());
  return distinct.size() == tuples.size();
}

CaseBTable case_b_table_from_rows(const std::vector<std::vector<std::string>>& rows) {
  CaseBTable t;
  for (const auto& row : rows) {
    if (row.size() != 20) throw std::invalid_argument("case B table rows carry 20 tokens");
    std::array<std::string, 4> q;
    std::array<std::string, 16> u;
    std::copy_n(row.begin(), 4, q.begin());
    std::copy_n(row.begin() + 4, 16, u.begin());
    t.add_row(q, u);
  }
  return t;
}

CaseBTable case_b_derive_table(const std::vector<Poly>& pqs) {
  std::vector<std::string> tok;
  tok.reserve(pqs.size());
  for (const auto& p : pqs) tok.push_back(p.to_digits());

  std::map<std::string, std::pair<std::array<std::string, 4>, std::array<std::string, 16>>> seen;
  for (size_t k = 0;; ++k) {
    const size_t qa = 4 + 4 * k, ta = 16 + 16 * k;
    if (qa + 4 > tok.size() || ta + 16 > tok.size()) break;
    std::array<std::string, 4> q;
    std::array<std::string, 16> u;
    std::copy_n(tok.begin() + qa, 4, q.begin());
    std::copy_n(tok.begin() + ta, 16, u.begin());
    const std::string key = CaseBTable::quad_key(q.data());
    auto [it, inserted] = seen.emplace(key, std::make_pair(q, u));
    if (!inserted && it->second.second != u)
      throw std::runtime_error("case B map is inconsistent: quadruple " + key +
                               " maps to two different 16-tuples");
  }
  CaseBTable t;
  for (const auto& [key, row] : seen) t.add_row(row.first, row.second);
  return t;
}

std::vector<std::string> case_b_generate(size_t n, const CaseBTable& table) {
  std::vector<std::string> out = case_b_seeds();
  for (size_t k = 0; out.size() < n; ++k) {
    const size_t qa = 4 + 4 * k;
    if (qa + 4 > out.size())
      throw std::runtime_error("case B generator starved: quadruple " + std::to_string(k) +
                               " is not available yet");
    const std::string key =
        out[qa] + " " + out[qa + 1] + " " + out[qa + 2] + " " + out[qa + 3];
    const auto it = table.index.find(key);
    if (it == table.index.end())
      throw std::runtime_error("case B quadruple not in table: " + key);
    for (const auto& t : table.tuples[it->second]) out.push_back(t);
  }
  out.resize(n);
  return out;
}

// --------------------------------------------------------------------------
// Case C
// --------------------------------------------------------------------------

std::vector<MaxPalindrome> palindrome_scan(const std::vector<Poly>& seq, size_t min_len) {
  // Manacher over the separator-interleaved sequence.
  const size_t n = seq.size();
  if (n == 0) return {};
  const size_t m = 2 * n + 1;
  auto eq = [&](size_t i, size_t j) {
    if ((i & 1) != (j & 1)) return false;
    if (!(i & 1)) return true;  // separators
    return seq[i / 2] == seq[j / 2];
  };
  std::vector<size_t> rad(m, 0);
  size_t center = 0, right = 0;
  for (size_t i = 0; i < m; ++i) {
    size_t r = 0;
    if (i < right) r = std::min(rad[2 * center - i], right - i);
    while (i >= r + 1 && i + r + 1 < m && eq(i - r - 1, i + r + 1)) ++r;
    rad[i] = r;
    if (i + r > right) {
      center = i;
      right = i + r;
    }
  }
  std::vector<MaxPalindrome> out;
  for (size_t i = 0; i < m; ++i) {
    const size_t len = rad[i];  // palindrome length in sequence elements
    if (len >= min_len) out.push_back({(i - len) / 2, len});
  }
  return out;
}

CaseCStats case_c_stats(const std::vector<Poly>& pqs) {
  CaseCStats st;
  std::set<std::string> alphabet;
  bool shape_ok = true;
  for (size_t i = 1; i < pqs.size(); ++i) {
    alphabet.insert(pqs[i].to_digits());
    const int d = pqs[i].deg();
    const bool deg1 = d == 1;
    const bool square_of_deg1 = d == 2 && pqs[i].coeff_bits(1) == 0;
    if (!deg1 && !square_of_deg1) shape_ok = false;
  }
  st.alphabet_size = alphabet.size();
  st.alphabet_shape_ok = shape_ok;
  for (const auto& p : palindrome_scan(pqs, 2)) {
    st.max_palindrome = std::max(st.max_palindrome, p.length);
    if (p.length >= 100) ++st.palindromes_at_least_100;
  }
  return st;
}

}  // namespace ccf
