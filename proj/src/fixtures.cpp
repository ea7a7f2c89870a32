// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef CUBICCF_DEFAULT_FIXTURE_DIR
#define CUBICCF_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace ccf {

namespace {
std::string g_override;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("CUBICCF_FIXTURES"); env && *env) return env;
  if (!g_override.empty()) return g_override;
  return CUBICCF_DEFAULT_FIXTURE_DIR;
}

void set_fixture_dir(const std::string& dir) { g_override = dir; }

std::vector<std::vector<std::string>> load_token_table(const std::string& filename,
                                                       size_t expect_rows, size_t expect_cols) {
  const std::string path = fixture_dir() + "/" + filename;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (expect_rows && rows.size() != expect_rows)
    throw std::runtime_error(path + ": expected " + std::to_string(expect_rows) + " rows, got " +
                             std::to_string(rows.size()));
  if (expect_cols)
    for (const auto& r : rows)
      if (r.size() != expect_cols)
        throw std::runtime_error(path + ": expected " + std::to_string(expect_cols) +
                                 " tokens per row");
  return rows;
}

std::uint64_t token_table_checksum(const std::vector<std::vector<std::string>>& rows) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](char c) {
    h ^= std::uint8_t(c);
    h *= 1099511628211ull;
  };
  for (const auto& row : rows)
    for (const auto& tok : row) {
      for (char c : tok) mix(c);
      mix('\0');
    }
  return h;
}

}  // namespace ccf
