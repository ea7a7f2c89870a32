// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccf {

// Fixture directory resolution: the CUBICCF_FIXTURES environment variable
// wins, then an explicit override, then the build-time default.
std::string fixture_dir();
void set_fixture_dir(const std::string& dir);

// Loads a whitespace-separated token table, one row per line.
std::vector<std::vector<std::string>> load_token_table(const std::string& filename,
                                                       size_t expect_rows, size_t expect_cols);

// FNV-1a over all tokens (row-major, NUL-separated); pins fixture content.
std::uint64_t token_table_checksum(const std::vector<std::vector<std::string>>& rows);

// case B quadruples and 16-tuples, 63 rows of 20 tokens
inline constexpr const char* kTable1File = "table1.txt";
// case C first 1000 partial quotients, 50 rows of 20 tokens
inline constexpr const char* kTable2File = "table2.txt";
inline constexpr const char* kCaseALettersFile = "case_a_letters.txt";
inline constexpr const char* kWinnersFile = "winners.txt";

}  // namespace ccf
