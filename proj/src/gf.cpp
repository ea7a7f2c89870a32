// Copyright 2026 The cubiccf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccf/gf.hpp"

namespace ccf {

FieldSpec FieldSpec::from_name(const std::string& name) {
  if (name == "gf2") return gf2();
  if (name == "gf4") return gf4();
  if (name == "gf8") return gf8();
  throw std::invalid_argument("unknown field: " + name);
}

std::string FieldSpec::name() const {
  switch (k) {
    case 1: return "gf2";
    case 2: return "gf4";
    case 3: return "gf8";
    default: return "gf?";
  }
}

}  // namespace ccf
