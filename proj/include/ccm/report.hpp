// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Pass/fail verdicts with exact counterexample witnesses.

#pragma once

#include "ccm/core.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ccm {

/// Either side of a checked equation: a number or a vector.
using Value = std::variant<Rational, FrameVector<Rational>>;

bool values_equal(const Value& a, const Value& b);
std::string format_value(const Value& v);

/// One equation to check. `part` names the sub-equation of a multi-part
/// identity, empty for single equations.
struct Comparison {
  std::string part;
  Value lhs;
  Value rhs;
};

/// Where a check failed: the slot arguments, which sub-equation, and both sides.
struct Witness {
  std::vector<FrameVector<Rational>> args;
  std::string part;
  Value lhs;
  Value rhs;
};

std::string format_witness(const Witness& w);

struct CheckResult {
  std::string id;
  bool passed = true;
  std::optional<Witness> witness;
};

inline const char* status_label(bool passed) { return passed ? "PASS" : "FAIL"; }

/// Frame vectors e_{i_0}, e_{i_1}, ... for witnesses built from indices.
std::vector<FrameVector<Rational>> frame_args(int dim, std::initializer_list<int> indices);

}  // namespace ccm
