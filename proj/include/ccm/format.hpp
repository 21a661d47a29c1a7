// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Text forms shared by the model file, the expected-values file and the CLI:
// rationals as `p/q` (integers without `/q`), vectors as sparse `coeff:index`
// lists or `0`.

#pragma once

#include "ccm/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

/// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string format_rational(const Rational& q);

/// Accepts `[+-]digits` or `[+-]digits/digits` with a nonzero denominator.
std::optional<Rational> parse_rational(std::string_view text);

std::string format_sparse(const FrameVector<Rational>& v);

/// Inverse of format_sparse; `dim` fixes the result length.
FrameVector<Rational> parse_sparse(std::string_view text, int dim);

/// `e3` for a frame vector, `[1/2:0,1:3]` otherwise.
std::string format_argument(const FrameVector<Rational>& v);

std::vector<std::string> split_whitespace(std::string_view line);

}  // namespace ccm
