// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/format.hpp"

#include <cctype>

namespace ccm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;
  const Integer num{std::string(num_text)};
  const Integer den{std::string(den_text)};
  if (den == 0) return std::nullopt;
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::string format_sparse(const FrameVector<Rational>& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (!out.empty()) out += ',';
    out += format_rational(v(i)) + ':' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FrameVector<Rational> parse_sparse(std::string_view text, int dim) {
  FrameVector<Rational> v = FrameVector<Rational>::Zero(dim);
  if (text == "0") return v;
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(0, "expected coeff:index in '" + std::string(item) + "'");
    const auto coeff = parse_rational(item.substr(0, colon));
    const std::string_view idx_text = item.substr(colon + 1);
    if (!coeff) throw ParseError(0, "bad coefficient in '" + std::string(item) + "'");
    if (!all_digits(idx_text)) throw ParseError(0, "bad index in '" + std::string(item) + "'");
    const int idx = std::stoi(std::string(idx_text));
    if (idx >= dim) throw ParseError(0, "index " + std::to_string(idx) + " out of range");
    if (seen[static_cast<std::size_t>(idx)])
      throw ParseError(0, "index " + std::to_string(idx) + " repeated");
    seen[static_cast<std::size_t>(idx)] = true;
    v(idx) = *coeff;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError(0, "trailing comma");
  }
  return v;
}

std::string format_argument(const FrameVector<Rational>& v) {
  int nonzero = 0;
  Eigen::Index last = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      ++nonzero;
      last = i;
    }
  if (nonzero == 1 && v(last) == 1) return "e" + std::to_string(last);
  return "[" + format_sparse(v) + "]";
}

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace ccm
