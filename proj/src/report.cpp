// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/report.hpp"

#include "ccm/format.hpp"

namespace ccm {

bool values_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* qa = std::get_if<Rational>(&a)) return *qa == std::get<Rational>(b);
  const auto& va = std::get<FrameVector<Rational>>(a);
  const auto& vb = std::get<FrameVector<Rational>>(b);
  return va.size() == vb.size() && va == vb;
}

std::string format_value(const Value& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return format_rational(*q);
  return format_sparse(std::get<FrameVector<Rational>>(v));
}

std::string format_witness(const Witness& w) {
  std::string args;
  for (const auto& a : w.args) {
    if (!args.empty()) args += ',';
    args += format_argument(a);
  }
  std::string out = "args=(" + args + ")";
  if (!w.part.empty()) out += " part=" + w.part;
  out += " lhs=" + format_value(w.lhs) + " rhs=" + format_value(w.rhs);
  return out;
}

std::vector<FrameVector<Rational>> frame_args(int dim, std::initializer_list<int> indices) {
  std::vector<FrameVector<Rational>> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(basis_vector<Rational>(dim, i));
  return out;
}

}  // namespace ccm
