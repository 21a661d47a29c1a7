// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Hand-rolled generators for the property tests.

#pragma once

#include "ccm/model.hpp"

#include <random>

namespace gen {

using ccm::Model;
using ccm::Rational;
using Vec = ccm::FrameVector<Rational>;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // p/q with |p| <= span, 1 <= q <= den
  Rational rational(int span = 9, int den = 7) {
    return Rational(integer(-span, span)) / Rational(integer(1, den));
  }

  Rational nonzero(int span = 9, int den = 7) {
    for (;;) {
      Rational q = rational(span, den);
      if (q != 0) return q;
    }
  }

  Vec vector(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = integer(0, 2) == 0 ? Rational(0) : rational(3, 4);
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Heisenberg structure with `edits` random bracket changes, each kept only if
// the result is still a Lie algebra. Returns after `edits` accepted changes.
inline Model perturbed_lie_model(Source& src, int edits = 3) {
  Model m = ccm::build_heisenberg<Rational>();
  const int d = m.dim();
  int accepted = 0;
  while (accepted < edits) {
    const int i = src.integer(0, d - 2);
    const int j = src.integer(i + 1, d - 1);
    const int k = src.integer(0, d - 1);
    const Rational old = m.constants(i, j, k);
    const Rational value = src.integer(0, 3) == 0 ? Rational(0) : src.nonzero(3, 3);
    if (value == old) continue;
    ccm::set_bracket<Rational>(m, i, j, k, value);
    if (ccm::is_lie_algebra(m))
      ++accepted;
    else
      ccm::set_bracket<Rational>(m, i, j, k, old);
  }
  m.name = "perturbed";
  return m;
}

}  // namespace gen
