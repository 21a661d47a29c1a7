// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/connection.hpp"
#include "ccm/format.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <map>
#include <utility>

using namespace ccm;
using Vec = FrameVector<Rational>;

namespace {

// ∇_{e_i} e_j on the Heisenberg frame, from the reference formulas; pairs not
// listed are zero.
const std::map<std::pair<int, int>, const char*> kConnection = {
    {{0, 2}, "-1:4"}, {{0, 3}, "-1:5"}, {{0, 4}, "1:2"},  {{0, 5}, "1:3"},
    {{1, 2}, "-1:5"}, {{1, 3}, "1:4"},  {{1, 4}, "-1:3"}, {{1, 5}, "1:2"},
    {{2, 0}, "1:4"},  {{2, 1}, "1:5"},  {{2, 4}, "-1:0"}, {{2, 5}, "-1:1"},
    {{3, 0}, "1:5"},  {{3, 1}, "-1:4"}, {{3, 4}, "1:1"},  {{3, 5}, "-1:0"},
    {{4, 0}, "1:2"},  {{4, 1}, "-1:3"}, {{4, 2}, "-1:0"}, {{4, 3}, "1:1"},
    {{5, 0}, "1:3"},  {{5, 1}, "1:2"},  {{5, 2}, "-1:1"}, {{5, 3}, "-1:0"},
};

Vec e(int i) { return basis_vector<Rational>(6, i); }

}  // namespace

TEST_CASE("heisenberg connection table") {
  const Model m = build_heisenberg<Rational>();
  const auto conn = levi_civita(m);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const auto it = kConnection.find({i, j});
      const Vec expected = it == kConnection.end() ? Vec(Vec::Zero(6)) : parse_sparse(it->second, 6);
      INFO(i << ' ' << j);
      CHECK(cov_deriv_vector(conn, e(i), e(j)) == expected);
      CHECK(oracle::nabla(m, e(i), e(j)) == expected);
    }
}

TEST_CASE("connection is metric and torsion free on random Lie models") {
  gen::Source src(31);
  for (int trial = 0; trial < 6; ++trial) {
    const Model m = trial == 0 ? build_heisenberg<Rational>() : gen::perturbed_lie_model(src);
    const auto conn = levi_civita(m);
    const int d = m.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          CHECK(conn.gamma(i, j, k) == -conn.gamma(i, k, j));
          CHECK(conn.gamma(i, j, k) - conn.gamma(j, i, k) == m.constants(i, j, k));
        }
    for (int s = 0; s < 20; ++s) {
      const Vec x = src.vector(d), y = src.vector(d);
      CHECK(cov_deriv_vector(conn, x, y) == oracle::nabla(m, x, y));
    }
  }
}

TEST_CASE("sigma and d sigma vanish on heisenberg") {
  const Model m = build_heisenberg<Rational>();
  const auto conn = levi_civita(m);
  const OneForm<Rational> sigma = sigma_form(m, conn);
  CHECK(is_zero(sigma));
  CHECK(is_zero(exterior_d_oneform(m, sigma)));
}

TEST_CASE("du and dv on heisenberg") {
  const Model m = build_heisenberg<Rational>();
  const TwoForm<Rational> du = exterior_d_oneform(m, m.u());
  const TwoForm<Rational> dv = exterior_d_oneform(m, m.v());
  CHECK(is_antisymmetric(du));
  // du(e0,e2) = -1/2 u([e0,e2]) = 1
  CHECK(du(0, 2) == 1);
  CHECK(du(1, 3) == -1);
  CHECK(dv(0, 3) == 1);
  CHECK(dv(1, 2) == 1);
  CHECK(du(4, 5) == 0);
}

TEST_CASE("covariant derivative of the metric dual forms") {
  const Model m = build_heisenberg<Rational>();
  const auto conn = levi_civita(m);
  gen::Source src(32);
  for (int s = 0; s < 50; ++s) {
    const Vec x = src.vector(6), y = src.vector(6);
    // (∇_X u)(Y) = g(∇_X U, Y)
    CHECK(apply_oneform(cov_deriv_oneform(conn, x, m.u()), y) ==
          inner_product(cov_deriv_vector(conn, x, m.U()), y));
  }
}

TEST_CASE("wedge has no one-half") {
  OneForm<Rational> a = OneForm<Rational>::Zero(6), b = OneForm<Rational>::Zero(6);
  a(4) = 1;
  b(5) = 1;
  const TwoForm<Rational> w = wedge(a, b);
  CHECK(w(4, 5) == 1);
  CHECK(w(5, 4) == -1);
}
