// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/curvature.hpp"
#include "ccm/format.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <array>
#include <map>

using namespace ccm;
using Vec = FrameVector<Rational>;

namespace {

// R(e_i, e_j) e_k for i < j on the Heisenberg frame; missing entries are zero.
const std::map<std::array<int, 3>, const char*> kCurvature = {
    {{0, 1, 2}, "-2:3"},
    {{0, 1, 3}, "2:2"},
    {{0, 1, 4}, "2:5"},
    {{0, 1, 5}, "-2:4"},
    {{0, 2, 0}, "3:2"},
    {{0, 2, 1}, "-1:3"},
    {{0, 2, 2}, "-3:0"},
    {{0, 2, 3}, "1:1"},
    {{0, 3, 0}, "3:3"},
    {{0, 3, 1}, "1:2"},
    {{0, 3, 2}, "-1:1"},
    {{0, 3, 3}, "-3:0"},
    {{0, 4, 0}, "-1:4"},
    {{0, 4, 1}, "1:5"},
    {{0, 4, 4}, "1:0"},
    {{0, 4, 5}, "-1:1"},
    {{0, 5, 0}, "-1:5"},
    {{0, 5, 1}, "-1:4"},
    {{0, 5, 4}, "1:1"},
    {{0, 5, 5}, "1:0"},
    {{1, 2, 0}, "1:3"},
    {{1, 2, 1}, "3:2"},
    {{1, 2, 2}, "-3:1"},
    {{1, 2, 3}, "-1:0"},
    {{1, 3, 0}, "-1:2"},
    {{1, 3, 1}, "3:3"},
    {{1, 3, 2}, "1:0"},
    {{1, 3, 3}, "-3:1"},
    {{1, 4, 0}, "-1:5"},
    {{1, 4, 1}, "-1:4"},
    {{1, 4, 4}, "1:1"},
    {{1, 4, 5}, "1:0"},
    {{1, 5, 0}, "1:4"},
    {{1, 5, 1}, "-1:5"},
    {{1, 5, 4}, "-1:0"},
    {{1, 5, 5}, "1:1"},
    {{2, 3, 0}, "-2:1"},
    {{2, 3, 1}, "2:0"},
    {{2, 3, 4}, "2:5"},
    {{2, 3, 5}, "-2:4"},
    {{2, 4, 2}, "-1:4"},
    {{2, 4, 3}, "1:5"},
    {{2, 4, 4}, "1:2"},
    {{2, 4, 5}, "-1:3"},
    {{2, 5, 2}, "-1:5"},
    {{2, 5, 3}, "-1:4"},
    {{2, 5, 4}, "1:3"},
    {{2, 5, 5}, "1:2"},
    {{3, 4, 2}, "-1:5"},
    {{3, 4, 3}, "-1:4"},
    {{3, 4, 4}, "1:3"},
    {{3, 4, 5}, "1:2"},
    {{3, 5, 2}, "1:4"},
    {{3, 5, 3}, "-1:5"},
    {{3, 5, 4}, "-1:2"},
    {{3, 5, 5}, "1:3"},
    {{4, 5, 0}, "2:1"},
    {{4, 5, 1}, "-2:0"},
    {{4, 5, 2}, "2:3"},
    {{4, 5, 3}, "-2:2"},
};

Vec e(int i) { return basis_vector<Rational>(6, i); }

struct Fixture {
  Model m = build_heisenberg<Rational>();
  CurvTensor<Rational> rt = riemann(m, levi_civita(m));
};

// Exhaustive symmetry and Bianchi checks; returns the number of violations.
int symmetry_violations(const Model& m) {
  const auto conn = levi_civita(m);
  const auto rt = riemann(m, conn);
  const auto dr = riemann_derivative(conn, rt);
  const int d = m.dim();
  int bad = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const Rational r = rt.r(i, j, k, l);
          if (r != -rt.r(j, i, k, l) || r != -rt.r(i, j, l, k) || r != rt.r(k, l, i, j)) ++bad;
          if (r + rt.r(j, k, i, l) + rt.r(k, i, j, l) != 0) ++bad;
          for (int p = 0; p < d; ++p)
            if (dr(p, i, j, k, l) + dr(i, j, p, k, l) + dr(j, p, i, k, l) != 0) ++bad;
        }
  return bad;
}

}  // namespace

TEST_CASE("heisenberg curvature table") {
  Fixture f;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        const auto it = kCurvature.find({i, j, k});
        const Vec expected = it == kCurvature.end() ? Vec(Vec::Zero(6)) : parse_sparse(it->second, 6);
        INFO(i << ' ' << j << ' ' << k);
        CHECK(curvature_vector(f.rt, e(i), e(j), e(k)) == expected);
        CHECK(oracle::curvature(f.m, e(i), e(j), e(k)) == expected);
      }
}

TEST_CASE("golden curvature values") {
  Fixture f;
  CHECK(curvature_vector(f.rt, e(0), e(2), e(0)) == Vec(3 * e(2)));
  CHECK(curvature_vector(f.rt, e(0), e(2), e(2)) == Vec(-3 * e(0)));
  CHECK(curvature_vector(f.rt, e(0), e(4), e(4)) == e(0));
  CHECK(is_zero(curvature_vector(f.rt, e(4), e(5), e(5))));
  CHECK(curvature_vector(f.rt, e(4), e(5), e(0)) == Vec(2 * e(1)));
  CHECK(curvature_value(f.rt, e(0), e(2), e(0), e(2)) == 3);
}

TEST_CASE("ricci and scalar curvature") {
  Fixture f;
  const auto rho = ricci(f.rt);
  BilinearForm<Rational> expected = BilinearForm<Rational>::Zero(6, 6);
  for (int i = 0; i < 4; ++i) expected(i, i) = -4;
  expected(4, 4) = 4;
  expected(5, 5) = 4;
  CHECK(rho == expected);
  CHECK(ricci_operator(rho) == expected);
  CHECK(scalar_curvature(rho) == -8);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(oracle::ricci(f.m, e(i), e(j)) == expected(i, j));
}

TEST_CASE("sectional curvature") {
  Fixture f;
  for (int i = 0; i < 4; ++i) {
    CHECK(sectional(f.rt, e(i), e(4)) == 1);
    CHECK(sectional(f.rt, e(i), e(5)) == 1);
  }
  CHECK(sectional(f.rt, e(4), e(5)) == 0);
  CHECK(sectional(f.rt, e(0), e(2)) == -3);
  CHECK(sectional(f.rt, e(0), e(1)) == 0);
  for (int i = 0; i < 6; ++i) CHECK(holomorphic_sectional(f.m, f.rt, e(i)) == 0);
  CHECK_THROWS_AS(sectional(f.rt, e(0), e(0)), DomainError);
  CHECK_THROWS_AS(sectional(f.rt, e(0), Vec(2 * e(0))), DomainError);
  CHECK_THROWS_AS(holomorphic_sectional(f.m, f.rt, Vec(Vec::Zero(6))), DomainError);
}

TEST_CASE("sectional curvature depends only on the plane") {
  Fixture f;
  gen::Source src(51);
  int tested = 0;
  while (tested < 60) {
    const Vec x = src.vector(6), y = src.vector(6);
    const Rational a = src.nonzero(), b = src.rational(), c = src.rational(), dd = src.nonzero();
    // (x', y') = (a x + b y, c x + dd y) spans the same plane when a dd − b c ≠ 0
    if (a * dd - b * c == 0) continue;
    const Rational gxy = inner_product(x, y);
    if (inner_product(x, x) * inner_product(y, y) - gxy * gxy == 0) continue;
    const Vec x2 = a * x + b * y, y2 = c * x + dd * y;
    CHECK(sectional(f.rt, x, y) == sectional(f.rt, x2, y2));
    CHECK(sectional(f.rt, x, y) == oracle::sectional(f.m, x, y));
    ++tested;
  }
}

TEST_CASE("curvature is multilinear") {
  Fixture f;
  gen::Source src(52);
  for (int s = 0; s < 40; ++s) {
    const Vec x = src.vector(6), y = src.vector(6), z = src.vector(6), w = src.vector(6);
    const Rational a = src.rational();
    CHECK(curvature_vector(f.rt, Vec(a * x + w), y, z) ==
          Vec(a * curvature_vector(f.rt, x, y, z) + curvature_vector(f.rt, w, y, z)));
    CHECK(curvature_vector(f.rt, x, y, z) == oracle::curvature(f.m, x, y, z));
  }
}

TEST_CASE("symmetries and Bianchi identities on heisenberg") {
  CHECK(symmetry_violations(build_heisenberg<Rational>()) == 0);
}

TEST_CASE("symmetries and Bianchi identities on perturbed Lie models") {
  gen::Source src(53);
  for (int trial = 0; trial < 5; ++trial) {
    const Model m = gen::perturbed_lie_model(src);
    REQUIRE(is_lie_algebra(m));
    CHECK(symmetry_violations(m) == 0);
    const auto rt = riemann(m, levi_civita(m));
    for (int s = 0; s < 5; ++s) {
      const Vec x = src.vector(6), y = src.vector(6), z = src.vector(6);
      CHECK(curvature_vector(rt, x, y, z) == oracle::curvature(m, x, y, z));
    }
  }
}
