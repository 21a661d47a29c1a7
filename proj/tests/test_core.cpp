// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/core.hpp"
#include "ccm/format.hpp"
#include "ccm/report.hpp"
#include "gen.hpp"

#include <doctest.h>

using namespace ccm;
using Vec = FrameVector<Rational>;

TEST_CASE("rational field axioms on random samples") {
  gen::Source src(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = src.rational(), b = src.rational(), c = src.rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a - a == 0);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("rational text round trip") {
  gen::Source src(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational q = src.rational(1000, 999);
    const auto back = parse_rational(format_rational(q));
    REQUIRE(back);
    CHECK(*back == q);
  }
  CHECK(format_rational(Rational(-6) / 4) == "-3/2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(*parse_rational("+4/6") == Rational(2) / 3);
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("2/"));
}

TEST_CASE("sparse vector format") {
  Vec v = Vec::Zero(6);
  v(0) = Rational(1) / 2;
  v(3) = -2;
  CHECK(format_sparse(v) == "1/2:0,-2:3");
  CHECK(format_sparse(Vec::Zero(6)) == "0");
  CHECK(parse_sparse("1/2:0,-2:3", 6) == v);
  CHECK(parse_sparse("0", 6) == Vec::Zero(6));
  CHECK_THROWS_AS(parse_sparse("1:6", 6), ParseError);
  CHECK_THROWS_AS(parse_sparse("x:1", 6), ParseError);
  CHECK(format_argument(basis_vector<Rational>(6, 3)) == "e3");

  gen::Source src(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec w = src.vector(6);
    CHECK(parse_sparse(format_sparse(w), 6) == w);
  }
}

TEST_CASE("inner product is symmetric and bilinear") {
  gen::Source src(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec x = src.vector(6), y = src.vector(6), z = src.vector(6);
    const Rational a = src.rational();
    CHECK(inner_product(x, y) == inner_product(y, x));
    CHECK(inner_product(Vec(a * x + z), y) == a * inner_product(x, y) + inner_product(z, y));
    CHECK(inner_product(x, x) >= 0);
  }
  CHECK(inner_product(basis_vector<Rational>(6, 2), basis_vector<Rational>(6, 2)) == 1);
  CHECK(inner_product(basis_vector<Rational>(6, 2), basis_vector<Rational>(6, 3)) == 0);
  CHECK_THROWS_AS(inner_product(Vec::Zero(6), Vec::Zero(4)), DimensionError);
}

TEST_CASE("tensor storage and contraction") {
  Tensor<Rational, 3> t(3);
  t(0, 1, 2) = 5;
  t(2, 2, 0) = -1;
  CHECK(t.data()[0 * 9 + 1 * 3 + 2] == 5);
  CHECK(t.at({2, 2, 0}) == -1);
  CHECK_THROWS_AS(t.at({3, 0, 0}), DimensionError);

  gen::Source src(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = src.vector(3), y = src.vector(3), z = src.vector(3), w = src.vector(3);
    const Rational a = src.rational();
    const Vec xw = a * x + w;
    CHECK(contract(t, {&xw, &y, &z}) == a * contract(t, {&x, &y, &z}) + contract(t, {&w, &y, &z}));
    CHECK(contract(t, {&x, &y, &z}) == 5 * x(0) * y(1) * z(2) - x(2) * y(2) * z(0));
  }
  const Vec bad = Vec::Zero(4);
  const Vec ok = Vec::Zero(3);
  CHECK_THROWS_AS(contract(t, {&bad, &ok, &ok}), DimensionError);
}

TEST_CASE("one-forms and endomorphisms") {
  OneForm<Rational> w(4);
  w << 1, 2, 0, -1;
  Vec x(4);
  x << 3, 1, 7, 2;
  CHECK(apply_oneform(w, x) == 3);
  const Endomorphism<Rational> a = tensor_product(w, Vec(basis_vector<Rational>(4, 1)));
  CHECK(Vec(a * x) == Vec(3 * basis_vector<Rational>(4, 1)));
  CHECK(is_antisymmetric(Endomorphism<Rational>(a - a.transpose())));
  CHECK(is_symmetric(Endomorphism<Rational>(a + a.transpose())));
  CHECK_FALSE(is_zero(a));
  CHECK_THROWS_AS(basis_vector<Rational>(4, 4), DimensionError);
}

TEST_CASE("values compare by kind and content") {
  Value a = Rational(2), b = Rational(2), c = Vec(Vec::Zero(2));
  CHECK(values_equal(a, b));
  CHECK_FALSE(values_equal(a, c));
  CHECK(format_value(Rational(-1) / 3) == "-1/3");
}
