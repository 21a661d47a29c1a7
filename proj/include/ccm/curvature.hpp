// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Riemann tensor of an invariant metric and its traces.
// Convention: R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z, r(i,j,k,l) = g(R(e_i,e_j)e_k, e_l).

#pragma once

#include "ccm/connection.hpp"
#include "ccm/core.hpp"
#include "ccm/model.hpp"

namespace ccm {

template <typename Scalar>
struct CurvTensor {
  Tensor4<Scalar> r;

  int dim() const { return r.dim(); }
};

template <typename Scalar>
CurvTensor<Scalar> riemann(const ManifoldModel<Scalar>& m, const ConnectionCoeffs<Scalar>& conn) {
  const int d = conn.dim();
  const auto& c = m.constants;
  const auto& g = conn.gamma;
  CurvTensor<Scalar> rt{Tensor4<Scalar>(d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Scalar acc(0);
          for (int p = 0; p < d; ++p) {
            if (g(j, k, p) != 0 && g(i, p, l) != 0) acc += g(j, k, p) * g(i, p, l);
            if (g(i, k, p) != 0 && g(j, p, l) != 0) acc -= g(i, k, p) * g(j, p, l);
            if (c(i, j, p) != 0 && g(p, k, l) != 0) acc -= c(i, j, p) * g(p, k, l);
          }
          rt.r(i, j, k, l) = acc;
        }
  return rt;
}

/// R(x, y, z, w) = g(R(x,y)z, w).
template <typename Scalar>
Scalar curvature_value(const CurvTensor<Scalar>& rt, const FrameVector<Scalar>& x,
                       const FrameVector<Scalar>& y, const FrameVector<Scalar>& z,
                       const FrameVector<Scalar>& w) {
  return contract(rt.r, {&x, &y, &z, &w});
}

/// R(x, y) z.
template <typename Scalar>
FrameVector<Scalar> curvature_vector(const CurvTensor<Scalar>& rt, const FrameVector<Scalar>& x,
                                     const FrameVector<Scalar>& y, const FrameVector<Scalar>& z) {
  const int d = rt.dim();
  if (x.size() != d || y.size() != d || z.size() != d)
    throw DimensionError("curvature_vector: length mismatch");
  FrameVector<Scalar> out = FrameVector<Scalar>::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y(j) == 0) continue;
      for (int k = 0; k < d; ++k) {
        if (z(k) == 0) continue;
        const Scalar w = x(i) * y(j) * z(k);
        for (int l = 0; l < d; ++l)
          if (rt.r(i, j, k, l) != 0) out(l) += w * rt.r(i, j, k, l);
      }
    }
  }
  return out;
}

/// ρ(e_j, e_k) = Σ_a r(a, j, k, a).
template <typename Scalar>
BilinearForm<Scalar> ricci(const CurvTensor<Scalar>& rt) {
  const int d = rt.dim();
  BilinearForm<Scalar> rho = BilinearForm<Scalar>::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < d; ++a) rho(j, k) += rt.r(a, j, k, a);
  return rho;
}

/// Q with g(QX, Y) = ρ(X, Y); the frame is orthonormal so Q has ρ's matrix.
template <typename Scalar>
Endomorphism<Scalar> ricci_operator(const BilinearForm<Scalar>& rho) {
  return rho;
}

template <typename Scalar>
Scalar scalar_curvature(const BilinearForm<Scalar>& rho) {
  return rho.trace();
}

/// K(x, y) = R(x,y,y,x) / (|x|²|y|² − g(x,y)²).
template <typename Scalar>
Scalar sectional(const CurvTensor<Scalar>& rt, const FrameVector<Scalar>& x,
                 const FrameVector<Scalar>& y) {
  const Scalar gxy = inner_product(x, y);
  const Scalar area = inner_product(x, x) * inner_product(y, y) - gxy * gxy;
  if (area == 0) throw DomainError("sectional curvature of a degenerate plane");
  return curvature_value(rt, x, y, y, x) / area;
}

template <typename Scalar>
Scalar holomorphic_sectional(const ManifoldModel<Scalar>& m, const CurvTensor<Scalar>& rt,
                             const FrameVector<Scalar>& x) {
  if (is_zero(x)) throw DomainError("holomorphic sectional curvature of the zero vector");
  return sectional(rt, x, FrameVector<Scalar>(m.J * x));
}

/// (∇_{e_m} R)(e_i, e_j, e_k, e_l), stored with m as the first index.
template <typename Scalar>
Tensor<Scalar, 5> riemann_derivative(const ConnectionCoeffs<Scalar>& conn,
                                     const CurvTensor<Scalar>& rt) {
  const int d = conn.dim();
  const auto& g = conn.gamma;
  const auto& r = rt.r;
  Tensor<Scalar, 5> out(d);
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            Scalar acc(0);
            for (int p = 0; p < d; ++p) {
              if (g(m, i, p) != 0) acc += g(m, i, p) * r(p, j, k, l);
              if (g(m, j, p) != 0) acc += g(m, j, p) * r(i, p, k, l);
              if (g(m, k, p) != 0) acc += g(m, k, p) * r(i, j, p, l);
              if (g(m, l, p) != 0) acc += g(m, l, p) * r(i, j, k, p);
            }
            out(m, i, j, k, l) = -acc;
          }
  return out;
}

}  // namespace ccm
