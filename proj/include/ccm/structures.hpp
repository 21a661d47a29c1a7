// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Structure tensors, Nijenhuis torsion, S and T, and three ways of deciding
// normality: S and T directly, the trilinear form of (nabla_X G)Y and
// (nabla_X H)Y, and the explicit vector form. Every condition is multilinear,
// so frame tuples suffice.

#pragma once

#include "ccm/connection.hpp"
#include "ccm/core.hpp"
#include "ccm/model.hpp"
#include "ccm/report.hpp"

namespace ccm {

template <typename Scalar>
FrameVector<Scalar> apply_structure(const ManifoldModel<Scalar>& m, Structure which,
                                    const FrameVector<Scalar>& x) {
  if (x.size() != m.dim()) throw DimensionError("apply_structure: length mismatch");
  return m.structure(which) * x;
}

/// X₀ = X − u(X)U − v(X)V.
template <typename Scalar>
FrameVector<Scalar> horizontal_projection(const ManifoldModel<Scalar>& m,
                                          const FrameVector<Scalar>& x) {
  if (x.size() != m.dim()) throw DimensionError("horizontal_projection: length mismatch");
  FrameVector<Scalar> out = x;
  out(m.u_index()) = 0;
  out(m.v_index()) = 0;
  return out;
}

/// [A,A](X,Y) = (∇_{AX}A)Y − (∇_{AY}A)X − A(∇_X A)Y + A(∇_Y A)X.
template <typename Scalar>
FrameVector<Scalar> nijenhuis(const ManifoldModel<Scalar>& m, const ConnectionCoeffs<Scalar>& conn,
                              Structure which, const FrameVector<Scalar>& x,
                              const FrameVector<Scalar>& y) {
  const auto& a = m.structure(which);
  const FrameVector<Scalar> ax = a * x;
  const FrameVector<Scalar> ay = a * y;
  return cov_deriv_endo(conn, ax, a) * y - cov_deriv_endo(conn, ay, a) * x -
         a * (cov_deriv_endo(conn, x, a) * y) + a * (cov_deriv_endo(conn, y, a) * x);
}

template <typename Scalar>
FrameVector<Scalar> tensor_S(const ManifoldModel<Scalar>& m, const ConnectionCoeffs<Scalar>& conn,
                             const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) {
  const OneForm<Scalar> sigma = sigma_form(m, conn);
  const auto& G = m.G;
  const auto& H = m.H;
  const Endomorphism<Scalar> GH = G * H;
  const Scalar vx = x(m.v_index()), vy = y(m.v_index());
  const Scalar sx = apply_oneform(sigma, x), sy = apply_oneform(sigma, y);
  const Scalar sgx = apply_oneform(sigma, FrameVector<Scalar>(G * x)), sgy = apply_oneform(sigma, FrameVector<Scalar>(G * y));
  return nijenhuis(m, conn, Structure::G, x, y) + Scalar(2) * inner_product(x, G * y) * m.U() -
         Scalar(2) * inner_product(x, H * y) * m.V() + Scalar(2) * (vy * (H * x) - vx * (H * y)) +
         sgy * (H * x) - sgx * (H * y) + sx * (GH * y) - sy * (GH * x);
}

template <typename Scalar>
FrameVector<Scalar> tensor_T(const ManifoldModel<Scalar>& m, const ConnectionCoeffs<Scalar>& conn,
                             const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) {
  const OneForm<Scalar> sigma = sigma_form(m, conn);
  const auto& G = m.G;
  const auto& H = m.H;
  const Endomorphism<Scalar> GH = G * H;
  const Scalar ux = x(m.u_index()), uy = y(m.u_index());
  const Scalar sx = apply_oneform(sigma, x), sy = apply_oneform(sigma, y);
  const Scalar shx = apply_oneform(sigma, FrameVector<Scalar>(H * x)), shy = apply_oneform(sigma, FrameVector<Scalar>(H * y));
  return nijenhuis(m, conn, Structure::H, x, y) - Scalar(2) * inner_product(x, G * y) * m.U() +
         Scalar(2) * inner_product(x, H * y) * m.V() + Scalar(2) * (uy * (G * x) - ux * (G * y)) +
         shx * (G * y) - shy * (G * x) + sx * (GH * y) - sy * (GH * x);
}

/// Quantities of a model that the normal-manifold formulas are written in.
template <typename Scalar>
struct ContactTerms {
  OneForm<Scalar> sigma;
  TwoForm<Scalar> dsigma;
  Endomorphism<Scalar> nabla_U_J;
  Scalar dsigma_UV;

  static ContactTerms compute(const ManifoldModel<Scalar>& m,
                              const ConnectionCoeffs<Scalar>& conn) {
    ContactTerms t;
    t.sigma = sigma_form(m, conn);
    t.dsigma = exterior_d_oneform(m, t.sigma);
    t.nabla_U_J = cov_deriv_endo(conn, m.U(), m.J);
    t.dsigma_UV = t.dsigma(m.u_index(), m.v_index());
    return t;
  }
};

/// Right side of the trilinear characterisation of g((∇_X G)Y, Z):
/// σ(X)g(HY,Z) + v(X)dσ(GZ,GY) − 2v(X)g(HGY,Z) − u(Y)g(X,Z) − v(Y)g(JX,Z)
///   + u(Z)g(X,Y) + v(Z)g(JX,Y).
template <typename Scalar>
Scalar normal_nabla_G_trilinear(const ManifoldModel<Scalar>& m, const ContactTerms<Scalar>& t,
                                const FrameVector<Scalar>& x, const FrameVector<Scalar>& y,
                                const FrameVector<Scalar>& z) {
  const int iu = m.u_index(), iv = m.v_index();
  const FrameVector<Scalar> jx = m.J * x;
  return apply_oneform(t.sigma, x) * inner_product(m.H * y, z) +
         x(iv) * evaluate_form(t.dsigma, FrameVector<Scalar>(m.G * z), FrameVector<Scalar>(m.G * y)) -
         Scalar(2) * x(iv) * inner_product(m.H * (m.G * y), z) - y(iu) * inner_product(x, z) -
         y(iv) * inner_product(jx, z) + z(iu) * inner_product(x, y) + z(iv) * inner_product(jx, y);
}

/// Right side of the trilinear characterisation of g((∇_X H)Y, Z). The HG
/// term carries +2u(X) (the sign that matches the explicit (∇_X H)Y formula
/// and the G/H symmetry of the G version).
template <typename Scalar>
Scalar normal_nabla_H_trilinear(const ManifoldModel<Scalar>& m, const ContactTerms<Scalar>& t,
                                const FrameVector<Scalar>& x, const FrameVector<Scalar>& y,
                                const FrameVector<Scalar>& z) {
  const int iu = m.u_index(), iv = m.v_index();
  const FrameVector<Scalar> jx = m.J * x;
  return -apply_oneform(t.sigma, x) * inner_product(m.G * y, z) -
         x(iu) * evaluate_form(t.dsigma, FrameVector<Scalar>(m.H * z), FrameVector<Scalar>(m.H * y)) +
         Scalar(2) * x(iu) * inner_product(m.H * (m.G * y), z) + y(iu) * inner_product(jx, z) -
         y(iv) * inner_product(x, z) - z(iu) * inner_product(jx, y) + z(iv) * inner_product(x, y);
}

/// Explicit (∇_X G)Y on a normal manifold:
/// σ(X)HY − 2v(X)HGY − u(Y)X − v(Y)JX + v(X)(2JY₀ + (∇_U J)GY₀)
///   + g(X,Y)U + g(JX,Y)V − dσ(U,V)v(X)(u(Y)V − v(Y)U).
template <typename Scalar>
FrameVector<Scalar> normal_nabla_G(const ManifoldModel<Scalar>& m, const ContactTerms<Scalar>& t,
                                   const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) {
  const int iu = m.u_index(), iv = m.v_index();
  const FrameVector<Scalar> y0 = horizontal_projection(m, y);
  const FrameVector<Scalar> jx = m.J * x;
  const FrameVector<Scalar> uv = y(iu) * m.V() - y(iv) * m.U();
  return apply_oneform(t.sigma, x) * (m.H * y) - Scalar(2) * x(iv) * (m.H * (m.G * y)) - y(iu) * x -
         y(iv) * jx + x(iv) * (Scalar(2) * (m.J * y0) + t.nabla_U_J * (m.G * y0)) +
         inner_product(x, y) * m.U() + inner_product(jx, y) * m.V() -
         t.dsigma_UV * x(iv) * uv;
}

/// Explicit (∇_X H)Y on a normal manifold:
/// −σ(X)GY + 2u(X)HGY + u(Y)JX − v(Y)X − u(X)(2JY₀ + (∇_U J)GY₀)
///   − g(JX,Y)U + g(X,Y)V + dσ(U,V)u(X)(u(Y)V − v(Y)U).
template <typename Scalar>
FrameVector<Scalar> normal_nabla_H(const ManifoldModel<Scalar>& m, const ContactTerms<Scalar>& t,
                                   const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) {
  const int iu = m.u_index(), iv = m.v_index();
  const FrameVector<Scalar> y0 = horizontal_projection(m, y);
  const FrameVector<Scalar> jx = m.J * x;
  const FrameVector<Scalar> uv = y(iu) * m.V() - y(iv) * m.U();
  return -apply_oneform(t.sigma, x) * (m.G * y) + Scalar(2) * x(iu) * (m.H * (m.G * y)) + y(iu) * jx -
         y(iv) * x - x(iu) * (Scalar(2) * (m.J * y0) + t.nabla_U_J * (m.G * y0)) -
         inner_product(jx, y) * m.U() + inner_product(x, y) * m.V() +
         t.dsigma_UV * x(iu) * uv;
}

// ---------------------------------------------------------------------------

struct NormalityReport {
  CheckResult definition;     // S, T on the required frame pairs
  CheckResult trilinear;
  CheckResult explicit_form;  // (∇G)Y, (∇H)Y as vectors
  bool agreement = true;

  bool normal() const { return agreement && definition.passed; }
};

NormalityReport check_normality(const Model& m, const ConnectionCoeffs<Rational>& conn);

}  // namespace ccm
