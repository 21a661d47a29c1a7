// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Levi-Civita connection of a left-invariant orthonormal frame.
// gamma(i,j,k) = g(nabla_{e_i} e_j, e_k). Fields are frame-constant, so
// covariant derivatives are contractions with gamma.
// dw(X,Y) = 1/2 (X w(Y) - Y w(X) - w([X,Y])); (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X).

#pragma once

#include "ccm/core.hpp"
#include "ccm/model.hpp"

namespace ccm {

template <typename Scalar>
struct ConnectionCoeffs {
  Tensor3<Scalar> gamma;

  int dim() const { return gamma.dim(); }
};

/// Koszul formula for invariant fields:
/// gamma(i,j,k) = (c(i,j,k) + c(k,i,j) − c(j,k,i)) / 2.
template <typename Scalar>
ConnectionCoeffs<Scalar> levi_civita(const Tensor3<Scalar>& c) {
  const int d = c.dim();
  ConnectionCoeffs<Scalar> conn{Tensor3<Scalar>(d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        conn.gamma(i, j, k) = (c(i, j, k) + c(k, i, j) - c(j, k, i)) / Scalar(2);
  return conn;
}

template <typename Scalar>
ConnectionCoeffs<Scalar> levi_civita(const ManifoldModel<Scalar>& m) {
  return levi_civita(m.constants);
}

/// ∇_X Y for invariant fields X, Y.
template <typename Scalar>
FrameVector<Scalar> cov_deriv_vector(const ConnectionCoeffs<Scalar>& conn,
                                     const FrameVector<Scalar>& x,
                                     const FrameVector<Scalar>& y) {
  const int d = conn.dim();
  if (x.size() != d || y.size() != d) throw DimensionError("cov_deriv_vector: length mismatch");
  FrameVector<Scalar> out = FrameVector<Scalar>::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y(j) == 0) continue;
      const Scalar w = x(i) * y(j);
      for (int k = 0; k < d; ++k)
        if (conn.gamma(i, j, k) != 0) out(k) += w * conn.gamma(i, j, k);
    }
  }
  return out;
}

/// Matrix of Y ↦ ∇_X Y, i.e. entry(k, j) = Σ_i x_i gamma(i,j,k).
template <typename Scalar>
Endomorphism<Scalar> connection_matrix(const ConnectionCoeffs<Scalar>& conn,
                                       const FrameVector<Scalar>& x) {
  const int d = conn.dim();
  if (x.size() != d) throw DimensionError("connection_matrix: length mismatch");
  Endomorphism<Scalar> out = Endomorphism<Scalar>::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (conn.gamma(i, j, k) != 0) out(k, j) += x(i) * conn.gamma(i, j, k);
  }
  return out;
}

/// (∇_X A) as an endomorphism: Y ↦ ∇_X(AY) − A(∇_X Y).
template <typename Scalar>
Endomorphism<Scalar> cov_deriv_endo(const ConnectionCoeffs<Scalar>& conn,
                                    const FrameVector<Scalar>& x,
                                    const Endomorphism<Scalar>& a) {
  if (a.rows() != conn.dim() || a.cols() != conn.dim())
    throw DimensionError("cov_deriv_endo: endomorphism size mismatch");
  const Endomorphism<Scalar> nabla = connection_matrix(conn, x);
  return nabla * a - a * nabla;
}

/// (∇_X ω)(Y) = −ω(∇_X Y) for an invariant 1-form ω.
template <typename Scalar>
OneForm<Scalar> cov_deriv_oneform(const ConnectionCoeffs<Scalar>& conn,
                                  const FrameVector<Scalar>& x, const OneForm<Scalar>& w) {
  if (w.size() != conn.dim()) throw DimensionError("cov_deriv_oneform: length mismatch");
  return -(w * connection_matrix(conn, x));
}

/// σ(X) = g(∇_X U, V).
template <typename Scalar>
OneForm<Scalar> sigma_form(const ManifoldModel<Scalar>& m, const ConnectionCoeffs<Scalar>& conn) {
  OneForm<Scalar> sigma(m.dim());
  for (int i = 0; i < m.dim(); ++i) sigma(i) = conn.gamma(i, m.u_index(), m.v_index());
  return sigma;
}

/// dω(e_i, e_j) = −½ ω([e_i, e_j]) for invariant ω.
template <typename Scalar>
TwoForm<Scalar> exterior_d_oneform(const ManifoldModel<Scalar>& m, const OneForm<Scalar>& w) {
  const int d = m.dim();
  if (w.size() != d) throw DimensionError("exterior_d_oneform: length mismatch");
  TwoForm<Scalar> out = TwoForm<Scalar>::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Scalar acc(0);
      for (int k = 0; k < d; ++k)
        if (m.constants(i, j, k) != 0) acc += m.constants(i, j, k) * w(k);
      out(i, j) = -acc / Scalar(2);
    }
  return out;
}

template <typename Scalar>
TwoForm<Scalar> wedge(const OneForm<Scalar>& a, const OneForm<Scalar>& b) {
  if (a.size() != b.size()) throw DimensionError("wedge: length mismatch");
  return a.transpose() * b - b.transpose() * a;
}

/// ω(x, y) for a 2-form (or any bilinear form) stored as a matrix.
template <typename Scalar>
Scalar evaluate_form(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& w,
                     const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) {
  if (x.size() != w.rows() || y.size() != w.cols())
    throw DimensionError("evaluate_form: length mismatch");
  Scalar acc(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (y(j) != 0 && w(i, j) != 0) acc += x(i) * w(i, j) * y(j);
  }
  return acc;
}

}  // namespace ccm
