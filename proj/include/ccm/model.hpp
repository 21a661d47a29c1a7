// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Homogeneous frame models: structure constants c(i,j,k) = coefficient of
// e_k in [e_i, e_j], plus G, H, J on the frame. Horizontal vectors come
// first, then U = e_{4n} and V = e_{4n+1}.

#pragma once

#include "ccm/core.hpp"
#include "ccm/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ccm {

enum class Structure { G, H, J };

template <typename Scalar>
struct ManifoldModel {
  std::string name;
  int n = 1;
  Tensor3<Scalar> constants;
  Endomorphism<Scalar> G;
  Endomorphism<Scalar> H;
  Endomorphism<Scalar> J;

  int dim() const { return 4 * n + 2; }
  int u_index() const { return 4 * n; }
  int v_index() const { return 4 * n + 1; }
  int horizontal_dim() const { return 4 * n; }

  FrameVector<Scalar> U() const { return basis_vector<Scalar>(dim(), u_index()); }
  FrameVector<Scalar> V() const { return basis_vector<Scalar>(dim(), v_index()); }
  OneForm<Scalar> u() const { return U().transpose(); }
  OneForm<Scalar> v() const { return V().transpose(); }

  const Endomorphism<Scalar>& structure(Structure which) const {
    switch (which) {
      case Structure::G: return G;
      case Structure::H: return H;
      case Structure::J: return J;
    }
    return G;
  }

  /// [x, y] extended bilinearly from the structure constants.
  FrameVector<Scalar> bracket(const FrameVector<Scalar>& x, const FrameVector<Scalar>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("bracket: length mismatch");
    FrameVector<Scalar> out = FrameVector<Scalar>::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
      if (x(i) == 0) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y(j) == 0) continue;
        const Scalar w = x(i) * y(j);
        for (int k = 0; k < dim(); ++k)
          if (constants(i, j, k) != 0) out(k) += w * constants(i, j, k);
      }
    }
    return out;
  }

  /// Empty (abelian, zero-tensor) model of the given n.
  static ManifoldModel zero(int n, std::string name = "unnamed") {
    if (n < 1) throw DimensionError("n must be positive");
    ManifoldModel m;
    m.name = std::move(name);
    m.n = n;
    const int d = 4 * n + 2;
    m.constants = Tensor3<Scalar>(d);
    m.G = Endomorphism<Scalar>::Zero(d, d);
    m.H = Endomorphism<Scalar>::Zero(d, d);
    m.J = Endomorphism<Scalar>::Zero(d, d);
    return m;
  }
};

using Model = ManifoldModel<Rational>;

/// Sets c(i,j,k) = value and c(j,i,k) = -value.
template <typename Scalar>
void set_bracket(ManifoldModel<Scalar>& m, int i, int j, int k, const Scalar& value) {
  m.constants(i, j, k) = value;
  m.constants(j, i, k) = -value;
}

/// The complex Heisenberg group in the frame
/// e1 -> 0, e1* -> 1, e2 -> 2, e2* -> 3, e3 = U -> 4, e3* = V -> 5.
template <typename Scalar>
ManifoldModel<Scalar> build_heisenberg() {
  auto m = ManifoldModel<Scalar>::zero(1, "heisenberg");
  set_bracket<Scalar>(m, 0, 2, 4, Scalar(-2));
  set_bracket<Scalar>(m, 0, 3, 5, Scalar(-2));
  set_bracket<Scalar>(m, 1, 2, 5, Scalar(-2));
  set_bracket<Scalar>(m, 1, 3, 4, Scalar(2));

  auto act = [](Endomorphism<Scalar>& a, int from, int to, int sign) { a(to, from) = Scalar(sign); };
  act(m.G, 0, 2, -1);
  act(m.G, 1, 3, 1);
  act(m.G, 2, 0, 1);
  act(m.G, 3, 1, -1);

  act(m.H, 0, 3, -1);
  act(m.H, 1, 2, -1);
  act(m.H, 2, 1, 1);
  act(m.H, 3, 0, 1);

  act(m.J, 0, 1, -1);
  act(m.J, 1, 0, 1);
  act(m.J, 2, 3, -1);
  act(m.J, 3, 2, 1);
  act(m.J, 4, 5, -1);
  act(m.J, 5, 4, 1);
  return m;
}

/// Heisenberg structure tensors on the abelian Lie algebra (all brackets zero).
template <typename Scalar>
ManifoldModel<Scalar> build_abelian_heisenberg_tensors() {
  auto m = build_heisenberg<Scalar>();
  m.name = "abelian";
  m.constants = Tensor3<Scalar>(m.dim());
  return m;
}

// ---------------------------------------------------------------------------
// Text format and structural validation (exact rationals only).

/// Parses a CCM model document. Throws ParseError with a line number.
Model load_model(std::string_view source);
Model load_model_file(const std::string& path);

/// Canonical CCM text; load_model(format_model(m)) reproduces m.
std::string format_model(const Model& m);

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Lie-algebra and structure-axiom checks in a fixed order:
/// LIE-ANTISYM, LIE-JACOBI, AX-G2, AX-H2, AX-J2, AX-ANTICOMM, AX-KERNEL,
/// AX-SKEW, AX-HGJ, AX-JH, AX-JV, AX-HERM.
ValidationReport validate_structure(const Model& m);

/// True when both Lie checks pass (the connection is meaningful).
bool is_lie_algebra(const Model& m);

}  // namespace ccm
