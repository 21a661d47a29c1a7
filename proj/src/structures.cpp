// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/structures.hpp"

namespace ccm {

namespace {

using Vec = FrameVector<Rational>;

struct Route {
  CheckResult result;

  explicit Route(std::string id) { result.id = std::move(id); }

  bool open() const { return result.passed; }

  void compare(std::vector<Vec> args, std::string part, Value lhs, Value rhs) {
    if (!result.passed || values_equal(lhs, rhs)) return;
    result.passed = false;
    result.witness = Witness{std::move(args), std::move(part), std::move(lhs), std::move(rhs)};
  }
};

}  // namespace

NormalityReport check_normality(const Model& m, const ConnectionCoeffs<Rational>& conn) {
  const int d = m.dim();
  const int h = m.horizontal_dim();
  const Vec zero = Vec::Zero(d);
  const Vec U = m.U(), V = m.V();
  const auto terms = ContactTerms<Rational>::compute(m, conn);

  std::vector<Vec> e;
  for (int i = 0; i < d; ++i) e.push_back(basis_vector<Rational>(d, i));

  Route definition("NORMALITY-KORKMAZ");
  for (int i = 0; i < h && definition.open(); ++i)
    for (int j = 0; j < h && definition.open(); ++j) {
      definition.compare({e[i], e[j]}, "S", tensor_S(m, conn, e[i], e[j]), zero);
      definition.compare({e[i], e[j]}, "T", tensor_T(m, conn, e[i], e[j]), zero);
    }
  for (int i = 0; i < d && definition.open(); ++i) {
    definition.compare({e[i], U}, "S(X,U)", tensor_S(m, conn, e[i], U), zero);
    definition.compare({e[i], V}, "T(X,V)", tensor_T(m, conn, e[i], V), zero);
  }

  Route trilinear("NORMALITY-TRILINEAR");
  for (int x = 0; x < d && trilinear.open(); ++x) {
    const Endomorphism<Rational> dG = cov_deriv_endo(conn, e[x], m.G);
    const Endomorphism<Rational> dH = cov_deriv_endo(conn, e[x], m.H);
    for (int y = 0; y < d && trilinear.open(); ++y)
      for (int z = 0; z < d && trilinear.open(); ++z) {
        trilinear.compare({e[x], e[y], e[z]}, "G", dG(z, y),
                       normal_nabla_G_trilinear(m, terms, e[x], e[y], e[z]));
        trilinear.compare({e[x], e[y], e[z]}, "H", dH(z, y),
                       normal_nabla_H_trilinear(m, terms, e[x], e[y], e[z]));
      }
  }

  Route explicit_form("NORMALITY-EXPLICIT");
  for (int x = 0; x < d && explicit_form.open(); ++x) {
    const Endomorphism<Rational> dG = cov_deriv_endo(conn, e[x], m.G);
    const Endomorphism<Rational> dH = cov_deriv_endo(conn, e[x], m.H);
    for (int y = 0; y < d && explicit_form.open(); ++y) {
      explicit_form.compare({e[x], e[y]}, "G", Vec(dG.col(y)), normal_nabla_G(m, terms, e[x], e[y]));
      explicit_form.compare({e[x], e[y]}, "H", Vec(dH.col(y)), normal_nabla_H(m, terms, e[x], e[y]));
    }
  }

  NormalityReport report{std::move(definition.result), std::move(trilinear.result),
                         std::move(explicit_form.result)};
  report.agreement = report.definition.passed == report.trilinear.passed &&
                     report.trilinear.passed == report.explicit_form.passed;
  return report;
}

}  // namespace ccm
