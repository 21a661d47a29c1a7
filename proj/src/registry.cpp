// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// The identity registry. Each entry compares both sides of one stated
// equation for a given tuple of slot arguments; the runner supplies the
// tuples. Printed forms are kept even where they fail on the example model.

#include "ccm/verify.hpp"

#include <algorithm>

namespace ccm {

namespace {

using Vec = FrameVector<Rational>;
using Q = Rational;
using S = Structure;

class Ctx {
 public:
  explicit Ctx(const Geometry& geo)
      : geo_(geo),
        m_(geo.model),
        U(m_.U()),
        V(m_.V()),
        zero(Vec::Zero(m_.dim())),
        dsUV(geo.terms.dsigma_UV),
        kappa(Q(4 * m_.n) - Q(2) * dsUV) {}

  Vec G(const Vec& x) const { return m_.G * x; }
  Vec H(const Vec& x) const { return m_.H * x; }
  Vec J(const Vec& x) const { return m_.J * x; }

  Q g(const Vec& x, const Vec& y) const { return inner_product(x, y); }
  Q u(const Vec& x) const { return x(m_.u_index()); }
  Q v(const Vec& x) const { return x(m_.v_index()); }
  /// (u∧v)(x, y)
  Q uv(const Vec& x, const Vec& y) const { return u(x) * v(y) - u(y) * v(x); }
  Vec hor(const Vec& x) const { return horizontal_projection(m_, x); }

  Q sig(const Vec& x) const { return apply_oneform(geo_.terms.sigma, x); }
  Q ds(const Vec& x, const Vec& y) const { return evaluate_form(geo_.terms.dsigma, x, y); }
  Q du(const Vec& x, const Vec& y) const { return evaluate_form(geo_.du, x, y); }
  Q dv(const Vec& x, const Vec& y) const { return evaluate_form(geo_.dv, x, y); }

  Vec nab(const Vec& x, const Vec& y) const { return cov_deriv_vector(geo_.conn, x, y); }
  Vec nabla(const Vec& x, S a, const Vec& y) const {
    return cov_deriv_endo(geo_.conn, x, m_.structure(a)) * y;
  }
  Vec nU(S a, const Vec& y) const { return geo_.nabla_U[static_cast<int>(a)] * y; }
  Vec nV(S a, const Vec& y) const { return geo_.nabla_V[static_cast<int>(a)] * y; }
  Q nabla_form(const Vec& x, const OneForm<Q>& w, const Vec& y) const {
    return apply_oneform(cov_deriv_oneform(geo_.conn, x, w), y);
  }
  OneForm<Q> u_form() const { return m_.u(); }
  OneForm<Q> v_form() const { return m_.v(); }

  Vec R(const Vec& x, const Vec& y, const Vec& z) const {
    return curvature_vector(geo_.curv, x, y, z);
  }
  Q R4(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
    return curvature_value(geo_.curv, x, y, z, w);
  }
  Q dR(const Vec& m, const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
    return contract(geo_.dcurv, {&m, &x, &y, &z, &w});
  }
  Q rho(const Vec& x, const Vec& y) const { return evaluate_form(geo_.rho, x, y); }
  Vec Qop(const Vec& x) const { return geo_.Q * x; }

 private:
  const Geometry& geo_;
  const Model& m_;

 public:
  const Vec U, V, zero;
  const Q dsUV;
  /// 4n − 2dσ(U,V)
  const Q kappa;
};

using Out = std::vector<Comparison>;
using Body = std::function<Out(const Ctx&, const Args&)>;

Comparison vc(std::string part, Vec lhs, Vec rhs) {
  return {std::move(part), Value(std::move(lhs)), Value(std::move(rhs))};
}
Comparison sc(std::string part, Q lhs, Q rhs) {
  return {std::move(part), Value(std::move(lhs)), Value(std::move(rhs))};
}

constexpr Slot A = Slot::All;
constexpr Slot Hz = Slot::Horizontal;

std::vector<Identity> build_registry() {
  std::vector<Identity> reg;
  auto add = [&reg](std::string id, Suite group, std::vector<Slot> slots, Body body) {
    reg.push_back({std::move(id), group, std::move(slots),
                   [body = std::move(body)](const Geometry& geo, const Args& a) {
                     return body(Ctx(geo), a);
                   }});
  };

  // -- contact compatibility ------------------------------------------------
  add("AX-du", Suite::Axioms, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.du(x, y), c.g(x, c.G(y)) + c.sig(x) * c.v(y) - c.sig(y) * c.v(x))};
  });
  add("AX-dv", Suite::Axioms, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.dv(x, y), c.g(x, c.H(y)) - (c.sig(x) * c.u(y) - c.sig(y) * c.u(x)))};
  });

  add("EQ-2.1", Suite::Contact, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("U", c.nU(S::G, x), c.sig(c.U) * c.H(x)),
            vc("V", c.nV(S::H, x), -c.sig(c.V) * c.G(x))};
  });

  add("EQ-2.4", Suite::Normality, {A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2];
    const Q rhs = c.sig(x) * c.g(c.H(y), z) + c.v(x) * c.ds(c.G(z), c.G(y)) -
                  Q(2) * c.v(x) * c.g(c.H(c.G(y)), z) - c.u(y) * c.g(x, z) -
                  c.v(y) * c.g(c.J(x), z) + c.u(z) * c.g(x, y) + c.v(z) * c.g(c.J(x), y);
    return {sc("", c.g(c.nabla(x, S::G, y), z), rhs)};
  });
  add("EQ-2.5", Suite::Normality, {A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2];
    const Q rhs = -c.sig(x) * c.g(c.G(y), z) - c.u(x) * c.ds(c.H(z), c.H(y)) -
                  Q(2) * c.u(x) * c.g(c.H(c.G(y)), z) + c.u(y) * c.g(c.J(x), z) -
                  c.v(y) * c.g(x, z) - c.u(z) * c.g(c.J(x), y) + c.v(z) * c.g(x, y);
    return {sc("", c.g(c.nabla(x, S::H, y), z), rhs)};
  });
  add("EQ-2.6", Suite::Contact, {A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2];
    const Q rhs = c.u(x) * (c.ds(z, c.G(y)) - Q(2) * c.g(c.H(y), z)) +
                  c.v(x) * (c.ds(z, c.H(y)) + Q(2) * c.g(c.G(y), z));
    return {sc("", c.g(c.nabla(x, S::J, y), z), rhs)};
  });
  add("EQ-2.7", Suite::Contact, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("U", c.nab(x, c.U), -c.G(x) + c.sig(x) * c.V),
            vc("V", c.nab(x, c.V), -c.H(x) - c.sig(x) * c.U)};
  });
  add("EQ-2.8", Suite::Contact, {}, [](const Ctx& c, const Args&) -> Out {
    return {vc("UU", c.nab(c.U, c.U), c.sig(c.U) * c.V),
            vc("UV", c.nab(c.U, c.V), -c.sig(c.U) * c.U),
            vc("VU", c.nab(c.V, c.U), c.sig(c.V) * c.V),
            vc("VV", c.nab(c.V, c.V), -c.sig(c.V) * c.U)};
  });
  add("EQ-2.9", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Q lhs = c.ds(c.G(x), c.G(y));
    return {sc("H", lhs, c.ds(c.H(x), c.H(y))),
            sc("rhs", lhs, c.ds(y, x) - Q(2) * c.uv(y, x) * c.dsUV)};
  });
  add("EQ-2.10", Suite::Contact, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {sc("U", c.ds(c.U, x), c.v(x) * c.dsUV), sc("V", c.ds(c.V, x), -c.u(x) * c.dsUV)};
  });

  // -- curvature on horizontal arguments ------------------------------------
  add("EQ-2.11", Suite::Curvature, {}, [](const Ctx& c, const Args&) -> Out {
    return {sc("UVVU", c.R4(c.U, c.V, c.V, c.U), Q(-2) * c.dsUV),
            sc("VUUV", c.R4(c.V, c.U, c.U, c.V), Q(-2) * c.dsUV)};
  });
  add("EQ-2.12", Suite::Curvature, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("U", c.R(x, c.U, c.U), x), vc("V", c.R(x, c.V, c.V), x)};
  });
  add("EQ-2.13", Suite::Curvature, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {vc("", c.R(x, y, c.U), Q(2) * (c.g(x, c.J(y)) + c.ds(x, y)) * c.V)};
  });
  add("EQ-2.14", Suite::Curvature, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {vc("", c.R(x, y, c.V), Q(-2) * (c.g(x, c.J(y)) + c.ds(x, y)) * c.U)};
  });
  add("EQ-2.15", Suite::Curvature, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("", c.R(x, c.U, c.V), c.sig(c.U) * c.G(x) + c.nU(S::H, x) - c.J(x))};
  });
  add("EQ-2.16", Suite::Curvature, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("", c.R(x, c.V, c.U), -c.sig(c.V) * c.H(x) + c.nV(S::G, x) + c.J(x))};
  });
  add("EQ-2.17", Suite::Curvature, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {vc("", c.R(x, c.U, y),
               -c.g(x, y) * c.U - c.g(c.J(x), y) * c.V + c.ds(y, x) * c.V)};
  });
  add("EQ-2.18", Suite::Curvature, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {vc("", c.R(x, c.V, y),
               -c.g(x, y) * c.V + c.g(c.J(x), y) * c.U - c.ds(y, x) * c.U)};
  });
  add("EQ-2.19", Suite::Curvature, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    return {vc("", c.R(c.U, c.V, a[0]), c.J(a[0]))};
  });
  add("EQ-2.20", Suite::Curvature, {Hz, Hz, Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2], &w = a[3];
    const Q rhs = c.R4(x, y, z, w) - Q(2) * c.g(c.J(z), w) * c.ds(x, y) +
                  Q(2) * c.g(c.H(x), y) * c.ds(c.G(z), w) +
                  Q(2) * c.g(c.J(x), y) * c.ds(z, w) -
                  Q(2) * c.g(c.H(z), w) * c.ds(c.G(x), y);
    return {sc("", c.R4(c.G(x), c.G(y), c.G(z), c.G(w)), rhs)};
  });
  add("EQ-2.21", Suite::Curvature, {Hz, Hz, Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2], &w = a[3];
    const Q rhs = c.R4(x, y, z, w) - Q(2) * c.g(c.J(z), w) * c.ds(x, y) -
                  Q(2) * c.g(c.G(x), y) * c.ds(c.H(z), w) +
                  Q(2) * c.g(c.J(x), y) * c.ds(z, w) +
                  Q(2) * c.g(c.G(z), w) * c.ds(c.H(x), y);
    return {sc("", c.R4(c.H(x), c.H(y), c.H(z), c.H(w)), rhs)};
  });
  add("EQ-2.22", Suite::Contact, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.ds(x, y), Q(2) * c.g(c.J(x), y) + c.g(c.nU(S::J, c.G(x)), y))};
  });

  // -- general results ------------------------------------------------------
  add("EQ-3.1", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.nabla_form(x, c.u_form(), y), c.g(x, c.G(y)) + c.sig(x) * c.v(y))};
  });
  add("EQ-3.1-V", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.nabla_form(x, c.v_form(), y), c.g(x, c.G(y)) - c.sig(x) * c.u(y))};
  });
  add("EQ-3.2-BLOCK", Suite::Contact, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    Out out;
    for (auto [yname, vertical] : {std::pair{"U", true}, std::pair{"V", false}})
      for (auto [aname, which] : {std::pair{"G", S::G}, std::pair{"H", S::H}, std::pair{"J", S::J}}) {
        const Vec d = vertical ? c.nU(which, x) : c.nV(which, x);
        out.push_back(sc(std::string(yname) + aname + ",U", c.g(d, c.U), Q(0)));
        out.push_back(sc(std::string(yname) + aname + ",V", c.g(d, c.V), Q(0)));
      }
    return out;
  });
  for (auto [id, which] : {std::pair{"EQ-3.3", S::G}, std::pair{"EQ-3.4", S::H},
                           std::pair{"EQ-3.5", S::J}}) {
    add(id, Suite::Contact, {A}, [which = which](const Ctx& c, const Args& a) -> Out {
      const Vec x0 = c.hor(a[0]);
      return {vc("U", c.nU(which, x0), c.nU(which, a[0])),
              vc("V", c.nV(which, x0), c.nV(which, a[0]))};
    });
  }
  add("EQ-3.6", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nU(S::G, x), y);
    return {sc("a", lhs, c.g(c.nU(S::G, x0), y0)),
            sc("b", lhs, c.sig(c.U) * c.g(c.H(x0), y0))};
  });
  add("EQ-3.7", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nV(S::G, x), y);
    return {sc("a", lhs, c.g(c.nV(S::G, x0), y0)),
            sc("b", lhs,
               c.sig(c.V) * c.g(c.H(x0), y0) + c.ds(y0, x0) - Q(2) * c.g(c.J(x0), y0))};
  });
  add("EQ-3.8", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nV(S::H, x), y);
    return {sc("a", lhs, c.g(c.nV(S::H, x0), y0)),
            sc("b", lhs, -c.sig(c.V) * c.g(c.G(x0), y0))};
  });
  add("EQ-3.9", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nU(S::H, x), y);
    return {sc("a", lhs, c.g(c.nU(S::H, x0), y0)),
            sc("b", lhs,
               -c.sig(c.U) * c.g(c.G(x0), y0) - c.ds(y0, x0) + Q(2) * c.g(c.J(x0), y0))};
  });
  add("EQ-3.10", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nU(S::J, c.G(x)), y);
    return {sc("a", lhs, c.g(c.nU(S::J, c.G(x0)), y0)),
            sc("b", lhs, -c.ds(y0, x0) - Q(2) * c.g(c.J(x0), y0))};
  });
  add("EQ-3.11", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Q lhs = c.g(c.nV(S::J, c.G(x)), y);
    return {sc("a", lhs, c.g(c.nV(S::J, c.G(x0)), y0)),
            sc("b", lhs, c.ds(y0, c.G(x0)) - Q(2) * c.g(c.H(x0), y0))};
  });

  // -- curvature on arbitrary arguments --------------------------------------
  add("EQ-4.1", Suite::Curvature, {Hz, Hz, Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2], &w = a[3];
    const Q base = c.R4(x, y, z, w);
    return {sc("G", c.R4(c.G(x), c.G(y), c.G(z), c.G(w)), base),
            sc("H", c.R4(c.H(x), c.H(y), c.H(z), c.H(w)), base)};
  });
  add("EQ-4.2", Suite::Curvature, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("", c.R(x, c.U, c.U), c.hor(x) - Q(2) * c.dsUV * c.v(x) * c.V)};
  });
  add("EQ-4.3", Suite::Curvature, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("", c.R(x, c.V, c.V), c.hor(x) - Q(2) * c.dsUV * c.u(x) * c.U)};
  });
  add("EQ-4.4", Suite::Curvature, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    const Vec x0 = c.hor(x);
    return {vc("", c.R(x, c.U, c.V),
               c.sig(c.U) * c.G(x0) + c.nU(S::H, x0) - c.J(x0) +
                   Q(2) * c.dsUV * c.v(x) * c.U)};
  });
  add("EQ-4.5", Suite::Curvature, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    const Vec x0 = c.hor(x);
    return {vc("", c.R(x, c.V, c.U),
               -c.sig(c.V) * c.H(x0) + c.nV(S::G, x0) + c.J(x0) +
                   Q(2) * c.dsUV * c.u(x) * c.V)};
  });
  add("EQ-4.6", Suite::Curvature, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("", c.R(c.U, c.V, x),
               c.J(c.hor(x)) + Q(2) * c.dsUV * (c.u(x) * c.V - c.v(x) * c.U))};
  });
  add("EQ-4.7", Suite::Curvature, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Vec rhs =
        -c.u(x) * y0 + c.v(x) * (c.sig(c.V) * c.H(y0) + c.nV(S::G, y0) + c.J(y0)) +
        c.u(y) * x0 + c.v(y) * (-c.sig(c.V) * c.H(x0) + c.nV(S::G, x0) + c.J(x0)) +
        (Q(2) * (c.g(x0, c.J(y0)) + c.ds(x0, y0)) + Q(2) * c.dsUV * c.uv(x, y)) * c.V;
    return {vc("", c.R(x, y, c.U), rhs)};
  });
  add("EQ-4.8", Suite::Curvature, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Vec rhs =
        -c.u(x) * (c.sig(c.U) * c.G(y0) + c.nU(S::H, y0) - c.J(y0)) - c.v(x) * y0 +
        c.u(y) * (-c.sig(c.U) * c.G(x0) + c.nU(S::H, x0) - c.J(x0)) + c.v(y) * x0 +
        (Q(-2) * (c.g(x0, c.J(y0)) + c.ds(x0, y0)) - Q(2) * c.dsUV * c.uv(x, y)) * c.U;
    return {vc("", c.R(x, y, c.V), rhs)};
  });
  add("EQ-4.9", Suite::Curvature, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Vec rhs =
        c.u(y) * x0 - c.v(x) * c.J(y0) +
        c.v(y) * (c.sig(c.U) * c.G(x0) + c.nU(S::H, x0) - c.J(x0)) +
        (-c.g(x0, y0) - Q(2) * c.dsUV * c.v(x) * c.v(y)) * c.U +
        (c.ds(y0, x0) - c.g(c.J(x0), y0) - Q(2) * c.dsUV * c.v(x) * c.u(y)) * c.V;
    return {vc("", c.R(x, c.U, y), rhs)};
  });
  add("EQ-4.10", Suite::Curvature, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    const Vec rhs =
        c.u(x) * c.J(y0) + c.v(y) * x0 +
        c.u(y) * (-c.sig(c.U) * c.H(x0) + c.nV(S::G, x0) + c.J(x0)) +
        (-c.g(x0, y0) + Q(2) * c.dsUV * c.u(x) * c.u(y)) * c.V +
        (-c.ds(y0, x0) + c.g(c.J(x0), y0) - Q(2) * c.dsUV * c.u(x) * c.v(y)) * c.U;
    return {vc("", c.R(x, c.V, y), rhs)};
  });
  add("EQ-4.11", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec x0 = c.hor(x), y0 = c.hor(y);
    return {sc("", c.ds(x, y),
               Q(2) * c.g(c.J(x0), y0) + c.g(c.nU(S::J, c.G(x0)), y0) +
                   c.dsUV * c.uv(x, y))};
  });
  add("EQ-4.12", Suite::Normality, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec y0 = c.hor(y);
    const Vec rhs = c.sig(x) * c.H(y) - Q(2) * c.v(x) * c.J(y) - c.u(y) * x - c.v(y) * c.J(x) +
                    c.v(x) * (Q(2) * c.J(y0) - c.nU(S::J, c.G(y0))) + c.g(x, y) * c.U +
                    c.g(c.J(x), y) * c.V -
                    c.dsUV * c.v(x) * (c.u(y) * c.V - c.v(y) * c.U);
    return {vc("", c.nabla(x, S::G, y), rhs)};
  });
  add("EQ-4.13", Suite::Normality, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec y0 = c.hor(y);
    const Vec rhs = -c.sig(x) * c.G(y) + Q(2) * c.u(x) * c.J(y) + c.u(y) * c.J(x) - c.v(y) * x +
                    c.u(x) * (Q(-2) * c.J(y0) - c.nU(S::J, c.G(y0))) - c.g(c.J(x), y) * c.U +
                    c.g(x, y) * c.V +
                    c.dsUV * c.u(x) * (c.u(y) * c.V - c.v(y) * c.U);
    return {vc("", c.nabla(x, S::H, y), rhs)};
  });
  add("EQ-4.14", Suite::Contact, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Vec y0 = c.hor(y);
    const Vec rhs = Q(-2) * c.u(x) * c.H(y) + Q(2) * c.v(x) * c.G(y) +
                    c.u(x) * (Q(2) * c.H(y0) + c.nU(S::J, y0)) +
                    c.v(x) * (Q(-2) * c.G(y0) + c.nU(S::J, c.J(y0)));
    return {vc("", c.nabla(x, S::J, y), rhs)};
  });

  // -- Ricci ----------------------------------------------------------------
  add("EQ-5.1", Suite::Ricci, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("G", c.rho(c.G(x), c.G(y)), c.rho(x, y)),
            sc("H", c.rho(c.H(x), c.H(y)), c.rho(x, y))};
  });
  add("EQ-5.2", Suite::Ricci, {Hz, Hz}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("G", c.rho(c.G(x), y), -c.rho(x, c.G(y))),
            sc("H", c.rho(c.H(x), y), -c.rho(x, c.H(y)))};
  });
  add("EQ-5.6", Suite::Ricci, {Hz}, [](const Ctx& c, const Args& a) -> Out {
    return {sc("U", c.rho(a[0], c.U), Q(0)), sc("V", c.rho(a[0], c.V), Q(0))};
  });
  add("EQ-5.7", Suite::Ricci, {}, [](const Ctx& c, const Args&) -> Out {
    return {sc("UU", c.rho(c.U, c.U), c.kappa), sc("VV", c.rho(c.V, c.V), c.kappa),
            sc("UV", c.rho(c.U, c.V), Q(0))};
  });
  add("EQ-5.10", Suite::Ricci, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {sc("U", c.rho(x, c.U), c.kappa * c.u(x)), sc("V", c.rho(x, c.V), c.kappa * c.v(x))};
  });
  add("EQ-5.11", Suite::Ricci, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    return {sc("", c.rho(x, y),
               c.rho(c.hor(x), c.hor(y)) + c.kappa * (c.u(x) * c.u(y) + c.v(x) * c.v(y)))};
  });
  add("EQ-5.12", Suite::Ricci, {A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1];
    const Q vert = c.kappa * (c.u(x) * c.u(y) + c.v(x) * c.v(y));
    return {sc("G", c.rho(x, y), c.rho(c.G(x), c.G(y)) + vert),
            sc("H", c.rho(x, y), c.rho(c.H(x), c.H(y)) + vert)};
  });
  add("EQ-5.13", Suite::Ricci, {A}, [](const Ctx& c, const Args& a) -> Out {
    const auto& x = a[0];
    return {vc("G", c.Qop(c.G(x)), c.G(c.Qop(x))), vc("H", c.Qop(c.H(x)), c.H(c.Qop(x)))};
  });

  // -- engine self-consistency ----------------------------------------------
  add("RIEM-SYM", Suite::Curvature, {A, A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2], &w = a[3];
    const Q r = c.R4(x, y, z, w);
    return {sc("yxzw", r, -c.R4(y, x, z, w)), sc("xywz", r, -c.R4(x, y, w, z)),
            sc("zwxy", r, c.R4(z, w, x, y))};
  });
  add("BIANCHI-1", Suite::Curvature, {A, A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &z = a[2], &w = a[3];
    return {sc("", c.R4(x, y, z, w) + c.R4(y, z, x, w) + c.R4(z, x, y, w), Q(0))};
  });
  add("BIANCHI-2", Suite::Curvature, {A, A, A, A, A}, [](const Ctx& c, const Args& a) -> Out {
    const auto &x = a[0], &y = a[1], &m = a[2], &z = a[3], &w = a[4];
    return {sc("", c.dR(m, x, y, z, w) + c.dR(x, y, m, z, w) + c.dR(y, m, x, z, w), Q(0))};
  });

  std::sort(reg.begin(), reg.end(),
            [](const Identity& l, const Identity& r) { return identity_less(l.id, r.id); });
  return reg;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

const Identity* find_identity(std::string_view id) {
  for (const auto& entry : registry())
    if (entry.id == id) return &entry;
  return nullptr;
}

}  // namespace ccm
