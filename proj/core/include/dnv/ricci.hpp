#ifndef DNV_RICCI_HPP_
#define DNV_RICCI_HPP_

// Null connection coefficients and the frame connection table.
//
// Frame: e_A = d/dtheta^A, e_3 = d/du + b^A d/dtheta^A, e_4 = Omega^-2 d/dubar,
// with g(e_3, e_4) = -2. Coefficients follow from the metric data:
//   chi_AB    = 1/2 Omega^-2 dubar(g_AB)
//   chibar_AB = 1/2 (Lie_{e_3} g)_AB
//   eta_A     = dA(log Omega) - 1/4 Omega^-2 g_AC dubar(b^C)
//   etabar_A  = dA(log Omega) + 1/4 Omega^-2 g_AC dubar(b^C)
//   omegabar  = 2 e_3(log Omega)
// omega vanishes identically in this frame; zeta is the alias -etabar.
//
// The formulas are templated over the scalar type so the same code produces
// plain values (from chart data or jets) and first-derivative jets (for the
// mass-shell commutators).

#include <array>
#include <cmath>

#include "dnv/background.hpp"
#include "dnv/jet.hpp"

namespace dnv {

// Metric data and its first partials w.r.t. (u, ubar, x1, x2).
template <class T>
struct GeomView {
  T u;  // the coordinate itself (|u| = -u enters weights)
  T Omega;
  std::array<T, 2> b;
  std::array<std::array<T, 2>, 2> g;
  std::array<T, 4> dOmega;
  std::array<std::array<T, 4>, 2> db;        // db[C][k] = d_k b^C
  std::array<std::array<std::array<T, 4>, 2>, 2> dg;  // dg[A][B][k]
};

template <class T>
struct RicciT {
  std::array<std::array<T, 2>, 2> chi, chibar, chi_hat, chibar_hat;
  T tr_chi, tr_chibar, tr_chibar_tilde;
  std::array<T, 2> eta, etabar;
  T omegabar;
};

// Frame connection table Gamma[lam][mu][nu]: coefficient of e_lam in
// nabla_{e_mu} e_nu. Index map: 0,1 = sphere directions, 2 = "3", 3 = "4".
template <class T>
struct FrameTableT {
  std::array<std::array<std::array<T, 4>, 4>, 4> Gamma{};
  std::array<std::array<std::array<T, 2>, 2>, 2> Gslash{};  // Gslash[C][A][B]
  // Combined object G^B_A = Gamma^B_{3A} = chibar_A^B - e_A(b^B); stored
  // whole so nothing downstream ever needs e_A(b^B) on its own.
  std::array<std::array<T, 2>, 2> G{};
};

template <class T>
void invert2(const std::array<std::array<T, 2>, 2>& g, std::array<std::array<T, 2>, 2>& ginv) {
  const T det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const T idet = 1.0 / det;
  ginv[0][0] = g[1][1] * idet;
  ginv[1][1] = g[0][0] * idet;
  ginv[0][1] = T(0.0) - g[0][1] * idet;
  ginv[1][0] = ginv[0][1];
}

template <class T>
RicciT<T> ricci_from_view(const GeomView<T>& v) {
  RicciT<T> out;
  std::array<std::array<T, 2>, 2> ginv;
  invert2(v.g, ginv);

  const T inv_om2 = 1.0 / (v.Omega * v.Omega);
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      out.chi[A][B] = 0.5 * inv_om2 * v.dg[A][B][1];
      T lie = v.dg[A][B][0];
      for (int C = 0; C < 2; ++C)
        lie = lie + v.b[C] * v.dg[A][B][2 + C] + v.g[C][B] * v.db[C][2 + A] +
              v.g[A][C] * v.db[C][2 + B];
      out.chibar[A][B] = 0.5 * lie;
    }

  out.tr_chi = T(0.0);
  out.tr_chibar = T(0.0);
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      out.tr_chi = out.tr_chi + ginv[A][B] * out.chi[A][B];
      out.tr_chibar = out.tr_chibar + ginv[A][B] * out.chibar[A][B];
    }
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      out.chi_hat[A][B] = out.chi[A][B] - 0.5 * out.tr_chi * v.g[A][B];
      out.chibar_hat[A][B] = out.chibar[A][B] - 0.5 * out.tr_chibar * v.g[A][B];
    }
  out.tr_chibar_tilde = out.tr_chibar + 2.0 / (T(0.0) - v.u);

  const T inv_om = 1.0 / v.Omega;
  for (int A = 0; A < 2; ++A) {
    T gdb(0.0);
    for (int C = 0; C < 2; ++C) gdb = gdb + v.g[A][C] * v.db[C][1];
    out.eta[A] = v.dOmega[2 + A] * inv_om - 0.25 * inv_om2 * gdb;
    out.etabar[A] = v.dOmega[2 + A] * inv_om + 0.25 * inv_om2 * gdb;
  }
  T e3om = v.dOmega[0];
  for (int C = 0; C < 2; ++C) e3om = e3om + v.b[C] * v.dOmega[2 + C];
  out.omegabar = 2.0 * e3om * inv_om;
  return out;
}

// Connection table per the null-frame decomposition. One entry deviates from
// the naive constancy of the frame inner products: nabla_3 e_4 carries the
// component -omegabar e_4 (required for metric compatibility; it vanishes on
// Minkowski). nabla_4 e_4 = 0 holds exactly.
template <class T>
FrameTableT<T> frame_table_from_view(const GeomView<T>& v, const RicciT<T>& rc) {
  FrameTableT<T> t;
  std::array<std::array<T, 2>, 2> ginv;
  invert2(v.g, ginv);

  for (int lam = 0; lam < 4; ++lam)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) t.Gamma[lam][mu][nu] = T(0.0);

  // Sphere Christoffels of g.
  for (int C = 0; C < 2; ++C)
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) {
        T s(0.0);
        for (int D = 0; D < 2; ++D)
          s = s + ginv[C][D] * (v.dg[D][B][2 + A] + v.dg[D][A][2 + B] - v.dg[A][B][2 + D]);
        t.Gslash[C][A][B] = 0.5 * s;
      }

  auto mixed = [&](const std::array<std::array<T, 2>, 2>& w, int A, int B) {
    // w_A{}^B
    T s(0.0);
    for (int C = 0; C < 2; ++C) s = s + w[A][C] * ginv[C][B];
    return s;
  };
  auto raised = [&](const std::array<T, 2>& w, int A) {
    T s(0.0);
    for (int C = 0; C < 2; ++C) s = s + ginv[A][C] * w[C];
    return s;
  };

  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      for (int C = 0; C < 2; ++C) t.Gamma[C][A][B] = t.Gslash[C][A][B];
      t.Gamma[2][A][B] = 0.5 * rc.chi[A][B];
      t.Gamma[3][A][B] = 0.5 * rc.chibar[A][B];
      t.Gamma[B][A][2] = mixed(rc.chibar, A, B);
      t.Gamma[B][A][3] = mixed(rc.chi, A, B);
      t.G[B][A] = mixed(rc.chibar, A, B) - v.db[B][2 + A];
      t.Gamma[B][2][A] = t.G[B][A];
      t.Gamma[B][3][A] = mixed(rc.chi, A, B);
    }
  for (int A = 0; A < 2; ++A) {
    t.Gamma[2][A][2] = T(0.0) - rc.etabar[A];
    t.Gamma[3][A][3] = rc.etabar[A];
    t.Gamma[2][2][A] = rc.eta[A];
    t.Gamma[3][3][A] = rc.etabar[A];
    t.Gamma[A][2][3] = 2.0 * raised(rc.eta, A);
    t.Gamma[A][3][2] = 2.0 * raised(rc.etabar, A);
  }
  t.Gamma[2][2][2] = rc.omegabar;
  t.Gamma[3][2][3] = T(0.0) - rc.omegabar;
  return t;
}

// Plain-value aliases used across the library.
using RicciCoeffs = RicciT<double>;
using FrameConnection = FrameTableT<double>;

// Views extracted from an analytic background (exact derivatives).
GeomView<double> geom_view(const GeomJet& gj, double u);
GeomView<SJet> geom_view_jets(const GeomJet& gj, double u);

RicciCoeffs ricci_exact(const Background& bg, const BasePoint& p);
FrameConnection frame_connection_exact(const Background& bg, const BasePoint& p);

// g(e_3, e_4) assembled numerically from the coordinate metric components.
double frame_inner_34(const GeomJet& gj);

}  // namespace dnv

#endif  // DNV_RICCI_HPP_
