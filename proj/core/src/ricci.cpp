#include "dnv/ricci.hpp"

namespace dnv {

GeomView<double> geom_view(const GeomJet& gj, double u) {
  GeomView<double> v;
  v.u = u;
  v.Omega = gj.Omega.v;
  for (int C = 0; C < 2; ++C) v.b[C] = gj.b[C].v;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) v.g[A][B] = gj.g[A][B].v;
  for (int k = 0; k < 4; ++k) {
    v.dOmega[k] = gj.Omega.d[k];
    for (int C = 0; C < 2; ++C) v.db[C][k] = gj.b[C].d[k];
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) v.dg[A][B][k] = gj.g[A][B].d[k];
  }
  return v;
}

namespace {
SJet jet_value(const GJet& g) {
  SJet j(g.v);
  j.d = g.d;
  return j;
}
SJet jet_partial(const GJet& g, int k) {
  SJet j(g.d[k]);
  for (int i = 0; i < 4; ++i) j.d[i] = g.hess(k, i);
  return j;
}
}  // namespace

GeomView<SJet> geom_view_jets(const GeomJet& gj, double u) {
  GeomView<SJet> v;
  v.u = SJet::variable(u, 0);
  v.Omega = jet_value(gj.Omega);
  for (int C = 0; C < 2; ++C) v.b[C] = jet_value(gj.b[C]);
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) v.g[A][B] = jet_value(gj.g[A][B]);
  for (int k = 0; k < 4; ++k) {
    v.dOmega[k] = jet_partial(gj.Omega, k);
    for (int C = 0; C < 2; ++C) v.db[C][k] = jet_partial(gj.b[C], k);
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) v.dg[A][B][k] = jet_partial(gj.g[A][B], k);
  }
  return v;
}

RicciCoeffs ricci_exact(const Background& bg, const BasePoint& p) {
  return ricci_from_view(geom_view(bg.eval(p), p.u));
}

FrameConnection frame_connection_exact(const Background& bg, const BasePoint& p) {
  const auto view = geom_view(bg.eval(p), p.u);
  return frame_table_from_view(view, ricci_from_view(view));
}

double frame_inner_34(const GeomJet& gj) {
  // Coordinate metric blocks: g_uv = -2 Omega^2, g_uA = -g_AB b^B,
  // g_uu = g_AB b^A b^B, g_vv = g_vA = 0, g_AB as stored.
  const double om2 = gj.Omega.v * gj.Omega.v;
  const double e3[4] = {1.0, 0.0, gj.b[0].v, gj.b[1].v};   // (u, v, x1, x2)
  const double e4[4] = {0.0, 1.0 / om2, 0.0, 0.0};
  double gbb = 0.0, gb[2] = {0.0, 0.0};
  for (int A = 0; A < 2; ++A) {
    for (int B = 0; B < 2; ++B) {
      gbb += gj.g[A][B].v * gj.b[A].v * gj.b[B].v;
      gb[A] += gj.g[A][B].v * gj.b[B].v;
    }
  }
  double s = 0.0;
  // uu, uv/vu, uA/Au, AB blocks.
  s += gbb * e3[0] * e4[0];
  s += -2.0 * om2 * (e3[0] * e4[1] + e3[1] * e4[0]);
  for (int A = 0; A < 2; ++A) {
    s += -gb[A] * (e3[0] * e4[2 + A] + e3[2 + A] * e4[0]);
    for (int B = 0; B < 2; ++B) s += gj.g[A][B].v * e3[2 + A] * e4[2 + B];
  }
  return s;
}

}  // namespace dnv
