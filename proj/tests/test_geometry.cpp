#include <cmath>
#include <sstream>

#include "dnv/background.hpp"
#include "dnv/chart.hpp"
#include "dnv/ricci.hpp"
#include "doctest.h"

using namespace dnv;

namespace {
const AngPoint kAng{Patch::North, 0.31, -0.22};

double tensor2_norm(const GeomView<double>& v, const std::array<std::array<double, 2>, 2>& w) {
  std::array<std::array<double, 2>, 2> ginv;
  invert2(v.g, ginv);
  double s = 0.0;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int C = 0; C < 2; ++C)
        for (int D = 0; D < 2; ++D) s += ginv[A][C] * ginv[B][D] * w[A][B] * w[C][D];
  return std::sqrt(s);
}
}  // namespace

TEST_CASE("minkowski chart rejects bad parameters") {
  CHECK_THROWS(MinkowskiBackground(-64.0, -16.0));
  CHECK_THROWS(MinkowskiBackground(64.0, -15.0));  // u_inf > -a/4
  CHECK_THROWS(GridChart(MinkowskiBackground(64.0, -256.0), GridSpec{2, 2, 2, 1.45}));
}

TEST_CASE("minkowski expansions: tr chi = 2/r, tr chibar = -2/r") {
  MinkowskiBackground bg(64.0, -256.0);

  // At u = -16 (= -a/4), ubar = 0: tr chi = 2/16 = 8/a = 0.125.
  const auto rc = ricci_exact(bg, {-16.0, 0.0, kAng});
  CHECK(rc.tr_chi == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(rc.tr_chibar == doctest::Approx(-0.125).epsilon(1e-13));

  // All shear/torsion coefficients vanish identically.
  const auto view = geom_view(bg.eval({-16.0, 0.0, kAng}), -16.0);
  CHECK(tensor2_norm(view, rc.chi_hat) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(tensor2_norm(view, rc.chibar_hat) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rc.eta[0] == 0.0);
  CHECK(rc.etabar[1] == 0.0);
  CHECK(rc.omegabar == 0.0);

  // tr chibar tilde = -2/r + 2/|u| = 2 ubar / (r |u|), checked at ubar > 0
  // against a finite difference of log det g in u.
  const double u = -20.0, ub = 0.65;
  const auto rc2 = ricci_exact(bg, {u, ub, kAng});
  const double r = ub - u;
  CHECK(rc2.tr_chibar_tilde == doctest::Approx(2.0 * ub / (r * -u)).epsilon(1e-12));
  const double h = 1e-5;
  auto logdet = [&](double uu) {
    const auto v = geom_view(bg.eval({uu, ub, kAng}), uu);
    return std::log(v.g[0][0] * v.g[1][1] - v.g[0][1] * v.g[1][0]);
  };
  const double fd_trchibar = 0.5 * (logdet(u + h) - logdet(u - h)) / (2.0 * h);
  CHECK(rc2.tr_chibar == doctest::Approx(fd_trchibar).epsilon(1e-8));
}

TEST_CASE("frame normalization g(e3,e4) = -2") {
  MinkowskiBackground mink(64.0, -256.0);
  CHECK(frame_inner_34(mink.eval({-40.0, 0.3, kAng})) == doctest::Approx(-2.0).epsilon(1e-12));
  SyntheticBackground syn(64.0, -256.0, 7, 1.0);
  CHECK(frame_inner_34(syn.eval({-40.0, 0.3, kAng})) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("connection table: nabla_4 e_4 = 0 and Minkowski structure") {
  MinkowskiBackground bg(64.0, -256.0);
  const BasePoint p{-16.0, 0.0, kAng};
  const auto t = frame_connection_exact(bg, p);

  for (int lam = 0; lam < 4; ++lam) CHECK(t.Gamma[lam][3][3] == 0.0);

  // G^A_B = chibar_A^B = -(1/r) delta on the round sphere of radius 16.
  CHECK(t.G[0][0] == doctest::Approx(-1.0 / 16.0).epsilon(1e-12));
  CHECK(t.G[1][1] == doctest::Approx(-1.0 / 16.0).epsilon(1e-12));
  CHECK(t.G[0][1] == doctest::Approx(0.0).epsilon(1e-14));
  // Gamma^A_{4B} = chi_A^B = (1/r) delta.
  CHECK(t.Gamma[0][3][0] == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  // Blocks with eta/omegabar vanish on Minkowski.
  CHECK(t.Gamma[2][2][0] == 0.0);
  CHECK(t.Gamma[2][2][2] == 0.0);
  CHECK(t.Gamma[0][2][3] == 0.0);
}

TEST_CASE("trace-free split is exact") {
  SyntheticBackground bg(64.0, -1024.0, 3, 1.0);
  for (double u : {-1000.0, -300.0, -40.0}) {
    const BasePoint p{u, 0.7, kAng};
    const auto view = geom_view(bg.eval(p), u);
    const auto rc = ricci_from_view(view);
    std::array<std::array<double, 2>, 2> ginv;
    invert2(view.g, ginv);
    double tr_hat = 0.0;
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) tr_hat += ginv[A][B] * rc.chi_hat[A][B];
    const double scale = tensor2_norm(view, rc.chi_hat);
    if (scale > 0.0) CHECK(std::abs(tr_hat) < 1e-12 * scale);
    CHECK(rc.chi_hat[0][1] == rc.chi_hat[1][0]);
  }
}

TEST_CASE("stencil ricci converges at 4th order to the exact jets") {
  SyntheticBackground bg(64.0, -64.0, 11, 1.0);
  // Richardson: refine the u axis, watch chibar at a fixed physical point.
  auto chibar_err = [&](int nu) {
    GridSpec spec{nu, 9, 9, 1.45};
    GridChart chart(bg, spec);
    const int iu = (nu - 1) / 2, jv = 4, ix = 4, iy = 4;
    const auto rc = ricci_from_chart(chart, Patch::North, iu, jv, ix, iy);
    const BasePoint p{chart.u_at(iu), chart.ubar_at(jv), chart.ang_at(Patch::North, ix, iy)};
    const auto rc_exact = ricci_exact(bg, p);
    double err = 0.0;
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B)
        err = std::max(err, std::abs(rc.chibar_hat[A][B] - rc_exact.chibar_hat[A][B]));
    return err;
  };
  const double e1 = chibar_err(9);
  const double e2 = chibar_err(17);
  const double slope = std::log2(e1 / e2);
  CHECK(slope > 3.5);

  // Edge points use one-sided stencils and still work.
  GridChart chart(bg, GridSpec{9, 9, 9, 1.45});
  CHECK_NOTHROW(ricci_from_chart(chart, Patch::South, 0, 0, 0, 0));
  CHECK_THROWS(ricci_from_chart(chart, Patch::South, -1, 0, 0, 0));
}

TEST_CASE("synthetic background: hierarchy monitor") {
  GridSpec spec{7, 7, 13, 1.45};

  SUBCASE("Minkowski: all ratios vanish") {
    MinkowskiBackground bg(64.0, -1024.0);
    const auto rep = bootstrap_check(bg, spec);
    CHECK(rep.pass);
    for (const auto& e : rep.entries) CHECK(e.ratio < 1e-9);
    CHECK(rep.det_ratio_lo > 0.0);
  }

  SUBCASE("amplitude zero reproduces Minkowski bit-for-bit") {
    MinkowskiBackground mink(64.0, -1024.0);
    SyntheticBackground syn(64.0, -1024.0, 42, 0.0);
    for (double u : {-1024.0, -500.0, -16.0}) {
      const BasePoint p{u, 0.85, kAng};
      const auto a = mink.eval(p);
      const auto b = syn.eval(p);
      CHECK(a.Omega.v == b.Omega.v);
      CHECK(a.g[0][0].v == b.g[0][0].v);
      CHECK(a.b[0].v == b.b[0].v);
      CHECK(a.g[0][1].v == b.g[0][1].v);
    }
  }

  SUBCASE("amplitude one passes; the forced amplitude-10 hook fails") {
    SyntheticBackground bg(64.0, -1024.0, 9, 1.0);
    const auto rep = bootstrap_check(bg, spec);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.ratio <= 1.0);
    }
    CHECK(rep.pass);

    const auto forced = SyntheticBackground::make_unchecked(64.0, -1024.0, 9, 10.0);
    const auto rep10 = bootstrap_check(*forced, spec);
    CHECK_FALSE(rep10.pass);
    // Profiles scale linearly in amplitude to leading order.
    CHECK(rep10.ratio("lapse") == doctest::Approx(10.0 * rep.ratio("lapse")).epsilon(0.2));
    bool any_over = false;
    for (const auto& e : rep10.entries) any_over = any_over || e.ratio > 1.0;
    CHECK(any_over);
  }
}

TEST_CASE("chart invariants and dump/restore round trip") {
  SyntheticBackground bg(64.0, -256.0, 5, 1.0);
  GridChart chart(bg, GridSpec{5, 5, 7, 1.45});
  const auto det = chart.check_invariants();
  CHECK(det.lo > 0.0);
  CHECK(det.hi >= det.lo);

  std::ostringstream os;
  chart.dump(os);
  std::istringstream is(os.str());
  const GridChart back = GridChart::restore(is);
  std::ostringstream os2;
  back.dump(os2);
  CHECK(os.str() == os2.str());
  CHECK(back.at(GridChart::kG11, Patch::South, 2, 3, 1, 4) ==
        chart.at(GridChart::kG11, Patch::South, 2, 3, 1, 4));
}
