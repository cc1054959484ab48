#include <cmath>

#include "dnv/jet.hpp"
#include "doctest.h"

using dnv::GJet;

namespace {

// f(u, ubar, x1, x2) = exp(x1) * (u*ubar + x2^2) / (1 + x1*x2)
GJet sample_fn(double u, double ub, double x1, double x2) {
  const GJet ju = GJet::variable(u, 0);
  const GJet jv = GJet::variable(ub, 1);
  const GJet j1 = GJet::variable(x1, 2);
  const GJet j2 = GJet::variable(x2, 3);
  return exp(j1) * (ju * jv + j2 * j2) / (1.0 + j1 * j2);
}

double sample_val(double u, double ub, double x1, double x2) {
  return std::exp(x1) * (u * ub + x2 * x2) / (1.0 + x1 * x2);
}

}  // namespace

TEST_CASE("second-order jets match finite differences") {
  const double u = -3.2, ub = 0.4, x1 = 0.3, x2 = -0.2;
  const GJet j = sample_fn(u, ub, x1, x2);
  CHECK(j.v == doctest::Approx(sample_val(u, ub, x1, x2)).epsilon(1e-14));

  const double h = 1e-5;
  double args[4] = {u, ub, x1, x2};
  for (int k = 0; k < 4; ++k) {
    double p[4], m[4];
    for (int i = 0; i < 4; ++i) p[i] = m[i] = args[i];
    p[k] += h;
    m[k] -= h;
    const double fd = (sample_val(p[0], p[1], p[2], p[3]) - sample_val(m[0], m[1], m[2], m[3])) /
                      (2.0 * h);
    CHECK(j.d[k] == doctest::Approx(fd).epsilon(1e-8));
  }

  // Hessian via nested central differences.
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l <= k; ++l) {
      double pp[4], pm[4], mp[4], mm[4];
      for (int i = 0; i < 4; ++i) pp[i] = pm[i] = mp[i] = mm[i] = args[i];
      pp[k] += h; pp[l] += h;
      pm[k] += h; pm[l] -= h;
      mp[k] -= h; mp[l] += h;
      mm[k] -= h; mm[l] -= h;
      const double fd = (sample_val(pp[0], pp[1], pp[2], pp[3]) -
                         sample_val(pm[0], pm[1], pm[2], pm[3]) -
                         sample_val(mp[0], mp[1], mp[2], mp[3]) +
                         sample_val(mm[0], mm[1], mm[2], mm[3])) /
                        (4.0 * h * h);
      CHECK(j.hess(k, l) == doctest::Approx(fd).epsilon(5e-5));
    }
}

TEST_CASE("jet division and sqrt invert cleanly") {
  const GJet x = GJet::variable(2.5, 0);
  const GJet y = sqrt(x) * sqrt(x);
  CHECK(y.v == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(y.d[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(y.hess(0, 0) == doctest::Approx(0.0).epsilon(1e-14));

  const GJet z = x / x;
  CHECK(z.v == doctest::Approx(1.0));
  CHECK(z.d[0] == doctest::Approx(0.0).epsilon(1e-15));
}
