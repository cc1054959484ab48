#include <cmath>
#include <numbers>

#include "dnv/sphere.hpp"
#include "doctest.h"

using namespace dnv;

TEST_CASE("embedding lands on the unit sphere and patches agree on overlap") {
  const AngPoint p{Patch::North, 0.9, -0.4};
  const auto n = embed(p.patch, p.x1, p.x2);
  CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == doctest::Approx(1.0).epsilon(1e-15));

  const AngPoint q = to_other_patch(p);
  const auto m = embed(q.patch, q.x1, q.x2);
  for (int i = 0; i < 3; ++i) CHECK(n[i] == doctest::Approx(m[i]).epsilon(1e-14));
}

TEST_CASE("partition of unity sums to one") {
  for (double x1 : {0.05, 0.4, 0.9, 1.1}) {
    for (double x2 : {0.0, -0.7}) {
      const AngPoint p{Patch::North, x1, x2};
      const AngPoint q = to_other_patch(p);
      CHECK(partition_weight(p) + partition_weight(q) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("sphere quadrature integrates area and a harmonic") {
  SphereGrid grid;
  grid.n = 81;
  // Area of the unit sphere.
  const double area = sphere_integral(grid, [](const AngPoint& p) {
    return round_conformal(p.x1, p.x2);
  });
  CHECK(area == doctest::Approx(4.0 * std::numbers::pi).epsilon(2e-5));

  // n_z integrates to zero; n_z^2 integrates to (4 pi)/3.
  const double mz = sphere_integral(grid, [](const AngPoint& p) {
    const auto n = embed(p.patch, p.x1, p.x2);
    return n[2] * round_conformal(p.x1, p.x2);
  });
  CHECK(mz == doctest::Approx(0.0).epsilon(1e-9));
  const double mz2 = sphere_integral(grid, [](const AngPoint& p) {
    const auto n = embed(p.patch, p.x1, p.x2);
    return n[2] * n[2] * round_conformal(p.x1, p.x2);
  });
  CHECK(mz2 == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(2e-5));
}
