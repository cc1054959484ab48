#include "dnv/sphere.hpp"

#include <stdexcept>

namespace dnv {

namespace {
constexpr double kBlendLo = 80.0 * std::numbers::pi / 180.0;
constexpr double kBlendHi = 100.0 * std::numbers::pi / 180.0;
}  // namespace

double partition_weight(const AngPoint& p) {
  const double c = colatitude(p);
  double tau_north;
  if (c <= kBlendLo) {
    tau_north = 1.0;
  } else if (c >= kBlendHi) {
    tau_north = 0.0;
  } else {
    // Cosine blend over the 20-degree overlap band.
    const double t = (c - kBlendLo) / (kBlendHi - kBlendLo);
    tau_north = 0.5 * (1.0 + std::cos(std::numbers::pi * t));
  }
  return p.patch == Patch::North ? tau_north : 1.0 - tau_north;
}

AngPoint to_other_patch(const AngPoint& p) {
  const double rho2 = p.x1 * p.x1 + p.x2 * p.x2;
  if (rho2 == 0.0) throw std::domain_error("pole has no antipodal-patch coordinates");
  const Patch other = p.patch == Patch::North ? Patch::South : Patch::North;
  return {other, p.x1 / rho2, -p.x2 / rho2};
}

double sphere_integral(const SphereGrid& grid,
                       const std::function<double(const AngPoint&)>& area_density) {
  if (grid.n < 3) throw std::invalid_argument("sphere grid needs n >= 3");
  const double h = grid.step();
  double total = 0.0;
  for (Patch patch : {Patch::North, Patch::South}) {
    for (int i = 0; i < grid.n; ++i) {
      const double wi = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
      for (int j = 0; j < grid.n; ++j) {
        const double wj = (j == 0 || j == grid.n - 1) ? 0.5 : 1.0;
        const AngPoint p = grid.point(patch, i, j);
        const double tau = partition_weight(p);
        if (tau == 0.0) continue;
        total += wi * wj * tau * area_density(p);
      }
    }
  }
  return total * h * h;
}

}  // namespace dnv
