#ifndef DNV_SPHERE_HPP_
#define DNV_SPHERE_HPP_

// Two-patch angular machinery. The sphere is covered by two stereographic
// charts (projection from the south pole for the north patch and vice
// versa). Surface integrals use a smooth partition of unity blending over
// the colatitude band [80 deg, 100 deg].

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "dnv/jet.hpp"

namespace dnv {

enum class Patch : int { North = 0, South = 1 };

struct AngPoint {
  Patch patch = Patch::North;
  double x1 = 0.0;
  double x2 = 0.0;
};

// Unit-sphere embedding of a patch point. Both patches map into the same
// ambient coordinates, so fields built from the embedding are global.
template <class T>
std::array<T, 3> embed(Patch patch, const T& x1, const T& x2) {
  const T rho2 = x1 * x1 + x2 * x2;
  const T den = 1.0 / (rho2 + 1.0);
  if (patch == Patch::North) {
    return {2.0 * x1 * den, 2.0 * x2 * den, (1.0 - rho2) * den};
  }
  return {2.0 * x1 * den, -2.0 * x2 * den, (rho2 - 1.0) * den};
}

// Conformal factor of the round unit-sphere metric: gamma_AB = conf * delta.
template <class T>
T round_conformal(const T& x1, const T& x2) {
  const T s = 1.0 + x1 * x1 + x2 * x2;
  return 4.0 / (s * s);
}

inline double colatitude(const AngPoint& p) {
  const double rho = std::hypot(p.x1, p.x2);
  const double c = 2.0 * std::atan(rho);
  return p.patch == Patch::North ? c : std::numbers::pi - c;
}

// Partition of unity subordinate to the two patches.
double partition_weight(const AngPoint& p);

// Coordinates of the same sphere point in the other patch (overlap only).
AngPoint to_other_patch(const AngPoint& p);

// Structured angular grid: identical square [-extent, extent]^2 per patch.
struct SphereGrid {
  int n = 65;             // points per axis, >= 3
  double extent = 1.45;   // covers colatitude up to ~110 deg per patch

  double coord(int i) const { return -extent + 2.0 * extent * i / (n - 1); }
  double step() const { return 2.0 * extent / (n - 1); }
  AngPoint point(Patch patch, int i, int j) const {
    return {patch, coord(i), coord(j)};
  }
};

// Integral over S^2 of a scalar sampled per patch point; `area_density`
// must return the full measure factor (field value times sqrt(det g)).
// Partition weights are applied here.
double sphere_integral(const SphereGrid& grid,
                       const std::function<double(const AngPoint&)>& area_density);

}  // namespace dnv

#endif  // DNV_SPHERE_HPP_
