#ifndef DNV_CHART_HPP_
#define DNV_CHART_HPP_

// Discretized double-null metric data on a (u, ubar, theta) grid, sampled
// from an analytic background. Derivative stencils are 4th order, central in
// the interior and one-sided at grid edges.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnv/background.hpp"
#include "dnv/ricci.hpp"
#include "dnv/sphere.hpp"

namespace dnv {

struct GridSpec {
  int nu = 9;
  int nubar = 9;
  int nx = 17;          // per patch axis
  double extent = 1.45;
};

class GridChart {
 public:
  GridChart(const Background& bg, const GridSpec& spec);

  double a() const { return a_; }
  double u_inf() const { return u_inf_; }
  const GridSpec& spec() const { return spec_; }

  double u_at(int iu) const { return u_inf_ + du_ * iu; }
  double ubar_at(int jv) const { return dv_ * jv; }
  AngPoint ang_at(Patch patch, int ix, int iy) const {
    return {patch, -spec_.extent + dx_ * ix, -spec_.extent + dx_ * iy};
  }
  double du() const { return du_; }
  double dubar() const { return dv_; }
  double dx() const { return dx_; }

  enum Field { kOmega = 0, kB1, kB2, kG11, kG12, kG22, kNumFields };
  double at(Field f, Patch patch, int iu, int jv, int ix, int iy) const {
    return data_[f][index(patch, iu, jv, ix, iy)];
  }

  // Chart invariants: Omega > 0 and det g > 0 everywhere, Omega = 1 and
  // b = 0 on {u = u_inf} and {ubar = 0}. Throws on violation; returns the
  // observed range of det g / |u|^4.
  struct DetBounds {
    double lo;
    double hi;
  };
  DetBounds check_invariants(double tol = 1e-9) const;

  void dump(std::ostream& os) const;
  static GridChart restore(std::istream& is);

 private:
  GridChart() = default;
  std::size_t index(Patch patch, int iu, int jv, int ix, int iy) const {
    return (((static_cast<std::size_t>(patch) * spec_.nu + iu) * spec_.nubar + jv) * spec_.nx +
            ix) *
               spec_.nx +
           iy;
  }

  double a_ = 0.0;
  double u_inf_ = 0.0;
  GridSpec spec_;
  double du_ = 0.0, dv_ = 0.0, dx_ = 0.0;
  std::vector<double> data_[kNumFields];

  friend GeomView<double> chart_view(const GridChart&, Patch, int, int, int, int);
};

// Metric data plus stencil first derivatives at an interior-or-edge grid
// point; the stencil needs at least 5 points per axis.
GeomView<double> chart_view(const GridChart& chart, Patch patch, int iu, int jv, int ix, int iy);

RicciCoeffs ricci_from_chart(const GridChart& chart, Patch patch, int iu, int jv, int ix, int iy);
FrameConnection frame_connection_from_chart(const GridChart& chart, Patch patch, int iu, int jv,
                                            int ix, int iy);

// Pointwise hierarchy monitor. Each entry reports
//   max over the grid of |coefficient| / envelope(a, |u|),
// with the trace deviations measured against the exact round values. The
// report never throws: it is diagnostics, the pass flag compares every ratio
// against `constant`.
struct HierarchyReport {
  struct Entry {
    std::string name;
    double ratio;
  };
  std::vector<Entry> entries;
  double det_ratio_lo = 0.0;
  double det_ratio_hi = 0.0;
  double constant = 1.0;
  bool pass = false;

  double ratio(const std::string& name) const;
};

HierarchyReport bootstrap_check(const Background& bg, const GridSpec& spec, double constant = 1.0);

}  // namespace dnv

#endif  // DNV_CHART_HPP_
