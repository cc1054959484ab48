#ifndef DNV_BACKGROUND_HPP_
#define DNV_BACKGROUND_HPP_

// Analytic double-null backgrounds. A background evaluates the metric data
// (Omega, b^A, g_AB) as second-order jets in (u, ubar, x1, x2), so all
// downstream geometry (Ricci coefficients, connection table, their first
// derivatives) is exact. Grid charts are sampled from these.
//
// Conventions: u < 0 throughout, |u| = -u; jet variable order (u, ubar, x1, x2).

#include <array>
#include <cstdint>
#include <memory>

#include "dnv/jet.hpp"
#include "dnv/sphere.hpp"

namespace dnv {

struct BasePoint {
  double u = -1.0;
  double ubar = 0.0;
  AngPoint ang;
};

// Metric data at a point, as jets.
struct GeomJet {
  GJet Omega;
  std::array<GJet, 2> b;            // shift components b^A
  std::array<std::array<GJet, 2>, 2> g;  // induced metric g_AB (symmetric)
};

class Background {
 public:
  virtual ~Background() = default;
  virtual GeomJet eval(const BasePoint& p) const = 0;
  virtual double a() const = 0;
  virtual double u_inf() const = 0;
};

// Exact Minkowski: Omega = 1, b = 0, g = r^2 * (round metric), r = ubar - u.
class MinkowskiBackground final : public Background {
 public:
  MinkowskiBackground(double a, double u_inf);
  GeomJet eval(const BasePoint& p) const override;
  double a() const override { return a_; }
  double u_inf() const override { return u_inf_; }

 private:
  double a_;
  double u_inf_;
};

// Synthetic background realizing the pointwise coefficient hierarchy
//   |chi_hat|   <~ amplitude * a^{1/2}/|u|,
//   |chibar_hat|<~ amplitude * a^{1/2}/|u|^2,
//   |eta|,|etabar| <~ amplitude * a^{1/2}/|u|^2,
//   |omegabar|  <~ amplitude * a/|u|^3,
//   |trchibar + 2/|u|| <~ amplitude /|u|^2,
//   |1 - Omega^-2| <~ amplitude * a/|u|^2,  |b| <~ amplitude / a^{1/2},
// by construction: smooth bump profiles in (ubar, theta) times the exact
// envelope weights in |u| and a. Deterministic in (seed); amplitude = 0
// reproduces Minkowski bit-for-bit.
class SyntheticBackground final : public Background {
 public:
  SyntheticBackground(double a, double u_inf, std::uint64_t seed, double amplitude);
  GeomJet eval(const BasePoint& p) const override;
  double a() const override { return a_; }
  double u_inf() const override { return u_inf_; }
  double amplitude() const { return amplitude_; }

  // Test hook: skips the amplitude range check (used to drive the hierarchy
  // monitor out of band on purpose).
  static std::shared_ptr<SyntheticBackground> make_unchecked(double a, double u_inf,
                                                             std::uint64_t seed,
                                                             double amplitude);

 private:
  struct Unchecked {};
  SyntheticBackground(double a, double u_inf, std::uint64_t seed, double amplitude, Unchecked);
  void init(std::uint64_t seed);

  double a_;
  double u_inf_;
  double amplitude_;
  // Seeded angular shapes: ambient trace-free matrix for the shear, ambient
  // vectors for the lapse/shift profiles.
  std::array<std::array<double, 3>, 3> shear_mat_{};
  std::array<double, 3> lapse_vec_{};
  std::array<double, 3> shift_vec_{};
};

void validate_chart_params(double a, double u_inf);

}  // namespace dnv

#endif  // DNV_BACKGROUND_HPP_
