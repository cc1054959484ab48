#include "dnv/background.hpp"

#include <cmath>
#include <stdexcept>

namespace dnv {

namespace {

// SplitMix64: stable across platforms, unlike <random> distributions.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t& state) {
  return 2.0 * (static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
}

// C^2 quintic ramp: 0 at t<=0, 1 at t>=1.
GJet smoothstep5(const GJet& t) {
  if (t.v <= 0.0) return GJet(0.0);
  if (t.v >= 1.0) return GJet(1.0);
  return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

// Angular gradient of the unit-sphere embedding, dn[A][i] = dn_i/dx_A,
// written in closed form as jets so its own derivatives are exact.
void embedding_gradient(Patch patch, const GJet& x1, const GJet& x2,
                        std::array<GJet, 3> (&dn)[2]) {
  const GJet rho2 = x1 * x1 + x2 * x2;
  const GJet den2 = inv(1.0 + rho2) * inv(1.0 + rho2);
  const double s2 = patch == Patch::North ? 1.0 : -1.0;
  dn[0][0] = (2.0 * (1.0 + rho2) - 4.0 * x1 * x1) * den2;
  dn[0][1] = -4.0 * s2 * x1 * x2 * den2;
  dn[0][2] = -4.0 * s2 * x1 * den2;
  dn[1][0] = -4.0 * x1 * x2 * den2;
  dn[1][1] = 2.0 * s2 * (1.0 + rho2 - 2.0 * x2 * x2) * den2;
  dn[1][2] = -4.0 * s2 * x2 * den2;
}

}  // namespace

void validate_chart_params(double a, double u_inf) {
  if (!(a > 0.0)) throw std::invalid_argument("chart: a must be positive");
  if (!(u_inf <= -a / 4.0)) throw std::invalid_argument("chart: u_inf must satisfy u_inf <= -a/4");
}

MinkowskiBackground::MinkowskiBackground(double a, double u_inf) : a_(a), u_inf_(u_inf) {
  validate_chart_params(a, u_inf);
}

GeomJet MinkowskiBackground::eval(const BasePoint& p) const {
  const GJet u = GJet::variable(p.u, 0);
  const GJet ubar = GJet::variable(p.ubar, 1);
  const GJet x1 = GJet::variable(p.ang.x1, 2);
  const GJet x2 = GJet::variable(p.ang.x2, 3);

  const GJet r = ubar - u;
  const GJet rr = r * r * round_conformal(x1, x2);

  GeomJet out;
  out.Omega = GJet(1.0);
  out.b = {GJet(0.0), GJet(0.0)};
  out.g[0][0] = rr;
  out.g[1][1] = rr;
  out.g[0][1] = GJet(0.0);
  out.g[1][0] = GJet(0.0);
  return out;
}

SyntheticBackground::SyntheticBackground(double a, double u_inf, std::uint64_t seed,
                                         double amplitude)
    : a_(a), u_inf_(u_inf), amplitude_(amplitude) {
  validate_chart_params(a, u_inf);
  if (!(amplitude >= 0.0 && amplitude <= 1.0))
    throw std::invalid_argument("synthetic chart: amplitude must lie in [0,1]");
  init(seed);
}

SyntheticBackground::SyntheticBackground(double a, double u_inf, std::uint64_t seed,
                                         double amplitude, Unchecked)
    : a_(a), u_inf_(u_inf), amplitude_(amplitude) {
  validate_chart_params(a, u_inf);
  init(seed);
}

std::shared_ptr<SyntheticBackground> SyntheticBackground::make_unchecked(double a, double u_inf,
                                                                         std::uint64_t seed,
                                                                         double amplitude) {
  return std::shared_ptr<SyntheticBackground>(
      new SyntheticBackground(a, u_inf, seed, amplitude, Unchecked{}));
}

void SyntheticBackground::init(std::uint64_t seed) {
  std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL;
  // Trace-free symmetric ambient matrix, Frobenius norm 1/2.
  double m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) m[i][j] = m[j][i] = uniform_pm1(state);
  const double tr = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  for (int i = 0; i < 3; ++i) m[i][i] -= tr;
  double frob = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) frob += m[i][j] * m[i][j];
  const double scale = 0.5 / std::sqrt(frob > 0.0 ? frob : 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) shear_mat_[i][j] = scale * m[i][j];

  for (int i = 0; i < 3; ++i) lapse_vec_[i] = uniform_pm1(state);
  double ln = std::hypot(lapse_vec_[0], std::hypot(lapse_vec_[1], lapse_vec_[2]));
  for (int i = 0; i < 3; ++i) lapse_vec_[i] /= (ln > 0.0 ? ln : 1.0);

  for (int i = 0; i < 3; ++i) shift_vec_[i] = uniform_pm1(state);
  ln = std::hypot(shift_vec_[0], std::hypot(shift_vec_[1], shift_vec_[2]));
  for (int i = 0; i < 3; ++i) shift_vec_[i] /= (ln > 0.0 ? ln : 1.0);
}

GeomJet SyntheticBackground::eval(const BasePoint& p) const {
  const GJet u = GJet::variable(p.u, 0);
  const GJet ubar = GJet::variable(p.ubar, 1);
  const GJet x1 = GJet::variable(p.ang.x1, 2);
  const GJet x2 = GJet::variable(p.ang.x2, 3);

  const GJet r = ubar - u;
  const GJet conf = round_conformal(x1, x2);
  const GJet abs_u = -u;
  const GJet inv_u = 1.0 / abs_u;

  GeomJet out;
  const GJet rr = r * r * conf;
  out.g[0][0] = rr;
  out.g[1][1] = rr;
  out.g[0][1] = GJet(0.0);
  out.g[1][0] = GJet(0.0);
  out.Omega = GJet(1.0);
  out.b = {GJet(0.0), GJet(0.0)};
  if (amplitude_ == 0.0) return out;

  const double sqrt_a = std::sqrt(a_);
  // Ramps vanishing on the initial surfaces {ubar = 0} and {u = u_inf}.
  const GJet s_ub = smoothstep5(ubar * 2.0);
  const double span = -u_inf_ - a_ / 4.0;
  const GJet w_u = span > 0.0 ? smoothstep5((u - u_inf_) * (1.0 / span)) : GJet(1.0);
  const GJet ramp = s_ub * w_u;
  const double base = amplitude_ * sqrt_a * 0.25;

  const auto n = embed(p.ang.patch, x1, x2);
  std::array<GJet, 3> dn[2];
  embedding_gradient(p.ang.patch, x1, x2, dn);

  // Lapse: Omega = 1 + amp * (a^{1/2}/(4|u|^2)) * ramp * (v_lapse . n).
  GJet Y(0.0);
  for (int i = 0; i < 3; ++i) Y = Y + lapse_vec_[i] * n[i];
  out.Omega = 1.0 + base * inv_u * inv_u * ramp * Y;

  // Shift: b^A = amp * (a^{1/2}/(4|u|^3)) * ramp * gamma^{AB} d_B(v_shift . n).
  {
    GJet dPsi1(0.0), dPsi2(0.0);
    for (int i = 0; i < 3; ++i) {
      dPsi1 = dPsi1 + shift_vec_[i] * dn[0][i];
      dPsi2 = dPsi2 + shift_vec_[i] * dn[1][i];
    }
    const GJet amp_b = base * inv_u * inv_u * inv_u * ramp / conf;
    out.b[0] = amp_b * dPsi1;
    out.b[1] = amp_b * dPsi2;
  }

  // Shear-carrying metric perturbation, det-preserving by construction:
  //   g_AB = r^2 conf * [exp(M)]_AB,  M = amp*(a^{1/2}/(4|u|)) * ramp * Hhat,
  // where Hhat is the delta-trace-free pullback of the ambient matrix, so
  // det g = r^4 det gamma exactly and the expansions keep their round trace
  // values up to lapse/shift contributions.
  {
    GJet P[2][2];
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) {
        GJet s(0.0);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) s = s + shear_mat_[i][j] * dn[A][i] * dn[B][j];
        P[A][B] = s;
      }
    const GJet half_tr = 0.5 * (P[0][0] + P[1][1]);
    // The shear profile keeps a nonzero ubar-slope on all of [0,1]; only the
    // lapse and shift are pinned to their flat values on the initial surfaces.
    const GJet s_shear = 0.3 + 0.7 * ubar;
    const GJet amp_m = base * inv_u * s_shear / conf;
    const GJet alpha = amp_m * (P[0][0] - half_tr);  // M = [alpha beta; beta -alpha]
    const GJet beta = amp_m * P[0][1];

    // exp(M) = c(m2) I + f(m2) M with m2 = alpha^2 + beta^2,
    // c = cosh(sqrt(m2)), f = sinh(sqrt(m2))/sqrt(m2); m2 stays << 1 so a
    // short even series is exact to roundoff.
    const GJet m2 = alpha * alpha + beta * beta;
    GJet c(1.0), f(1.0);
    GJet pw(1.0);
    double cfac = 1.0, ffac = 1.0;
    for (int k = 1; k <= 5; ++k) {
      pw = pw * m2;
      cfac /= (2.0 * k - 1.0) * (2.0 * k);
      ffac /= (2.0 * k) * (2.0 * k + 1.0);
      c = c + pw * cfac;
      f = f + pw * ffac;
    }
    const GJet rr_conf = r * r * conf;
    out.g[0][0] = rr_conf * (c + f * alpha);
    out.g[1][1] = rr_conf * (c - f * alpha);
    out.g[0][1] = rr_conf * f * beta;
    out.g[1][0] = out.g[0][1];
  }

  return out;
}

}  // namespace dnv
