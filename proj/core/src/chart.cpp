#include "dnv/chart.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace dnv {

GridChart::GridChart(const Background& bg, const GridSpec& spec) : spec_(spec) {
  if (spec.nu < 5 || spec.nubar < 5 || spec.nx < 5)
    throw std::invalid_argument("chart grid: need at least 5 points per axis");
  a_ = bg.a();
  u_inf_ = bg.u_inf();
  du_ = (-a_ / 4.0 - u_inf_) / (spec.nu - 1);
  dv_ = 1.0 / (spec.nubar - 1);
  dx_ = 2.0 * spec.extent / (spec.nx - 1);
  if (du_ < 0.0) throw std::invalid_argument("chart grid: u range is empty");

  const std::size_t total =
      2ull * spec.nu * spec.nubar * static_cast<std::size_t>(spec.nx) * spec.nx;
  for (auto& f : data_) f.assign(total, 0.0);

  for (int p = 0; p < 2; ++p)
    for (int iu = 0; iu < spec.nu; ++iu)
      for (int jv = 0; jv < spec.nubar; ++jv)
        for (int ix = 0; ix < spec.nx; ++ix)
          for (int iy = 0; iy < spec.nx; ++iy) {
            const Patch patch = static_cast<Patch>(p);
            BasePoint bp{u_at(iu), ubar_at(jv), ang_at(patch, ix, iy)};
            const GeomJet gj = bg.eval(bp);
            const std::size_t k = index(patch, iu, jv, ix, iy);
            data_[kOmega][k] = gj.Omega.v;
            data_[kB1][k] = gj.b[0].v;
            data_[kB2][k] = gj.b[1].v;
            data_[kG11][k] = gj.g[0][0].v;
            data_[kG12][k] = gj.g[0][1].v;
            data_[kG22][k] = gj.g[1][1].v;
          }
}

GridChart::DetBounds GridChart::check_invariants(double tol) const {
  DetBounds bounds{1e300, -1e300};
  for (int p = 0; p < 2; ++p)
    for (int iu = 0; iu < spec_.nu; ++iu)
      for (int jv = 0; jv < spec_.nubar; ++jv)
        for (int ix = 0; ix < spec_.nx; ++ix)
          for (int iy = 0; iy < spec_.nx; ++iy) {
            const Patch patch = static_cast<Patch>(p);
            const std::size_t k = index(patch, iu, jv, ix, iy);
            const double om = data_[kOmega][k];
            const double det = data_[kG11][k] * data_[kG22][k] - data_[kG12][k] * data_[kG12][k];
            if (!(om > 0.0)) throw std::runtime_error("chart invariant: Omega must be positive");
            if (!(det > 0.0)) throw std::runtime_error("chart invariant: det g must be positive");
            const double au = -u_at(iu);
            const double ratio = det / (au * au * au * au);
            bounds.lo = std::min(bounds.lo, ratio);
            bounds.hi = std::max(bounds.hi, ratio);
            if (iu == 0 || jv == 0) {
              if (std::abs(om - 1.0) > tol || std::abs(data_[kB1][k]) > tol ||
                  std::abs(data_[kB2][k]) > tol)
                throw std::runtime_error(
                    "chart invariant: Omega = 1, b = 0 required on the initial surfaces");
            }
          }
  return bounds;
}

namespace {

// 4th-order first derivative on a uniform axis; `get(s)` reads the sample at
// offset s from the evaluation point, `lo`/`hi` are the admissible offsets.
template <class Get>
double stencil_d1(const Get& get, int lo, int hi, double h) {
  if (lo <= -2 && hi >= 2)
    return (get(-2) - 8.0 * get(-1) + 8.0 * get(1) - get(2)) / (12.0 * h);
  if (lo <= -1 && hi >= 3)
    return (-3.0 * get(-1) - 10.0 * get(0) + 18.0 * get(1) - 6.0 * get(2) + get(3)) / (12.0 * h);
  if (lo <= -3 && hi >= 1)
    return (3.0 * get(1) + 10.0 * get(0) - 18.0 * get(-1) + 6.0 * get(-2) - get(-3)) / (12.0 * h);
  if (hi >= 4)
    return (-25.0 * get(0) + 48.0 * get(1) - 36.0 * get(2) + 16.0 * get(3) - 3.0 * get(4)) /
           (12.0 * h);
  if (lo <= -4)
    return (25.0 * get(0) - 48.0 * get(-1) + 36.0 * get(-2) - 16.0 * get(-3) + 3.0 * get(-4)) /
           (12.0 * h);
  throw std::out_of_range("chart stencil: axis too short");
}

}  // namespace

GeomView<double> chart_view(const GridChart& chart, Patch patch, int iu, int jv, int ix, int iy) {
  const GridSpec& spec = chart.spec();
  if (iu < 0 || iu >= spec.nu || jv < 0 || jv >= spec.nubar || ix < 0 || ix >= spec.nx || iy < 0 ||
      iy >= spec.nx)
    throw std::out_of_range("chart point outside grid");

  GeomView<double> v{};
  v.u = chart.u_at(iu);
  v.Omega = chart.at(GridChart::kOmega, patch, iu, jv, ix, iy);
  v.b[0] = chart.at(GridChart::kB1, patch, iu, jv, ix, iy);
  v.b[1] = chart.at(GridChart::kB2, patch, iu, jv, ix, iy);
  v.g[0][0] = chart.at(GridChart::kG11, patch, iu, jv, ix, iy);
  v.g[0][1] = v.g[1][0] = chart.at(GridChart::kG12, patch, iu, jv, ix, iy);
  v.g[1][1] = chart.at(GridChart::kG22, patch, iu, jv, ix, iy);

  const double steps[4] = {chart.du(), chart.dubar(), chart.dx(), chart.dx()};
  const int pos[4] = {iu, jv, ix, iy};
  const int len[4] = {spec.nu, spec.nubar, spec.nx, spec.nx};

  auto deriv = [&](GridChart::Field f, int axis) {
    auto get = [&](int s) {
      int c[4] = {iu, jv, ix, iy};
      c[axis] += s;
      return chart.at(f, patch, c[0], c[1], c[2], c[3]);
    };
    return stencil_d1(get, -pos[axis], len[axis] - 1 - pos[axis], steps[axis]);
  };

  for (int k = 0; k < 4; ++k) {
    v.dOmega[k] = deriv(GridChart::kOmega, k);
    v.db[0][k] = deriv(GridChart::kB1, k);
    v.db[1][k] = deriv(GridChart::kB2, k);
    v.dg[0][0][k] = deriv(GridChart::kG11, k);
    v.dg[0][1][k] = v.dg[1][0][k] = deriv(GridChart::kG12, k);
    v.dg[1][1][k] = deriv(GridChart::kG22, k);
  }
  return v;
}

RicciCoeffs ricci_from_chart(const GridChart& chart, Patch patch, int iu, int jv, int ix, int iy) {
  const auto view = chart_view(chart, patch, iu, jv, ix, iy);
  const double det = view.g[0][0] * view.g[1][1] - view.g[0][1] * view.g[1][0];
  if (!(det > 0.0)) throw std::runtime_error("ricci_from_chart: metric not invertible here");
  return ricci_from_view(view);
}

FrameConnection frame_connection_from_chart(const GridChart& chart, Patch patch, int iu, int jv,
                                            int ix, int iy) {
  const auto view = chart_view(chart, patch, iu, jv, ix, iy);
  return frame_table_from_view(view, ricci_from_view(view));
}

namespace {
void put_value(std::ostream& os, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  os << buf;
}
const char* kFieldNames[GridChart::kNumFields] = {"Omega", "b1", "b2", "g11", "g12", "g22"};
}  // namespace

void GridChart::dump(std::ostream& os) const {
  os << "dnv-chart 1\n";
  os << "a ";
  put_value(os, a_);
  os << " u_inf ";
  put_value(os, u_inf_);
  os << "\n";
  os << "grid " << spec_.nu << " " << spec_.nubar << " " << spec_.nx << " ";
  put_value(os, spec_.extent);
  os << "\n";
  for (int f = 0; f < kNumFields; ++f) {
    os << "field " << kFieldNames[f] << " shape 2 " << spec_.nu << " " << spec_.nubar << " "
       << spec_.nx << " " << spec_.nx << "\n";
    const auto& vals = data_[f];
    for (std::size_t i = 0; i < vals.size(); ++i) {
      put_value(os, vals[i]);
      os << ((i + 1) % 8 == 0 ? '\n' : ' ');
    }
    if (!vals.empty() && vals.size() % 8 != 0) os << '\n';
  }
}

GridChart GridChart::restore(std::istream& is) {
  GridChart chart;
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "dnv-chart" || version != 1)
    throw std::runtime_error("chart restore: unrecognized header");
  std::string key;
  is >> key >> chart.a_ >> key >> chart.u_inf_;
  is >> key >> chart.spec_.nu >> chart.spec_.nubar >> chart.spec_.nx >> chart.spec_.extent;
  chart.du_ = (-chart.a_ / 4.0 - chart.u_inf_) / (chart.spec_.nu - 1);
  chart.dv_ = 1.0 / (chart.spec_.nubar - 1);
  chart.dx_ = 2.0 * chart.spec_.extent / (chart.spec_.nx - 1);
  const std::size_t total = 2ull * chart.spec_.nu * chart.spec_.nubar *
                            static_cast<std::size_t>(chart.spec_.nx) * chart.spec_.nx;
  for (int f = 0; f < kNumFields; ++f) {
    std::string name;
    int dims[5];
    is >> key >> name >> tag >> dims[0] >> dims[1] >> dims[2] >> dims[3] >> dims[4];
    if (key != "field" || name != kFieldNames[f])
      throw std::runtime_error("chart restore: field order mismatch");
    chart.data_[f].resize(total);
    for (auto& x : chart.data_[f]) is >> x;
  }
  if (!is) throw std::runtime_error("chart restore: truncated stream");
  return chart;
}

namespace {

double tensor2_norm(const std::array<std::array<double, 2>, 2>& ginv,
                    const std::array<std::array<double, 2>, 2>& w) {
  double s = 0.0;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int C = 0; C < 2; ++C)
        for (int D = 0; D < 2; ++D) s += ginv[A][C] * ginv[B][D] * w[A][B] * w[C][D];
  return std::sqrt(std::max(0.0, s));
}

double vec_norm_lowered(const std::array<std::array<double, 2>, 2>& ginv,
                        const std::array<double, 2>& w) {
  double s = 0.0;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) s += ginv[A][B] * w[A] * w[B];
  return std::sqrt(std::max(0.0, s));
}

}  // namespace

double HierarchyReport::ratio(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.ratio;
  throw std::out_of_range("no such hierarchy entry: " + name);
}

HierarchyReport bootstrap_check(const Background& bg, const GridSpec& spec, double constant) {
  const double a = bg.a();
  const double sqrt_a = std::sqrt(a);
  HierarchyReport rep;
  rep.constant = constant;
  rep.det_ratio_lo = 1e300;
  rep.det_ratio_hi = -1e300;

  enum {
    kChiHat = 0, kChibarHat, kEta, kEtabar, kOmegabar, kTrChibarTilde, kTrChi, kLapse, kShift,
    kCount
  };
  const char* names[kCount] = {"chi_hat",        "chibar_hat", "eta",   "etabar", "omegabar",
                               "trchibar_tilde", "trchi",      "lapse", "shift"};
  double worst[kCount] = {0.0};

  const double du = (-a / 4.0 - bg.u_inf()) / (spec.nu - 1);
  const double dv = 1.0 / (spec.nubar - 1);
  const double dx = 2.0 * spec.extent / (spec.nx - 1);

  for (int p = 0; p < 2; ++p)
    for (int iu = 0; iu < spec.nu; ++iu)
      for (int jv = 0; jv < spec.nubar; ++jv)
        for (int ix = 0; ix < spec.nx; ++ix)
          for (int iy = 0; iy < spec.nx; ++iy) {
            BasePoint bp{bg.u_inf() + du * iu, dv * jv,
                         {static_cast<Patch>(p), -spec.extent + dx * ix, -spec.extent + dx * iy}};
            const GeomJet gj = bg.eval(bp);
            const auto view = geom_view(gj, bp.u);
            const auto rc = ricci_from_view(view);
            std::array<std::array<double, 2>, 2> ginv;
            invert2(view.g, ginv);

            const double au = -bp.u;
            const double r = bp.ubar - bp.u;
            const double det = view.g[0][0] * view.g[1][1] - view.g[0][1] * view.g[1][0];
            rep.det_ratio_lo = std::min(rep.det_ratio_lo, det / (au * au * au * au));
            rep.det_ratio_hi = std::max(rep.det_ratio_hi, det / (au * au * au * au));

            worst[kChiHat] =
                std::max(worst[kChiHat], tensor2_norm(ginv, rc.chi_hat) * au / sqrt_a);
            worst[kChibarHat] =
                std::max(worst[kChibarHat], tensor2_norm(ginv, rc.chibar_hat) * au * au / sqrt_a);
            worst[kEta] = std::max(worst[kEta], vec_norm_lowered(ginv, rc.eta) * au * au / sqrt_a);
            worst[kEtabar] =
                std::max(worst[kEtabar], vec_norm_lowered(ginv, rc.etabar) * au * au / sqrt_a);
            worst[kOmegabar] =
                std::max(worst[kOmegabar], std::abs(rc.omegabar) * au * au * au / a);
            // Trace deviations vs the exact round values.
            const double tilde_round = 2.0 * bp.ubar / (r * au);
            worst[kTrChibarTilde] = std::max(
                worst[kTrChibarTilde], std::abs(rc.tr_chibar_tilde - tilde_round) * au * au);
            worst[kTrChi] =
                std::max(worst[kTrChi], std::abs(rc.tr_chi - 2.0 / r) * au * au * au / a);
            const double om2 = view.Omega * view.Omega;
            worst[kLapse] = std::max(worst[kLapse], std::abs(1.0 - 1.0 / om2) * au * au / a);
            // |b|_g with lowered components g_AB b^B.
            double bb = 0.0;
            for (int A = 0; A < 2; ++A)
              for (int B = 0; B < 2; ++B) bb += view.g[A][B] * view.b[A] * view.b[B];
            worst[kShift] = std::max(worst[kShift], std::sqrt(std::max(0.0, bb)) * sqrt_a);
          }

  rep.pass = true;
  for (int k = 0; k < kCount; ++k) {
    rep.entries.push_back({names[k], worst[k]});
    if (worst[k] > constant) rep.pass = false;
  }
  return rep;
}

}  // namespace dnv
