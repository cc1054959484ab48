#ifndef DNV_JET_HPP_
#define DNV_JET_HPP_

// Small forward-mode jets. Geometry generators are written once in jet
// arithmetic so every field comes with exact partial derivatives; no
// hand-differentiated formulas and no finite differencing inside the
// analytic backgrounds.

#include <array>
#include <cmath>
#include <cstddef>

namespace dnv {

// Second-order jet in N variables: value, gradient, and (symmetric) Hessian.
// The Hessian is stored as the lower triangle, row-major: h[i][j] for j<=i
// lives at index i*(i+1)/2 + j.
template <int N>
struct Jet2 {
  static constexpr int kHess = N * (N + 1) / 2;

  double v = 0.0;
  std::array<double, N> d{};
  std::array<double, kHess> h{};

  Jet2() = default;
  explicit Jet2(double value) : v(value) {}

  static Jet2 variable(double value, int index) {
    Jet2 j(value);
    j.d[index] = 1.0;
    return j;
  }

  static constexpr int hidx(int i, int j) {
    return (i >= j) ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }
  double hess(int i, int j) const { return h[hidx(i, j)]; }
};

template <int N>
Jet2<N> operator+(const Jet2<N>& a, const Jet2<N>& b) {
  Jet2<N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int i = 0; i < Jet2<N>::kHess; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

template <int N>
Jet2<N> operator-(const Jet2<N>& a, const Jet2<N>& b) {
  Jet2<N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  for (int i = 0; i < Jet2<N>::kHess; ++i) r.h[i] = a.h[i] - b.h[i];
  return r;
}

template <int N>
Jet2<N> operator-(const Jet2<N>& a) {
  Jet2<N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  for (int i = 0; i < Jet2<N>::kHess; ++i) r.h[i] = -a.h[i];
  return r;
}

template <int N>
Jet2<N> operator*(const Jet2<N>& a, const Jet2<N>& b) {
  Jet2<N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j)
      r.h[Jet2<N>::hidx(i, j)] = a.hess(i, j) * b.v + a.v * b.hess(i, j) +
                                 a.d[i] * b.d[j] + a.d[j] * b.d[i];
  return r;
}

template <int N> Jet2<N> operator+(const Jet2<N>& a, double s) { Jet2<N> r = a; r.v += s; return r; }
template <int N> Jet2<N> operator+(double s, const Jet2<N>& a) { return a + s; }
template <int N> Jet2<N> operator-(const Jet2<N>& a, double s) { Jet2<N> r = a; r.v -= s; return r; }
template <int N> Jet2<N> operator-(double s, const Jet2<N>& a) { return (-a) + s; }
template <int N>
Jet2<N> operator*(const Jet2<N>& a, double s) {
  Jet2<N> r(a.v * s);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * s;
  for (int i = 0; i < Jet2<N>::kHess; ++i) r.h[i] = a.h[i] * s;
  return r;
}
template <int N> Jet2<N> operator*(double s, const Jet2<N>& a) { return a * s; }

// Composition with a scalar function g: result = g(a), given g', g''.
template <int N>
Jet2<N> compose(const Jet2<N>& a, double g, double g1, double g2) {
  Jet2<N> r(g);
  for (int i = 0; i < N; ++i) r.d[i] = g1 * a.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j)
      r.h[Jet2<N>::hidx(i, j)] = g1 * a.hess(i, j) + g2 * a.d[i] * a.d[j];
  return r;
}

template <int N>
Jet2<N> inv(const Jet2<N>& a) {
  const double iv = 1.0 / a.v;
  return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}

template <int N> Jet2<N> operator/(const Jet2<N>& a, const Jet2<N>& b) { return a * inv(b); }
template <int N> Jet2<N> operator/(const Jet2<N>& a, double s) { return a * (1.0 / s); }
template <int N> Jet2<N> operator/(double s, const Jet2<N>& a) { return inv(a) * s; }

template <int N>
Jet2<N> sqrt(const Jet2<N>& a) {
  const double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

template <int N>
Jet2<N> log(const Jet2<N>& a) {
  return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

template <int N>
Jet2<N> exp(const Jet2<N>& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}

// First-order jet in N variables.
template <int N>
struct Jet1 {
  double v = 0.0;
  std::array<double, N> d{};

  Jet1() = default;
  explicit Jet1(double value) : v(value) {}

  static Jet1 variable(double value, int index) {
    Jet1 j(value);
    j.d[index] = 1.0;
    return j;
  }
};

template <int N>
Jet1<N> operator+(const Jet1<N>& a, const Jet1<N>& b) {
  Jet1<N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
template <int N>
Jet1<N> operator-(const Jet1<N>& a, const Jet1<N>& b) {
  Jet1<N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
template <int N>
Jet1<N> operator-(const Jet1<N>& a) {
  Jet1<N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}
template <int N>
Jet1<N> operator*(const Jet1<N>& a, const Jet1<N>& b) {
  Jet1<N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
template <int N> Jet1<N> operator+(const Jet1<N>& a, double s) { Jet1<N> r = a; r.v += s; return r; }
template <int N> Jet1<N> operator+(double s, const Jet1<N>& a) { return a + s; }
template <int N> Jet1<N> operator-(const Jet1<N>& a, double s) { Jet1<N> r = a; r.v -= s; return r; }
template <int N> Jet1<N> operator-(double s, const Jet1<N>& a) { return (-a) + s; }
template <int N>
Jet1<N> operator*(const Jet1<N>& a, double s) {
  Jet1<N> r(a.v * s);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * s;
  return r;
}
template <int N> Jet1<N> operator*(double s, const Jet1<N>& a) { return a * s; }
template <int N>
Jet1<N> inv(const Jet1<N>& a) {
  const double iv = 1.0 / a.v;
  Jet1<N> r(iv);
  for (int i = 0; i < N; ++i) r.d[i] = -iv * iv * a.d[i];
  return r;
}
template <int N> Jet1<N> operator/(const Jet1<N>& a, const Jet1<N>& b) { return a * inv(b); }
template <int N> Jet1<N> operator/(const Jet1<N>& a, double s) { return a * (1.0 / s); }
template <int N> Jet1<N> operator/(double s, const Jet1<N>& a) { return inv(a) * s; }

using GJet = Jet2<4>;   // geometry jets: variables (u, ubar, x1, x2)
using SJet = Jet1<4>;   // spatial first-order jets, same variable order
using PJet = Jet1<7>;   // phase-space jets: (u, ubar, x1, x2, p1, p2, p3)

}  // namespace dnv

#endif  // DNV_JET_HPP_
