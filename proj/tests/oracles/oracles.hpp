// Copyright 2026 The sqcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. They share no code with the library
// and use plain std::vector storage so that a defect in the library's linear
// algebra or integrators cannot hide behind the same defect here.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using RealMat = std::vector<std::vector<double>>;
using CplxMat = std::vector<std::vector<cplx>>;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(RealMat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

/// Eigenvalues of a Hermitian matrix through the real embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is the Hermitian one doubled.
inline std::vector<double> hermitian_eigenvalues(const CplxMat& h) {
  const std::size_t n = h.size();
  RealMat big(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big[i][j] = h[i][j].real();
      big[i + n][j + n] = h[i][j].real();
      big[i][j + n] = -h[i][j].imag();
      big[i + n][j] = h[i][j].imag();
    }
  }
  const auto doubled = jacobi_eigenvalues(big);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = doubled[2 * i];
  return out;
}

using State = std::vector<cplx>;
using Rhs = std::function<void(double, const State&, State&)>;

/// Adaptive Dormand-Prince 5(4). Returns the state at every time in `times`
/// (ascending, starting at t0 = times.front()).
inline std::vector<State> dopri5(const Rhs& f, State y, const std::vector<double>& times,
                                 double rtol = 1e-11, double atol = 1e-13) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t n = y.size();
  std::vector<State> out;
  out.push_back(y);
  State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n);
  double t = times.front();
  double h = 1e-3;
  f(t, y, k1);
  for (std::size_t idx = 1; idx < times.size(); ++idx) {
    const double target = times[idx];
    while (t < target) {
      if (t + h > target) h = target - t;
      const auto stage = [&](State& dst, std::initializer_list<std::pair<double, const State*>> terms) {
        for (std::size_t i = 0; i < n; ++i) {
          cplx acc = y[i];
          for (const auto& [coef, k] : terms) acc += h * coef * (*k)[i];
          dst[i] = acc;
        }
      };
      stage(tmp, {{a21, &k1}});
      f(t + c2 * h, tmp, k2);
      stage(tmp, {{a31, &k1}, {a32, &k2}});
      f(t + c3 * h, tmp, k3);
      stage(tmp, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
      f(t + c4 * h, tmp, k4);
      stage(tmp, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
      f(t + c5 * h, tmp, k5);
      stage(tmp, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
      f(t + h, tmp, k6);
      stage(y5, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      f(t + h, y5, k7);
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
        const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err = std::max(err, std::abs(e) / scale);
      }
      if (err <= 1.0) {
        t += h;
        y = y5;
        k1 = k7;
      }
      const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h *= factor;
      if (h < 1e-14) throw std::runtime_error("dopri5: step underflow");
    }
    out.push_back(y);
  }
  return out;
}

/// Schrodinger right-hand side d psi/dt = -i 2 pi H(t) psi.
inline Rhs schrodinger(std::function<CplxMat(double)> h) {
  return [h = std::move(h)](double t, const State& y, State& dy) {
    const auto m = h(t);
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * y[j];
      dy[i] = cplx(0.0, -2.0 * std::numbers::pi) * acc;
    }
  };
}

struct Jump {
  CplxMat op;
  double rate;
};

/// Lindblad right-hand side on row-major vec(rho).
inline Rhs lindblad(std::function<CplxMat(double)> h, std::vector<Jump> jumps) {
  return [h = std::move(h), jumps = std::move(jumps)](double t, const State& y, State& dy) {
    const auto m = h(t);
    const std::size_t n = m.size();
    const auto rho = [&](std::size_t i, std::size_t j) { return y[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cplx comm = 0.0;
        for (std::size_t k = 0; k < n; ++k) comm += m[i][k] * rho(k, j) - rho(i, k) * m[k][j];
        dy[i * n + j] = cplx(0.0, -2.0 * std::numbers::pi) * comm;
      }
    }
    for (const auto& jump : jumps) {
      const auto& l = jump.op;
      // L rho L^+ - (L^+ L rho + rho L^+ L) / 2
      CplxMat ldl(n, std::vector<cplx>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) ldl[i][j] += std::conj(l[k][i]) * l[k][j];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          cplx acc = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) acc += l[i][a] * rho(a, b) * std::conj(l[j][b]);
          for (std::size_t k = 0; k < n; ++k) acc -= 0.5 * (ldl[i][k] * rho(k, j) + rho(i, k) * ldl[k][j]);
          dy[i * n + j] += jump.rate * acc;
        }
      }
    }
  };
}

/// Golden-section minimum of a unimodal function on [a, b].
inline double golden_min(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-12) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  while (std::abs(b - a) > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  return 0.5 * (a + b);
}

/// All local minima of f on [lo, hi]: bracket on a fine sample grid, then
/// golden-section refinement inside each bracket.
inline std::vector<double> local_minima(const std::function<double(double)>& f, double lo,
                                        double hi, int samples = 20000) {
  std::vector<double> out;
  const double dx = (hi - lo) / samples;
  for (int i = 1; i < samples; ++i) {
    const double x = lo + i * dx;
    if (f(x) < f(x - dx) && f(x) <= f(x + dx)) out.push_back(golden_min(f, x - dx, x + dx));
  }
  return out;
}

/// Nelder-Mead simplex minimization in two dimensions.
inline std::pair<double, double> nelder_mead_2d(const std::function<double(double, double)>& f,
                                                double x0, double y0, double scale = 0.3) {
  struct P {
    double x, y, v;
  };
  std::vector<P> s{{x0, y0, f(x0, y0)}, {x0 + scale, y0, f(x0 + scale, y0)},
                   {x0, y0 + scale, f(x0, y0 + scale)}};
  for (int it = 0; it < 20000; ++it) {
    std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.v < b.v; });
    if (std::abs(s[2].v - s[0].v) < 1e-15 && std::hypot(s[2].x - s[0].x, s[2].y - s[0].y) < 1e-10) break;
    const double cx = 0.5 * (s[0].x + s[1].x);
    const double cy = 0.5 * (s[0].y + s[1].y);
    const auto at = [&](double t) {
      const double x = cx + t * (s[2].x - cx);
      const double y = cy + t * (s[2].y - cy);
      return P{x, y, f(x, y)};
    };
    const P r = at(-1.0);
    if (r.v < s[0].v) {
      const P e = at(-2.0);
      s[2] = e.v < r.v ? e : r;
    } else if (r.v < s[1].v) {
      s[2] = r;
    } else {
      const P c = at(r.v < s[2].v ? -0.5 : 0.5);
      if (c.v < std::min(r.v, s[2].v)) {
        s[2] = c;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].x = 0.5 * (s[k].x + s[0].x);
          s[k].y = 0.5 * (s[k].y + s[0].y);
          s[k].v = f(s[k].x, s[k].y);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.v < b.v; });
  return {s[0].x, s[0].y};
}

/// One-sided spectrum of a symmetric telegraph signal with amplitude v and
/// flip rate gamma: autocorrelation v^2 exp(-2 gamma |tau|).
inline double telegraph_psd(double v, double gamma, double f) {
  const double w = 2.0 * std::numbers::pi * f;
  return 2.0 * v * v * 4.0 * gamma / (4.0 * gamma * gamma + w * w);
}

}  // namespace oracle
