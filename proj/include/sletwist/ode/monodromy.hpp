#pragma once

// Monodromy of a second-order ODE basis by numerical continuation: integrate
// the first-order system around a clockwise circle and re-express the
// continued basis in the original one.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "sletwist/errors.hpp"
#include "sletwist/ode/finite_difference.hpp"
#include "sletwist/ode/specs.hpp"

namespace sletwist {

struct Mat2 {
  cplx m[2][2];
};

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

inline cplx mat2_det(const Mat2& a) {
  return a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
}

struct MonodromyResult {
  Mat2 mat;            // continued f_i = sum_j mat[i][j] f_j
  cplx base;           // expansion point of the basis
  cplx center;         // encircled singularity
  cplx det;            // det(mat)
  cplx det_expected;   // exp(2 pi i Res_center p), Wronskian consistency
};

namespace detail {

using State4 = std::array<cplx, 4>;   // columns (f,f') of both solutions

// Dormand-Prince 5(4) step on dy/dt = rhs(t,y); returns err estimate
struct Rk45Step {
  State4 y5;
  double err;
};

template <class Rhs>
Rk45Step rk45_step(const Rhs& rhs, double t, const State4& y, double h) {
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                   e3 = 500.0 / 1113 - 7571.0 / 16695,
                   e4 = 125.0 / 192 - 393.0 / 640,
                   e5 = -2187.0 / 6784 + 92097.0 / 339200,
                   e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  const auto axpy = [](const State4& base, double c, const State4& k) {
    State4 r = base;
    for (int i = 0; i < 4; ++i) r[i] += c * k[i];
    return r;
  };

  const State4 k1 = rhs(t, y);
  const State4 k2 = rhs(t + h / 5.0, axpy(y, h * a21, k1));
  State4 tmp = axpy(axpy(y, h * a31, k1), h * a32, k2);
  const State4 k3 = rhs(t + 3.0 * h / 10.0, tmp);
  tmp = axpy(axpy(axpy(y, h * a41, k1), h * a42, k2), h * a43, k3);
  const State4 k4 = rhs(t + 4.0 * h / 5.0, tmp);
  tmp = axpy(axpy(axpy(axpy(y, h * a51, k1), h * a52, k2), h * a53, k3),
             h * a54, k4);
  const State4 k5 = rhs(t + 8.0 * h / 9.0, tmp);
  tmp = axpy(axpy(axpy(axpy(axpy(y, h * a61, k1), h * a62, k2), h * a63, k3),
                  h * a64, k4),
             h * a65, k5);
  const State4 k6 = rhs(t + h, tmp);

  Rk45Step out;
  for (int i = 0; i < 4; ++i)
    out.y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
  const State4 k7 = rhs(t + h, out.y5);

  double err = 0.0;
  for (int i = 0; i < 4; ++i) {
    const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                        e6 * k6[i] + e7 * k7[i]);
    const double sc =
        1e-13 + 1e-10 * std::max(std::abs(y[i]), std::abs(out.y5[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  out.err = err;
  return out;
}

// integrate dY/dt = x'(t) A(x(t)) Y over t in [0,1]
template <class Path, class PathDot>
void integrate_leg(const OdeSpec& spec, const Path& x_of_t,
                   const PathDot& xdot_of_t, State4& y, double max_dt) {
  const auto rhs = [&](double t, const State4& s) -> State4 {
    const cplx x = x_of_t(t);
    const cplx dx = xdot_of_t(t);
    const cplx p = spec.p(x), q = spec.q(x);
    // columns (f, f'): f_dot = dx f', f'_dot = dx (-q f - p f')
    return State4{dx * s[1], dx * (-q * s[0] - p * s[1]), dx * s[3],
                  dx * (-q * s[2] - p * s[3])};
  };
  double t = 0.0, h = max_dt;
  while (1.0 - t > 1e-12) {
    if (h < 1e-13)
      throw numeric_error(
          "monodromy: step-size underflow near singularity (label " +
          spec.label + ")");
    const double hstep = std::min(h, 1.0 - t);
    const auto step = rk45_step(rhs, t, y, hstep);
    const double grow =
        0.9 * std::pow(std::max(step.err, 1e-16), -0.2);
    if (step.err <= 1.0) {
      t += hstep;
      y = step.y5;
      h = std::min(hstep * std::min(5.0, std::max(0.2, grow)), max_dt);
    } else {
      h = hstep * std::max(0.05, grow);
    }
  }
}

// (1/2 pi i) contour integral of p on a small circle about s
inline cplx residue_at(const std::function<cplx(cplx)>& p, cplx s,
                       double radius) {
  constexpr int n = 128;
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    const cplx e = std::polar(radius, th);
    acc += p(s + e) * e;
  }
  return acc / static_cast<double>(n);
}

}   // namespace detail

// continue the basis clockwise once around the circle |x - loop_center| =
// loop_radius, entering and leaving along the radial segment through base
inline Mat2 continue_basis_loop(const OdeSpec& spec, const CplxFn& f1,
                                const CplxFn& f2, cplx loop_center,
                                double loop_radius, cplx base) {
  const cplx rel = base - loop_center;
  if (std::abs(rel) < loop_radius)
    throw contract_error("continue_basis_loop: base inside the loop");
  const cplx entry = loop_center + loop_radius * rel / std::abs(rel);

  // basis values and FD derivatives at the base point
  const double hfd =
      1e-4 * std::min({std::abs(base), std::abs(base - 1.0), 1.0});
  const auto j1c = detail::stencil5(f1, base, hfd);
  const auto j1f = detail::stencil5(f1, base, 0.5 * hfd);
  const auto j2c = detail::stencil5(f2, base, hfd);
  const auto j2f = detail::stencil5(f2, base, 0.5 * hfd);
  const cplx v0[2][2] = {
      {j1c.f, j2c.f},
      {detail::richardson(j1c.d1, j1f.d1, 4),
       detail::richardson(j2c.d1, j2f.d1, 4)}};

  detail::State4 y = {v0[0][0], v0[1][0], v0[0][1], v0[1][1]};

  // leg in: base -> entry
  detail::integrate_leg(
      spec, [&](double t) { return base + t * (entry - base); },
      [&](double) { return entry - base; }, y, 1.0 / 64.0);
  // clockwise circle: angle decreases by 2 pi; >= 720 nodes
  const double th0 = std::arg(rel);
  detail::integrate_leg(
      spec,
      [&](double t) {
        return loop_center +
               std::polar(loop_radius, th0 - 2.0 * std::numbers::pi * t);
      },
      [&](double t) {
        return cplx(0.0, -2.0 * std::numbers::pi) *
               std::polar(loop_radius, th0 - 2.0 * std::numbers::pi * t);
      },
      y, 1.0 / 720.0);
  // leg out: entry -> base
  detail::integrate_leg(
      spec, [&](double t) { return entry + t * (base - entry); },
      [&](double) { return base - entry; }, y, 1.0 / 64.0);

  // solve V0 M^T = V1 column by column
  const cplx v1[2][2] = {{y[0], y[2]}, {y[1], y[3]}};
  const cplx det = v0[0][0] * v0[1][1] - v0[0][1] * v0[1][0];
  if (std::abs(det) == 0.0)
    throw numeric_error("continue_basis_loop: basis Wronskian vanished");
  Mat2 out;
  for (int j = 0; j < 2; ++j) {
    // column j of V1 = V0 * (row j of M)^T
    const cplx a = (v1[0][j] * v0[1][1] - v1[1][j] * v0[0][1]) / det;
    const cplx b = (v1[1][j] * v0[0][0] - v1[0][j] * v0[1][0]) / det;
    out.m[j][0] = a;
    out.m[j][1] = b;
  }
  return out;
}

// clockwise monodromy around center in {0,1}; radius 0.5 |base - center|
inline MonodromyResult monodromy(const OdeSpec& spec, const CplxFn& f1,
                                 const CplxFn& f2, cplx center, cplx base) {
  const double dist = std::abs(base - center);
  if (dist == 0.0)
    throw contract_error("monodromy: base coincides with the singularity");
  MonodromyResult r;
  r.base = base;
  r.center = center;
  r.mat = continue_basis_loop(spec, f1, f2, center, 0.5 * dist, base);
  r.det = mat2_det(r.mat);
  const cplx res = detail::residue_at(spec.p, center, 0.05 * dist);
  r.det_expected = std::exp(cplx(0.0, 2.0 * std::numbers::pi) * res);
  return r;
}

// Closed-form clockwise monodromy of the (F11, F31) block basis around x=0:
// F11 is single-valued there, F31 carries x^{kappa/2-1}.
inline Mat2 block_monodromy_zero(double kappa) {
  check_kappa_range(kappa);
  const cplx ph = std::exp(cplx(0.0, -std::numbers::pi * kappa));
  return Mat2{{{cplx(1.0), cplx(0.0)}, {cplx(0.0), ph}}};
}

// Closed-form clockwise monodromy of (F11, F31) around x=1.
inline Mat2 block_monodromy_one(double kappa) {
  check_kappa_range(kappa);
  const double q = 0.25 * std::numbers::pi * kappa;
  const double sec = 1.0 / std::cos(q);
  const double tan = std::tan(q);
  const cplx e1 = std::exp(cplx(0.0, q));
  const cplx e2 = std::exp(cplx(0.0, 2.0 * q));
  const cplx i(0.0, 1.0);
  return Mat2{{{cplx(sec), i * e1 * tan}, {-i * e1 * tan, e2 * sec}}};
}

}   // namespace sletwist
